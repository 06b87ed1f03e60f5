#include <doctest.h>

#include "zerocodec/algebra.hpp"

using namespace zc;

namespace {

void check_field_axioms(const Alg& F) {
    const auto q = F.order();
    for (Alg::Elem a = 0; a < q; ++a) {
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.mul(a, 1) == a);
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        for (Alg::Elem b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (Alg::Elem c = 0; c < q; c += 3) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
    // primitive element generates the multiplicative group
    std::vector<bool> seen(q, false);
    for (std::uint64_t i = 0; i + 1 < q; ++i) seen[F.exp(i)] = true;
    for (Alg::Elem a = 1; a < q; ++a) CHECK(seen[a]);
}

} // namespace

TEST_CASE("prime powers") {
    CHECK(smallest_prime_power_above(6) == 7);
    CHECK(smallest_prime_power_above(7) == 8);
    CHECK(smallest_prime_power_above(10) == 11);
    CHECK(smallest_prime_power_above(14) == 16);
    CHECK(smallest_prime_power_at_least(8) == 8);
    CHECK(ceil_log2_pow(8, 2) == 6);
    CHECK(ceil_log2_pow(11, 3) == 11);
    CHECK(ceil_log2_pow(2, 5) == 5);
    CHECK_FALSE(prime_power(12).has_value());
}

TEST_CASE("field axioms") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32}) {
        CAPTURE(q);
        check_field_axioms(Alg::field(q));
    }
}

TEST_CASE("GF(8) from z^3 + z + 1") {
    Alg F = Alg::binary(3, 0xB);
    // alpha^3 = alpha + 1
    CHECK(F.exp(3) == 0b011);
    CHECK(F.exp(7) == 1);
    CHECK(F == Alg::field(8));
}

TEST_CASE("polynomial arithmetic") {
    Alg F = Alg::field(7);
    Poly a({1, 2, 3}), b({4, 0, 1});
    auto [q, r] = poly_divmod(F, poly_add(F, poly_mul(F, a, b), Poly({5})), b);
    CHECK(q == a);
    CHECK(r == Poly({5}));
    Poly inv = poly_inv_series(F, a, 5);
    CHECK(poly_mul_trunc(F, a, inv, 5) == Poly::one());
    std::vector<Alg::Elem> xs{1, 2, 3}, ys{6, 0, 4};
    Poly p = poly_interpolate(F, xs, ys);
    for (int i = 0; i < 3; ++i) CHECK(poly_eval(F, p, xs[i]) == ys[i]);
}

TEST_CASE("sigma polynomial and key equation over GF(11)") {
    Alg F = Alg::field(11);
    Support s = default_support(6, F);
    Nat x{0, 2, 1, 0, 0, 1};
    Nat y{1, 2, 0, 0, 0, 2}; // +1 at a=1, -1 at a=3, +1 at a=6
    const std::size_t t = 3;
    Poly sx = sigma_poly(x, s, t, F), sy = sigma_poly(y, s, t, F);
    Poly ratio = poly_mul_trunc(F, sy, poly_inv_series(F, sx, t + 1), t + 1);
    auto sol = key_equation_solve(F, ratio, t, 1, 2);
    REQUIRE(sol);
    CHECK(root_unpack(F, sol->sigma_pos, s) == Nat{1, 0, 0, 0, 0, 1});
    CHECK(root_unpack(F, sol->sigma_neg, s) == Nat{0, 0, 1, 0, 0, 0});
}

TEST_CASE("group mode sigma") {
    Alg G = smallest_field(4, 1);
    CHECK(G.kind() == AlgKind::Group);
    CHECK(G.order() == 5);
    Poly s = sigma_poly(Nat{1, 0, 2, 1}, default_support(4, G), 1, G);
    CHECK(s.coef(1) == (1 + 6 + 4) % 5);
}
