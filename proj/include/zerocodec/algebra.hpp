#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerocodec/words.hpp"

namespace zc {

bool is_prime(std::uint64_t n);
// (p, m) with q = p^m, or nullopt
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);
std::uint64_t smallest_prime_power_above(std::uint64_t w);
std::uint64_t smallest_prime_power_at_least(std::uint64_t v);
// smallest L with 2^L >= q^t
std::uint64_t ceil_log2_pow(std::uint64_t q, std::uint64_t t);

enum class AlgKind { Prime, Extension, Group };

// A finite field GF(p^m) or the additive group Z_q. Elements are integer
// indices in [0, order). For extension fields the index is the polynomial
// basis value sum c_i p^i.
class Alg {
public:
    using Elem = std::uint64_t;

    static Alg prime(std::uint64_t p);
    static Alg extension(std::uint64_t p, unsigned m);
    // GF(2^m) with an explicit primitive polynomial, bit i = coefficient of z^i
    static Alg binary(unsigned m, std::uint64_t poly);
    static Alg group(std::uint64_t order);
    // any prime power
    static Alg field(std::uint64_t q);

    AlgKind kind() const { return kind_; }
    bool is_field() const { return kind_ != AlgKind::Group; }
    std::uint64_t order() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    // extension fields: coefficients of the defining polynomial (ascending, monic)
    const std::vector<std::uint64_t>& modulus() const;
    std::string describe() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    // n * a (repeated addition)
    Elem scale(std::uint64_t n, Elem a) const;

    // primitive element powers and discrete log; fields only
    Elem exp(std::uint64_t i) const;
    std::uint64_t log(Elem a) const;
    Elem primitive() const;

    friend bool operator==(const Alg& a, const Alg& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.modulus() == b.modulus();
    }

private:
    struct Tables;
    AlgKind kind_ = AlgKind::Prime;
    std::uint64_t q_ = 2, p_ = 2;
    unsigned m_ = 1;
    std::shared_ptr<const Tables> tab_;

    void build_tables(std::vector<std::uint64_t> modpoly);
};

// Group Z_{w+1} when t = 1, otherwise the smallest field with more than w elements.
Alg smallest_field(std::uint64_t w, std::uint64_t t);
std::uint64_t smallest_field_order(std::uint64_t w, std::uint64_t t);

// Polynomial with coefficients in an Alg, ascending degree, no trailing zeros.
struct Poly {
    std::vector<Alg::Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Alg::Elem> coeffs);
    static Poly one() { return Poly({1}); }
    static Poly monomial(std::size_t deg);

    bool is_zero() const { return c.empty(); }
    // -1 for the zero polynomial
    long deg() const { return static_cast<long>(c.size()) - 1; }
    Alg::Elem coef(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    void trim();

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

std::string to_string(const Poly& p);

Poly poly_add(const Alg& F, const Poly& a, const Poly& b);
Poly poly_sub(const Alg& F, const Poly& a, const Poly& b);
Poly poly_mul(const Alg& F, const Poly& a, const Poly& b);
Poly poly_scale(const Alg& F, const Poly& a, Alg::Elem s);
Poly poly_trunc(const Poly& a, std::size_t n);
Poly poly_mul_trunc(const Alg& F, const Poly& a, const Poly& b, std::size_t n);
// a^{-1} mod z^n, requires a(0) != 0
Poly poly_inv_series(const Alg& F, const Poly& a, std::size_t n);
std::pair<Poly, Poly> poly_divmod(const Alg& F, const Poly& a, const Poly& b);
Alg::Elem poly_eval(const Alg& F, const Poly& a, Alg::Elem x);
// product of (z - r) over the given points
Poly poly_from_roots(const Alg& F, const std::vector<Alg::Elem>& roots);
// Lagrange interpolation through (xs[i], ys[i])
Poly poly_interpolate(const Alg& F, const std::vector<Alg::Elem>& xs, const std::vector<Alg::Elem>& ys);

struct EeaStep {
    Poly r, u, v; // r = u a + v b
};
// Extended Euclid on (a, b), stopping at the first remainder of degree <= stop_deg.
EeaStep poly_eea(const Alg& F, const Poly& a, const Poly& b, long stop_deg);

// Support: sequence of distinct nonzero Alg elements indexing the word positions.
using Support = std::vector<Alg::Elem>;
// elements with index 1..n
Support default_support(std::size_t n, const Alg& F);

// sigma_X(z) = prod (1 - a z)^{x_a} mod z^{t+1}. In group mode returns (1, sum a x_a).
Poly sigma_poly(const Nat& x, const Support& s, std::size_t t, const Alg& F);

struct KeySolution {
    Poly sigma_neg; // deletions, deg <= tau_minus
    Poly sigma_pos; // insertions, deg <= tau_plus
};
// sigma_pos = ratio * sigma_neg mod z^{t+1}
std::optional<KeySolution> key_equation_solve(const Alg& F, const Poly& ratio, std::size_t t,
                                              std::size_t tau_minus, std::size_t tau_plus);

// multiplicities m_a with prod (1 - a z)^{m_a} = p
std::optional<Nat> root_unpack(const Alg& F, const Poly& p, const Support& s);

} // namespace zc
