#include "zerocodec/sigma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zc {

Poly CwSigmaCode::sigma_of(const Nat& x_hat) const { return sigma_poly(x_hat, support, t, alg); }

bool CwSigmaCode::contains(const Nat& x) const {
    if (x.size() != n || l1_weight(x) != w) return false;
    if (m != kUnbounded)
        for (auto d : x)
            if (d >= m) return false;
    Nat x_hat(x.begin(), x.end() - 1);
    return poly_trunc(sigma_of(x_hat), t + 1) == poly_trunc(sigma_tilde, t + 1);
}

BigInt pigeonhole_bound(std::uint64_t n, std::uint64_t w, std::uint64_t t) {
    const BigInt total = binomial(n, w);
    const BigInt classes = boost::multiprecision::pow(BigInt(smallest_field_order(w, t)), static_cast<unsigned>(t));
    return (total + classes - 1) / classes;
}

ConstructedCode construct_cw_code(std::size_t n, std::size_t w, std::size_t t, std::size_t max_n) {
    if (n > max_n) throw std::length_error("construct_cw_code: n above the enumeration bound");
    if (w > n) throw std::invalid_argument("construct_cw_code: w > n");
    ConstructedCode out;
    CwSigmaCode& c = out.code;
    c.alg = smallest_field(w, t);
    c.support = default_support(w, c.alg);
    c.t = t;
    c.n = w + 1;
    c.w = n - w;

    // all weight-w words in lexicographic order, bucketed by sigma
    std::map<std::vector<Alg::Elem>, std::vector<Bits>> classes;
    Bits x(n, 0);
    std::fill(x.end() - static_cast<std::ptrdiff_t>(w), x.end(), std::uint8_t{1});
    do {
        Poly s = poly_trunc(c.sigma_of(v_hat_map(x)), t + 1);
        std::vector<Alg::Elem> key(t + 1, 0);
        for (std::size_t i = 0; i <= t; ++i) key[i] = s.coef(i);
        classes[key].push_back(x);
    } while (std::next_permutation(x.begin(), x.end()));

    const std::vector<Alg::Elem>* best = nullptr;
    std::size_t best_size = 0;
    for (auto& [key, words] : classes) {
        if (words.size() > best_size) {
            best_size = words.size();
            best = &key;
        }
    }
    c.sigma_tilde = Poly(*best);
    out.words = std::move(classes[*best]);
    out.bound = pigeonhole_bound(n, w, t);
    return out;
}

ConstructedCode construct_balanced_code(std::size_t n, std::size_t t, std::size_t max_n) {
    if (t == 0) throw std::invalid_argument("balanced code needs t >= 1");
    return construct_cw_code(n, (n + 1) / 2, t - 1, max_n);
}

namespace {

std::optional<Nat> decode_group(const CwSigmaCode& code, const Nat& y_hat, std::size_t tau_minus,
                                std::size_t tau_plus) {
    const Alg& G = code.alg;
    const Alg::Elem have = code.sigma_of(y_hat).coef(1);
    const Alg::Elem want = code.sigma_tilde.coef(1);
    if (have == want) return y_hat;
    auto find = [&](Alg::Elem a) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < code.support.size(); ++i)
            if (code.support[i] % G.order() == a) return i;
        return std::nullopt;
    };
    if (tau_plus >= 1) {
        auto i = find(G.sub(have, want));
        if (i && y_hat[*i] > 0) {
            Nat x = y_hat;
            --x[*i];
            return x;
        }
    }
    if (tau_minus >= 1) {
        auto i = find(G.sub(want, have));
        if (i) {
            Nat x = y_hat;
            ++x[*i];
            return x;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Nat> decode_asymmetric(const CwSigmaCode& code, const Nat& y_hat, std::size_t tau_minus,
                                     std::size_t tau_plus) {
    if (tau_minus + tau_plus > code.t) throw std::invalid_argument("tau_minus + tau_plus exceeds t");
    if (y_hat.size() != code.support.size()) throw std::invalid_argument("decode_asymmetric: length mismatch");
    if (code.t == 0) return y_hat;
    if (code.alg.kind() == AlgKind::Group) return decode_group(code, y_hat, tau_minus, tau_plus);

    const Alg& F = code.alg;
    const std::size_t L = code.t + 1;
    const Poly sy = poly_trunc(code.sigma_of(y_hat), L);
    const Poly ratio = poly_mul_trunc(F, sy, poly_inv_series(F, code.sigma_tilde, L), L);
    auto sol = key_equation_solve(F, ratio, code.t, tau_minus, tau_plus);
    if (!sol) return std::nullopt;
    auto pos = root_unpack(F, sol->sigma_pos, code.support);
    auto neg = root_unpack(F, sol->sigma_neg, code.support);
    if (!pos || !neg) return std::nullopt;
    Nat x = y_hat;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((*pos)[i] > x[i]) return std::nullopt;
        x[i] = x[i] - (*pos)[i] + (*neg)[i];
    }
    return x;
}

CwDecodeResult decode_cw(const CwSigmaCode& code, const Nat& y) {
    CwDecodeResult fail{Nat(code.n, 0), false};
    if (y.size() != code.n) return fail;
    const auto t = static_cast<std::int64_t>(code.t);
    const std::int64_t delta = static_cast<std::int64_t>(l1_weight(y)) - static_cast<std::int64_t>(code.w);
    if (delta > t || -delta > t) return fail;
    const auto tau_minus = static_cast<std::size_t>((t - delta) / 2);
    const auto tau_plus = static_cast<std::size_t>((t + delta) / 2);
    Nat y_hat(y.begin(), y.end() - 1);
    auto x_hat = decode_asymmetric(code, y_hat, tau_minus, tau_plus);
    if (!x_hat) return fail;
    const std::uint64_t s = l1_weight(*x_hat);
    if (s > code.w) return fail;
    Nat x = *x_hat;
    x.push_back(code.w - s);
    if (!code.contains(x)) return fail;
    if (l1_sym(x, y) > code.t) return fail;
    return {std::move(x), true};
}

} // namespace zc
