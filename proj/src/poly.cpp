#include "zerocodec/algebra.hpp"

#include <stdexcept>

namespace zc {

Poly::Poly(std::vector<Alg::Elem> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::monomial(std::size_t deg) {
    Poly p;
    p.c.assign(deg + 1, 0);
    p.c[deg] = 1;
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.c[i]);
    }
    return s + "]";
}

Poly poly_add(const Alg& F, const Poly& a, const Poly& b) {
    std::vector<Alg::Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coef(i), b.coef(i));
    return Poly(std::move(r));
}

Poly poly_sub(const Alg& F, const Poly& a, const Poly& b) {
    std::vector<Alg::Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coef(i), b.coef(i));
    return Poly(std::move(r));
}

Poly poly_mul(const Alg& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Alg::Elem> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

Poly poly_scale(const Alg& F, const Poly& a, Alg::Elem s) {
    std::vector<Alg::Elem> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.mul(a.c[i], s);
    return Poly(std::move(r));
}

Poly poly_trunc(const Poly& a, std::size_t n) {
    if (a.c.size() <= n) return a;
    return Poly(std::vector<Alg::Elem>(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly poly_mul_trunc(const Alg& F, const Poly& a, const Poly& b, std::size_t n) {
    std::vector<Alg::Elem> r(n, 0);
    for (std::size_t i = 0; i < a.c.size() && i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size() && i + j < n; ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

Poly poly_inv_series(const Alg& F, const Poly& a, std::size_t n) {
    if (a.coef(0) == 0) throw std::domain_error("series inverse needs a nonzero constant term");
    const Alg::Elem i0 = F.inv(a.coef(0));
    std::vector<Alg::Elem> r(n, 0);
    if (n == 0) return {};
    r[0] = i0;
    for (std::size_t k = 1; k < n; ++k) {
        Alg::Elem s = 0;
        for (std::size_t j = 1; j <= k; ++j) s = F.add(s, F.mul(a.coef(j), r[k - j]));
        r[k] = F.neg(F.mul(s, i0));
    }
    return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Alg& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.deg() < b.deg()) return {Poly{}, a};
    std::vector<Alg::Elem> rem = a.c;
    std::vector<Alg::Elem> quo(a.c.size() - b.c.size() + 1, 0);
    const Alg::Elem lead_inv = F.inv(b.c.back());
    for (std::size_t i = quo.size(); i-- > 0;) {
        const Alg::Elem coef = F.mul(rem[i + b.c.size() - 1], lead_inv);
        quo[i] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) rem[i + j] = F.sub(rem[i + j], F.mul(coef, b.c[j]));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Alg::Elem poly_eval(const Alg& F, const Poly& a, Alg::Elem x) {
    Alg::Elem r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_from_roots(const Alg& F, const std::vector<Alg::Elem>& roots) {
    Poly p = Poly::one();
    for (auto r : roots) p = poly_mul(F, p, Poly({F.neg(r), 1}));
    return p;
}

Poly poly_interpolate(const Alg& F, const std::vector<Alg::Elem>& xs, const std::vector<Alg::Elem>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
    const Poly full = poly_from_roots(F, xs);
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        Poly basis = poly_divmod(F, full, Poly({F.neg(xs[i]), 1})).first;
        const Alg::Elem denom = poly_eval(F, basis, xs[i]);
        result = poly_add(F, result, poly_scale(F, basis, F.div(ys[i], denom)));
    }
    return result;
}

EeaStep poly_eea(const Alg& F, const Poly& a, const Poly& b, long stop_deg) {
    EeaStep prev{a, Poly::one(), Poly{}};
    EeaStep cur{b, Poly{}, Poly::one()};
    while (cur.r.deg() > stop_deg) {
        auto [q, rem] = poly_divmod(F, prev.r, cur.r);
        EeaStep next{rem, poly_sub(F, prev.u, poly_mul(F, q, cur.u)), poly_sub(F, prev.v, poly_mul(F, q, cur.v))};
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Support default_support(std::size_t n, const Alg& F) {
    if (n >= F.order()) throw std::invalid_argument("support larger than the nonzero elements of " + F.describe());
    Support s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i + 1;
    return s;
}

namespace {

Poly pow_trunc(const Alg& F, Poly base, std::uint64_t e, std::size_t n) {
    Poly r = Poly::one();
    while (e) {
        if (e & 1) r = poly_mul_trunc(F, r, base, n);
        e >>= 1;
        if (e) base = poly_mul_trunc(F, base, base, n);
    }
    return r;
}

} // namespace

Poly sigma_poly(const Nat& x, const Support& s, std::size_t t, const Alg& F) {
    if (x.size() != s.size()) throw std::invalid_argument("sigma_poly: word and support lengths differ");
    if (F.kind() == AlgKind::Group) {
        if (t > 1) throw std::invalid_argument("group mode only supports t = 1");
        Alg::Elem s1 = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s1 = F.add(s1, F.mul(s[i] % F.order(), x[i] % F.order()));
        return t == 0 ? Poly::one() : Poly({1, s1});
    }
    Poly acc = Poly::one();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0 || t == 0) continue;
        acc = poly_mul_trunc(F, acc, pow_trunc(F, Poly({1, F.neg(s[i])}), x[i], t + 1), t + 1);
    }
    return acc;
}

std::optional<KeySolution> key_equation_solve(const Alg& F, const Poly& ratio, std::size_t t,
                                              std::size_t tau_minus, std::size_t tau_plus) {
    if (!F.is_field()) throw std::invalid_argument("key equation needs a field");
    if (tau_minus + tau_plus > t) throw std::invalid_argument("tau_minus + tau_plus exceeds t");
    if (ratio.coef(0) == 0) throw std::domain_error("ratio constant term is not invertible");
    const Poly g = Poly::monomial(t + 1);
    const Poly r = poly_trunc(ratio, t + 1);
    EeaStep st = poly_eea(F, g, r, static_cast<long>(tau_plus));
    const Alg::Elem v0 = st.v.coef(0);
    if (v0 == 0 || st.r.is_zero()) return std::nullopt;
    const Alg::Elem norm = F.inv(v0);
    KeySolution sol{poly_scale(F, st.v, norm), poly_scale(F, st.r, norm)};
    if (sol.sigma_neg.deg() > static_cast<long>(tau_minus)) return std::nullopt;
    if (sol.sigma_pos.deg() > static_cast<long>(tau_plus)) return std::nullopt;
    if (poly_mul_trunc(F, r, sol.sigma_neg, t + 1) != poly_trunc(sol.sigma_pos, t + 1)) return std::nullopt;
    return sol;
}

std::optional<Nat> root_unpack(const Alg& F, const Poly& p, const Support& s) {
    if (p.coef(0) != 1) return std::nullopt;
    Nat m(s.size(), 0);
    Poly cur = p;
    for (std::size_t i = 0; i < s.size() && cur.deg() > 0; ++i) {
        const Alg::Elem a = s[i];
        const Alg::Elem root = F.inv(a);
        while (cur.deg() > 0 && poly_eval(F, cur, root) == 0) {
            // divide by (1 - a z): q_0 = p_0, q_j = p_j + a q_{j-1}
            std::vector<Alg::Elem> q(cur.c.size() - 1);
            Alg::Elem prev = 0;
            for (std::size_t j = 0; j < q.size(); ++j) {
                prev = F.add(cur.c[j], F.mul(a, prev));
                q[j] = prev;
            }
            cur = Poly(std::move(q));
            ++m[i];
        }
    }
    if (cur != Poly::one()) return std::nullopt;
    return m;
}

} // namespace zc
