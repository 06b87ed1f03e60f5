#include "zerocodec/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <stdexcept>

namespace zc {

namespace {

constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 22;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto f = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : f)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

// lowest-weight primitive polynomials over GF(2), bit i = coefficient of z^i
constexpr std::uint64_t kBinaryPrimitive[17] = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, m);
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t v) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::uint64_t> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(v); it != memo.end()) return it->second;
    }
    std::uint64_t q = v < 2 ? 2 : v;
    while (!prime_power(q)) ++q;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(v, q);
    return q;
}

std::uint64_t smallest_prime_power_above(std::uint64_t w) { return smallest_prime_power_at_least(w + 1); }

std::uint64_t ceil_log2_pow(std::uint64_t q, std::uint64_t t) {
    if (t == 0 || q <= 1) return 0;
    BigInt v = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(t)) - 1;
    if (v == 0) return 0;
    return static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

struct Alg::Tables {
    std::vector<std::uint64_t> modpoly; // extension only
    std::vector<std::uint64_t> exp;     // exp[i] = alpha^i, i < 2(q-1)
    std::vector<std::uint64_t> log;     // log[0] unused
    std::uint64_t root = 0;             // prime fields without tables
};

Alg Alg::prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    Alg a;
    a.kind_ = AlgKind::Prime;
    a.q_ = a.p_ = p;
    a.m_ = 1;
    a.build_tables({});
    return a;
}

Alg Alg::group(std::uint64_t order) {
    if (order < 1) throw std::invalid_argument("group order must be positive");
    Alg a;
    a.kind_ = AlgKind::Group;
    a.q_ = order;
    a.p_ = order;
    a.m_ = 1;
    return a;
}

Alg Alg::binary(unsigned m, std::uint64_t poly) {
    if (m < 1 || m > 22) throw std::invalid_argument("GF(2^m): m out of range");
    std::vector<std::uint64_t> mp(m + 1);
    for (unsigned i = 0; i <= m; ++i) mp[i] = (poly >> i) & 1;
    if (mp[m] != 1) throw std::invalid_argument("GF(2^m): polynomial degree mismatch");
    Alg a;
    a.kind_ = m == 1 ? AlgKind::Prime : AlgKind::Extension;
    a.p_ = 2;
    a.m_ = m;
    a.q_ = std::uint64_t{1} << m;
    if (m == 1) return prime(2);
    a.build_tables(mp);
    return a;
}

Alg Alg::extension(std::uint64_t p, unsigned m) {
    if (m == 1) return prime(p);
    if (!is_prime(p)) throw std::invalid_argument("extension over non-prime");
    if (p == 2 && m <= 16) return binary(m, kBinaryPrimitive[m]);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    if (q > kMaxTableOrder) throw std::invalid_argument("field too large: " + std::to_string(q));
    // search monic polynomials in index order for a primitive one
    for (std::uint64_t low = 1; low < q; ++low) {
        std::vector<std::uint64_t> mp(m + 1);
        std::uint64_t v = low;
        for (unsigned i = 0; i < m; ++i) {
            mp[i] = v % p;
            v /= p;
        }
        mp[m] = 1;
        if (mp[0] == 0) continue;
        Alg a;
        a.kind_ = AlgKind::Extension;
        a.p_ = p;
        a.m_ = m;
        a.q_ = q;
        try {
            a.build_tables(mp);
            return a;
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

Alg Alg::field(std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return pp->second == 1 ? prime(pp->first) : extension(pp->first, pp->second);
}

void Alg::build_tables(std::vector<std::uint64_t> modpoly) {
    auto t = std::make_shared<Tables>();
    t->modpoly = std::move(modpoly);
    if (kind_ == AlgKind::Prime) {
        t->root = primitive_root(p_);
        if (q_ <= kMaxTableOrder) {
            t->exp.resize(2 * (q_ - 1) + 1);
            t->log.assign(q_, 0);
            std::uint64_t e = 1;
            for (std::uint64_t i = 0; i < q_ - 1; ++i) {
                t->exp[i] = e;
                t->log[e] = i;
                e = mulmod(e, t->root, p_);
            }
        }
    } else {
        if (q_ > kMaxTableOrder) throw std::invalid_argument("field too large");
        const auto& mp = t->modpoly;
        std::vector<std::uint64_t> pw(m_);
        pw[0] = 1;
        for (unsigned i = 1; i < m_; ++i) pw[i] = pw[i - 1] * p_;
        t->exp.resize(2 * (q_ - 1) + 1);
        t->log.assign(q_, q_);
        std::vector<std::uint64_t> d(m_, 0);
        d[0] = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            std::uint64_t idx = 0;
            for (unsigned j = 0; j < m_; ++j) idx += d[j] * pw[j];
            if (t->log[idx] != q_) throw std::domain_error("not primitive");
            t->exp[i] = idx;
            t->log[idx] = i;
            // d <- d * z mod modpoly
            std::uint64_t top = d[m_ - 1];
            for (unsigned j = m_ - 1; j > 0; --j) d[j] = d[j - 1];
            d[0] = 0;
            if (top)
                for (unsigned j = 0; j < m_; ++j) d[j] = (d[j] + (p_ - top) * mp[j]) % p_;
        }
        if (!(d[0] == 1 && std::all_of(d.begin() + 1, d.end(), [](auto x) { return x == 0; })))
            throw std::domain_error("not primitive");
    }
    if (!t->exp.empty())
        for (std::uint64_t i = q_ - 1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - (q_ - 1)];
    tab_ = std::move(t);
}

const std::vector<std::uint64_t>& Alg::modulus() const {
    static const std::vector<std::uint64_t> empty;
    return tab_ ? tab_->modpoly : empty;
}

std::string Alg::describe() const {
    switch (kind_) {
    case AlgKind::Group: return "Z_" + std::to_string(q_);
    case AlgKind::Prime: return "GF(" + std::to_string(q_) + ")";
    case AlgKind::Extension: return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
    }
    return "?";
}

Alg::Elem Alg::add(Elem a, Elem b) const {
    if (kind_ != AlgKind::Extension) {
        Elem s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    if (p_ == 2) return a ^ b;
    Elem r = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

Alg::Elem Alg::neg(Elem a) const {
    if (kind_ != AlgKind::Extension) return a == 0 ? 0 : q_ - a;
    if (p_ == 2) return a;
    Elem r = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

Alg::Elem Alg::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Alg::Elem Alg::mul(Elem a, Elem b) const {
    if (kind_ == AlgKind::Group) return mulmod(a, b, q_);
    if (a == 0 || b == 0) return 0;
    if (kind_ == AlgKind::Prime && tab_->exp.empty()) return mulmod(a, b, q_);
    return tab_->exp[tab_->log[a] + tab_->log[b]];
}

Alg::Elem Alg::inv(Elem a) const {
    if (kind_ == AlgKind::Group) throw std::domain_error("inverse in additive group");
    if (a == 0) throw std::domain_error("inverse of zero");
    if (kind_ == AlgKind::Prime && tab_->exp.empty()) return powmod(a, q_ - 2, q_);
    return tab_->exp[(q_ - 1 - tab_->log[a]) % (q_ - 1)];
}

Alg::Elem Alg::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Alg::Elem Alg::scale(std::uint64_t n, Elem a) const {
    if (kind_ != AlgKind::Extension) return mulmod(n % q_, a, q_);
    Elem r = 0;
    for (std::uint64_t i = 0; i < n % p_; ++i) r = add(r, a);
    return r;
}

Alg::Elem Alg::exp(std::uint64_t i) const {
    if (!is_field()) throw std::domain_error("exp in additive group");
    if (tab_->exp.empty()) return powmod(tab_->root, i, q_);
    return tab_->exp[i % (q_ - 1)];
}

std::uint64_t Alg::log(Elem a) const {
    if (!is_field() || a == 0) throw std::domain_error("log undefined");
    if (tab_->exp.empty()) throw std::domain_error("log table not available for this field size");
    return tab_->log[a];
}

Alg::Elem Alg::primitive() const { return exp(1); }

std::uint64_t smallest_field_order(std::uint64_t w, std::uint64_t t) {
    if (t == 1) return w + 1;
    return smallest_prime_power_above(w);
}

Alg smallest_field(std::uint64_t w, std::uint64_t t) {
    if (t == 1) return Alg::group(w + 1);
    return Alg::field(smallest_prime_power_above(w));
}

} // namespace zc
