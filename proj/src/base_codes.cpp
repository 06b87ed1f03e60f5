#include "zerocodec/base_codes.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "zerocodec/extract.hpp"

namespace zc {

char base_letter(BaseKind k) {
    switch (k) {
    case BaseKind::Identity: return 'I';
    case BaseKind::Repetition: return 'R';
    case BaseKind::DistinctWeight: return 'W';
    case BaseKind::LimitedMagnitude: return 'M';
    case BaseKind::RsBalanced: return 'S';
    case BaseKind::Recursive: return 'C';
    }
    return '?';
}

void Codec::check_info(const Bits& x) const {
    if (x.size() != k())
        throw std::invalid_argument("information word has length " + std::to_string(x.size()) + ", expected " +
                                    std::to_string(k()));
}

DecodeResult Codec::reject() const {
    Bits zero(k(), 0);
    return {encode(zero), zero, false};
}

DecodeResult Codec::finish(const Bits& y, const Bits* candidate) const {
    if (candidate && candidate->size() == k()) {
        Bits e = encode(*candidate);
        if (d0di(e, y).within(t())) return {std::move(e), *candidate, true};
    }
    return reject();
}

namespace {

long signed_delta(const Bits& y, std::size_t n) { return static_cast<long>(y.size()) - static_cast<long>(n); }

bool out_of_range(long delta, std::size_t t) { return delta > static_cast<long>(t) || -delta > static_cast<long>(t); }

// the multiple of D in [y - tau_plus, y + tau_minus], if any
std::optional<std::uint64_t> round_bucket(std::uint64_t y, std::size_t tau_minus, std::size_t tau_plus,
                                          std::uint64_t D) {
    const std::uint64_t lo = y > tau_plus ? y - tau_plus : 0;
    const std::uint64_t m = (lo + D - 1) / D * D;
    if (m > y + tau_minus) return std::nullopt;
    return m;
}

BigInt bits_value(const Bits& x, std::size_t from, std::size_t len) {
    BigInt v = 0;
    for (std::size_t i = 0; i < len; ++i) v = (v << 1) | x[from + i];
    return v;
}

void append_value(Bits& out, const BigInt& v, std::size_t len) {
    for (std::size_t i = len; i-- > 0;) out.push_back(static_cast<std::uint8_t>(bit_test(v, static_cast<unsigned>(i))));
}

} // namespace

// ---------------------------------------------------------------- identity

IdentityCode::IdentityCode(std::size_t k) : k_(k) {}

Bits IdentityCode::encode(const Bits& x) const {
    check_info(x);
    return x;
}

DecodeResult IdentityCode::decode(const Bits& y) const {
    if (y.size() != k_) return reject();
    return {y, y, true};
}

std::string IdentityCode::describe() const {
    return nlohmann::json{{"base", "I"}, {"k", k_}, {"t", 0}, {"n", k_}}.dump();
}

// -------------------------------------------------------------- repetition

std::uint64_t repetition_length(std::uint64_t k, std::uint64_t t) { return k * (t + 1); }

RepetitionCode::RepetitionCode(std::size_t k, std::size_t t) : k_(k), t_(t) {}

Bits RepetitionCode::encode(const Bits& x) const {
    check_info(x);
    Bits out;
    out.reserve(n());
    for (auto b : x) out.insert(out.end(), t_ + 1, b);
    return out;
}

DecodeResult RepetitionCode::decode(const Bits& y) const {
    const long delta = signed_delta(y, n());
    if (out_of_range(delta, t_)) return reject();
    const std::uint64_t D = t_ + 1;
    const std::size_t ones = hamming_weight(y);
    if (ones % D) return reject();
    const std::size_t tm = tau_minus_of(static_cast<long>(t_), delta);
    const std::size_t tp = t_ - tm;
    const Nat vy = v_map(y);
    Nat vx;
    for (std::size_t j = 0; j < vy.size(); j += D) {
        auto m = round_bucket(vy[j], tm, tp, D);
        if (!m) return reject();
        vx.push_back(*m / D);
    }
    const Bits x = v_inverse(vx);
    return finish(y, &x);
}

std::string RepetitionCode::describe() const {
    return nlohmann::json{{"base", "R"}, {"k", k_}, {"t", t_}, {"n", n()}}.dump();
}

// ---------------------------------------------------------- distinct weight

std::uint64_t distinct_weight_length(std::uint64_t k) {
    if (k >= 63) return std::uint64_t{1} << 63;
    return (std::uint64_t{1} << k) - 1;
}

DistinctWeightCode::DistinctWeightCode(std::size_t k, std::size_t t) : k_(k), t_(t) {
    if (k == 0 || k > kMaxK) throw std::invalid_argument("distinct weight code needs 1 <= k <= 24");
}

Bits DistinctWeightCode::encode(const Bits& x) const {
    check_info(x);
    const std::size_t d = static_cast<std::size_t>(bits_value(x, 0, k_));
    const std::size_t w = hamming_weight(x);
    const std::size_t tail = n() - k_;
    Bits out = x;
    out.insert(out.end(), tail - (d - w), 0);
    out.insert(out.end(), d - w, 1);
    return out;
}

DecodeResult DistinctWeightCode::decode(const Bits& y) const {
    // the weight survives any pattern of 0-errors
    const std::size_t d = hamming_weight(y);
    if (d > n()) return reject();
    Bits x;
    append_value(x, BigInt(d), k_);
    return {encode(x), x, true};
}

std::string DistinctWeightCode::describe() const {
    return nlohmann::json{{"base", "W"}, {"k", k_}, {"t", t_}, {"n", n()}}.dump();
}

// -------------------------------------------------------- limited magnitude

namespace {

std::vector<std::vector<BigInt>> completion_table(std::size_t n, std::size_t D) {
    std::vector<std::vector<BigInt>> f(n + 1, std::vector<BigInt>(D, 0));
    for (std::size_t r = 0; r < D; ++r) f[0][r] = 1;
    for (std::size_t L = 1; L <= n; ++L)
        for (std::size_t r = 0; r < D; ++r) {
            f[L][r] = f[L - 1][(r + 1) % D];
            if (r == 0) f[L][r] += f[L - 1][0];
        }
    return f;
}

} // namespace

BigInt LimitedMagnitudeChunk::cardinality(std::size_t n, std::size_t t) { return completion_table(n, t + 1)[n][0]; }

std::size_t LimitedMagnitudeChunk::length_for(std::size_t s, std::size_t t) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({s, t}); it != memo.end()) return it->second;
    const std::size_t D = t + 1;
    const BigInt target = BigInt(1) << s;
    std::vector<BigInt> prev(D, 1), cur(D);
    std::size_t n = 0;
    while (prev[0] < target) {
        for (std::size_t r = 0; r < D; ++r) {
            cur[r] = prev[(r + 1) % D];
            if (r == 0) cur[r] += prev[0];
        }
        std::swap(prev, cur);
        ++n;
    }
    memo[{s, t}] = n;
    return n;
}

LimitedMagnitudeChunk::LimitedMagnitudeChunk(std::size_t s, std::size_t t)
    : s_(s), t_(t), n_(length_for(s, t)), f_(completion_table(n_, t + 1)) {}

Bits LimitedMagnitudeChunk::unrank(const BigInt& v0) const {
    if (v0 < 0 || v0 >= f_[n_][0]) throw std::out_of_range("chunk value out of range");
    const std::size_t D = t_ + 1;
    BigInt v = v0;
    Bits out;
    out.reserve(n_);
    std::size_t r = 0;
    for (std::size_t pos = 0; pos < n_; ++pos) {
        const std::size_t rem = n_ - pos - 1;
        const BigInt& zeros = f_[rem][(r + 1) % D];
        if (v < zeros) {
            out.push_back(0);
            r = (r + 1) % D;
        } else {
            v -= zeros;
            out.push_back(1);
            r = 0;
        }
    }
    return out;
}

std::optional<BigInt> LimitedMagnitudeChunk::rank(const Bits& x) const {
    if (x.size() != n_) return std::nullopt;
    const std::size_t D = t_ + 1;
    BigInt v = 0;
    std::size_t r = 0;
    for (std::size_t pos = 0; pos < n_; ++pos) {
        const std::size_t rem = n_ - pos - 1;
        if (x[pos] == 0) {
            r = (r + 1) % D;
        } else {
            if (r != 0) return std::nullopt;
            v += f_[rem][1 % D];
            r = 0;
        }
    }
    return v;
}

bool LimitedMagnitudeChunk::contains(const Bits& x) const { return rank(x).has_value(); }

std::optional<BigInt> LimitedMagnitudeChunk::decode(const Bits& y) const {
    const long delta = signed_delta(y, n_);
    if (out_of_range(delta, t_)) return std::nullopt;
    const std::size_t D = t_ + 1;
    const std::size_t tm = tau_minus_of(static_cast<long>(t_), delta);
    const std::size_t tp = t_ - tm;
    Nat v = v_map(y);
    const std::size_t w = v.size() - 1;
    std::uint64_t used = w;
    for (std::size_t i = 0; i < w; ++i) {
        auto m = round_bucket(v[i], tm, tp, D);
        if (!m) return std::nullopt;
        v[i] = *m;
        used += *m;
    }
    if (used > n_) return std::nullopt;
    v[w] = n_ - used;
    auto r = rank(v_inverse(v));
    if (!r || *r >= (BigInt(1) << s_)) return std::nullopt;
    return r;
}

std::uint64_t limited_magnitude_length(std::uint64_t k, std::uint64_t t) {
    if (k == 0) return 0;
    const std::uint64_t full = k / kChunkBits, rem = k % kChunkBits;
    const std::uint64_t chunks = full + (rem ? 1 : 0);
    std::uint64_t n = full * LimitedMagnitudeChunk::length_for(kChunkBits, t);
    if (rem) n += LimitedMagnitudeChunk::length_for(rem, t);
    return n + (chunks - 1) * (t + 1);
}

LimitedMagnitudeCode::LimitedMagnitudeCode(std::size_t k, std::size_t t) : k_(k), t_(t), n_(0) {
    if (k == 0) throw std::invalid_argument("limited magnitude code needs k >= 1");
    for (std::size_t i = 0; i < k / kChunkBits; ++i) chunks_.emplace_back(kChunkBits, t);
    if (k % kChunkBits) chunks_.emplace_back(k % kChunkBits, t);
    for (const auto& c : chunks_) n_ += c.n();
    n_ += (chunks_.size() - 1) * (t + 1);
}

Bits LimitedMagnitudeCode::encode(const Bits& x) const {
    check_info(x);
    Bits out;
    out.reserve(n_);
    std::size_t from = 0;
    for (std::size_t j = 0; j < chunks_.size(); ++j) {
        if (j) {
            Bits m = marker(t_);
            out.insert(out.end(), m.begin(), m.end());
        }
        Bits c = chunks_[j].unrank(bits_value(x, from, chunks_[j].s()));
        out.insert(out.end(), c.begin(), c.end());
        from += chunks_[j].s();
    }
    return out;
}

DecodeResult LimitedMagnitudeCode::decode(const Bits& y) const {
    if (out_of_range(signed_delta(y, n_), t_)) return reject();
    Bits rest = y;
    Bits x;
    std::size_t remaining = n_;
    for (std::size_t j = 0; j < chunks_.size(); ++j) {
        const auto& c = chunks_[j];
        Bits part;
        if (j + 1 < chunks_.size()) {
            const long delta = signed_delta(rest, remaining);
            if (out_of_range(delta, t_)) return reject();
            const std::size_t tp = t_ - tau_minus_of(static_cast<long>(t_), delta);
            auto ex = extract(rest, t_, c.n() + tp + 1);
            part = std::move(ex.head);
            rest = std::move(ex.tail);
            remaining -= c.n() + t_ + 1;
        } else {
            part = rest;
        }
        auto v = c.decode(part);
        if (!v) return reject();
        append_value(x, *v, c.s());
    }
    return finish(y, &x);
}

std::string LimitedMagnitudeCode::describe() const {
    return nlohmann::json{{"base", "M"},
                          {"k", k_},
                          {"t", t_},
                          {"n", n_},
                          {"chunks", chunks_.size()},
                          {"b", k_ / kChunkBits},
                          {"tau", k_ % kChunkBits}}
        .dump();
}

} // namespace zc
