#include <cmath>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "zerocodec/base_codes.hpp"

namespace zc {

namespace {

constexpr std::size_t kMaxByteBits = 24;

double log2_binomial(std::uint64_t n, std::uint64_t k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
}

} // namespace

std::uint64_t balanced_length(std::uint64_t size, std::size_t tau) {
    if (tau == 0) throw std::invalid_argument("balanced_length: tau must be positive");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> memo;
    // log2 of the pigeonhole bound before rounding, per tau and n
    static std::map<std::size_t, std::vector<double>> estimates;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({size, tau}); it != memo.end()) return it->second;
    std::vector<double>& est = estimates[tau];
    auto estimate = [&](std::uint64_t n) {
        while (est.size() <= n) {
            const std::uint64_t m = est.size();
            const std::uint64_t w = m / 2;
            est.push_back(log2_binomial(m, w) - static_cast<double>(tau - 1) *
                                                    std::log2(static_cast<double>(smallest_field_order(w, tau - 1))));
        }
        return est[n];
    };
    // ceil(x) >= size iff x > size - 1; the estimate settles everything
    // outside a thin band, which is checked exactly
    const double lo = size >= 2 ? std::log2(static_cast<double>(size - 1)) : -1e300;
    const double hi = std::log2(static_cast<double>(size));
    std::uint64_t n = 1;
    for (;; ++n) {
        const double approx = estimate(n);
        const double slack = 1e-9 * static_cast<double>(n + tau);
        if (approx < lo - slack) continue;
        if (approx > hi + slack) break;
        if (pigeonhole_bound(n, n / 2, tau - 1) >= size) break;
    }
    memo[{size, tau}] = n;
    return n;
}

std::optional<RsParams> rs_balanced_params(std::uint64_t k, std::uint64_t t, std::size_t b, std::size_t tau,
                                          Mode mode) {
    if (b == 0 || b > k || b > 40 || tau == 0 || tau > t + 1) return std::nullopt;
    RsParams p;
    p.b = b;
    p.tau = tau;
    p.k_rs = static_cast<std::size_t>((k + b - 1) / b);
    const std::size_t per = static_cast<std::size_t>(t / tau);
    p.checks = (tau > 1 && mode == Mode::Guaranteed) ? 2 * per : per;
    const std::uint64_t n_rs = p.k_rs + p.checks;
    const std::uint64_t sym = std::uint64_t{1} << b;
    p.q = smallest_prime_power_at_least(std::max(sym, n_rs));
    const std::uint64_t full = k / b, tail = k % b;
    p.n = full * (balanced_length(sym, tau) + 1);
    if (tail) p.n += balanced_length(std::uint64_t{1} << tail, tau) + 1;
    p.n += p.checks * (balanced_length(p.q, tau) + 1);
    return p;
}

namespace {

RsBalancedCode::ByteCode make_byte_code(std::uint64_t size, std::size_t tau) {
    const std::uint64_t n = balanced_length(size, tau);
    if (n > kMaxByteBits) throw std::length_error("balanced byte code too long to enumerate");
    RsBalancedCode::ByteCode bc;
    bc.cc = construct_cw_code(n, n / 2, tau - 1, kMaxByteBits);
    bc.size = static_cast<std::size_t>(size);
    bc.nbits = n;
    if (bc.cc.words.size() < size) throw std::logic_error("balanced byte class below its bound");
    for (std::size_t i = 0; i < bc.cc.words.size(); ++i) bc.index.emplace(bc.cc.words[i], i);
    return bc;
}

} // namespace

RsBalancedCode::RsBalancedCode(std::size_t k, std::size_t t, std::size_t b, std::size_t tau, Mode mode)
    : k_(k), t_(t), mode_(mode), F_(Alg::prime(2)) {
    auto p = rs_balanced_params(k, t, b, tau, mode);
    if (!p) throw std::invalid_argument("RS byte parameters out of range");
    p_ = *p;
    F_ = Alg::field(p_.q);
    info_field_rank_ = p_.q == (std::uint64_t{1} << b);
    tail_bits_ = k % b;
    info_ = make_byte_code(std::uint64_t{1} << b, tau);
    if (tail_bits_) tail_ = make_byte_code(std::uint64_t{1} << tail_bits_, tau);
    if (p_.checks) check_ = make_byte_code(p_.q, tau);
}

const RsBalancedCode::ByteCode& RsBalancedCode::byte_code(std::size_t j) const {
    const std::size_t full = k_ / p_.b;
    if (j < full) return info_;
    if (j < p_.k_rs) return tail_;
    return check_;
}

std::size_t RsBalancedCode::elem_rank(Alg::Elem a) const { return a == 0 ? 0 : static_cast<std::size_t>(F_.log(a)) + 1; }

Alg::Elem RsBalancedCode::rank_elem(std::size_t r) const { return r == 0 ? 0 : F_.exp(r - 1); }

std::vector<Alg::Elem> RsBalancedCode::rs_encode(const std::vector<Alg::Elem>& info) const {
    std::vector<Alg::Elem> xs(p_.k_rs);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = i;
    const Poly f = poly_interpolate(F_, xs, info);
    std::vector<Alg::Elem> out(p_.k_rs + p_.checks);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i < p_.k_rs ? info[i] : poly_eval(F_, f, i);
    return out;
}

std::optional<std::vector<Alg::Elem>> RsBalancedCode::rs_decode(const std::vector<std::optional<Alg::Elem>>& r) const {
    const std::size_t n_rs = p_.k_rs + p_.checks;
    std::vector<Alg::Elem> xs, ys;
    for (std::size_t i = 0; i < n_rs; ++i)
        if (r[i]) {
            xs.push_back(i);
            ys.push_back(*r[i]);
        }
    const std::size_t erased = n_rs - xs.size();
    if (erased > p_.checks) return std::nullopt;
    const std::size_t k = p_.k_rs;
    // Gao: stop at the first remainder of degree < (n' + k) / 2
    const long stop = static_cast<long>((xs.size() + k + 1) / 2) - 1;
    const Poly g0 = poly_from_roots(F_, xs);
    const Poly g1 = poly_interpolate(F_, xs, ys);
    EeaStep st = poly_eea(F_, g0, g1, stop);
    if (st.v.is_zero()) return std::nullopt;
    auto [f, rem] = poly_divmod(F_, st.r, st.v);
    if (!rem.is_zero() || f.deg() >= static_cast<long>(k)) return std::nullopt;
    std::vector<Alg::Elem> out(n_rs);
    for (std::size_t i = 0; i < n_rs; ++i) out[i] = poly_eval(F_, f, i);
    std::size_t wrong = 0;
    for (std::size_t j = 0; j < xs.size(); ++j)
        if (out[xs[j]] != ys[j]) ++wrong;
    if (2 * wrong > p_.checks - erased) return std::nullopt;
    return out;
}

Bits RsBalancedCode::encode(const Bits& x) const {
    check_info(x);
    const std::size_t full = k_ / p_.b;
    std::vector<Alg::Elem> info(p_.k_rs);
    for (std::size_t j = 0; j < p_.k_rs; ++j) {
        const std::size_t len = j < full ? p_.b : tail_bits_;
        Alg::Elem v = 0;
        for (std::size_t i = 0; i < len; ++i) v = (v << 1) | x[j * p_.b + i];
        info[j] = v;
    }
    const auto cw = rs_encode(info);
    Bits out;
    out.reserve(p_.n);
    for (std::size_t j = 0; j < cw.size(); ++j) {
        std::size_t rank;
        if (j < full)
            rank = info_field_rank_ ? elem_rank(cw[j]) : static_cast<std::size_t>(cw[j]);
        else if (j < p_.k_rs)
            rank = static_cast<std::size_t>(cw[j]);
        else
            rank = elem_rank(cw[j]);
        const Bits& word = byte_code(j).cc.words.at(rank);
        out.insert(out.end(), word.begin(), word.end());
        out.push_back(1);
    }
    return out;
}

DecodeResult RsBalancedCode::decode(const Bits& y) const {
    const long delta = static_cast<long>(y.size()) - static_cast<long>(p_.n);
    if (delta > static_cast<long>(t_) || -delta > static_cast<long>(t_)) return reject();
    const std::size_t n_rs = p_.k_rs + p_.checks;
    const std::size_t full = k_ / p_.b;

    // split into bytes by counting ones
    std::vector<Bits> bytes(n_rs);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n_rs; ++j) {
        const std::size_t want = byte_code(j).nbits / 2;
        std::size_t ones = 0;
        Bits& b = bytes[j];
        for (;;) {
            if (pos >= y.size()) return reject();
            const std::uint8_t bit = y[pos++];
            if (bit && ones == want) break;
            b.push_back(bit);
            ones += bit;
        }
    }
    for (; pos < y.size(); ++pos)
        if (y[pos]) return reject();

    struct ByteGuess {
        std::optional<std::size_t> rank;
        std::uint64_t dist = 0;
    };
    std::vector<ByteGuess> guesses(n_rs);
    for (std::size_t j = 0; j < n_rs; ++j) {
        const auto& bc = byte_code(j);
        const Nat vy = v_map(bytes[j]);
        auto r = decode_cw(bc.cc.code, vy);
        if (!r.cor) continue;
        auto it = bc.index.find(v_inverse(r.x));
        if (it == bc.index.end() || it->second >= bc.size) continue;
        guesses[j] = {it->second, l1_sym(r.x, vy)};
    }

    for (std::size_t xi = 1; xi <= p_.tau; ++xi) {
        const std::size_t allowed = p_.tau - xi;
        std::vector<std::optional<Alg::Elem>> recv(n_rs);
        for (std::size_t j = 0; j < n_rs; ++j) {
            const auto& g = guesses[j];
            if (!g.rank || g.dist > allowed) continue;
            if (j < full)
                recv[j] = info_field_rank_ ? rank_elem(*g.rank) : static_cast<Alg::Elem>(*g.rank);
            else if (j < p_.k_rs)
                recv[j] = static_cast<Alg::Elem>(*g.rank);
            else
                recv[j] = rank_elem(*g.rank);
        }
        auto cw = rs_decode(recv);
        if (!cw) continue;
        Bits x;
        bool ok = true;
        for (std::size_t j = 0; j < p_.k_rs && ok; ++j) {
            const std::size_t len = j < full ? p_.b : tail_bits_;
            if ((*cw)[j] >> len) {
                ok = false;
                break;
            }
            for (std::size_t i = len; i-- > 0;) x.push_back(static_cast<std::uint8_t>(((*cw)[j] >> i) & 1));
        }
        if (!ok) continue;
        Bits e = encode(x);
        if (d0di(e, y).within(t_)) return {std::move(e), std::move(x), true};
    }
    return reject();
}

std::string RsBalancedCode::describe() const {
    nlohmann::json j{{"base", "S"},       {"k", k_},
                     {"t", t_},           {"n", p_.n},
                     {"b", p_.b},         {"tau", p_.tau},
                     {"k_rs", p_.k_rs},   {"checks", p_.checks},
                     {"field", F_.describe()},
                     {"mode", mode_ == Mode::Guaranteed ? "guaranteed" : "conjecture"},
                     {"byte_lengths", {info_.nbits, tail_.nbits, check_.nbits}}};
    return j.dump();
}

} // namespace zc
