#include "zerocodec/recursive.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "zerocodec/base_codes.hpp"
#include "zerocodec/extract.hpp"
#include "zerocodec/sigma.hpp"

namespace zc {

namespace {

constexpr std::uint64_t kHuge = std::uint64_t{1} << 62;
constexpr std::size_t kMaxByteBits = 24;
constexpr std::uint64_t kMaxBuildField = std::uint64_t{1} << 22;

BaseSpec spec_of(BaseKind kind, std::size_t t, std::uint64_t k, std::uint64_t n) {
    BaseSpec s;
    s.kind = kind;
    s.t = t;
    s.k = static_cast<std::size_t>(k);
    s.n = n;
    if (kind == BaseKind::LimitedMagnitude) {
        s.b = static_cast<std::size_t>(k / kChunkBits);
        s.tau = static_cast<std::size_t>(k % kChunkBits);
    }
    return s;
}

} // namespace

Planner::Planner(PlannerOptions opt) : opt_(opt) {}

std::uint64_t Planner::length_r(std::size_t t, std::uint64_t k) const { return repetition_length(k, t); }

std::uint64_t Planner::length_w(std::size_t, std::uint64_t k) const {
    if (opt_.buildable && k > DistinctWeightCode::kMaxK) return kHuge;
    return std::min(distinct_weight_length(k), kHuge);
}

std::optional<std::uint64_t> Planner::length_m(std::size_t t, std::uint64_t k) const {
    if (k == 0) return std::nullopt;
    return limited_magnitude_length(k, t);
}

std::optional<BaseSpec> Planner::best_s(std::size_t t, std::uint64_t k) {
    if (auto it = s_.find({t, k}); it != s_.end()) return it->second;
    std::optional<BaseSpec> best;
    const std::size_t bmax = static_cast<std::size_t>(std::min<std::uint64_t>(k, opt_.max_b));
    for (std::size_t b = 1; b <= bmax; ++b)
        for (std::size_t tau = 1; tau <= std::max<std::size_t>(t, 1); ++tau) {
            auto p = rs_balanced_params(k, t, b, tau, opt_.mode);
            if (!p) continue;
            if (opt_.buildable) {
                if (p->q > kMaxBuildField) continue;
                if (balanced_length(std::uint64_t{1} << b, tau) > kMaxByteBits) continue;
                if (p->checks && balanced_length(p->q, tau) > kMaxByteBits) continue;
            }
            if (!best || p->n < best->n) {
                BaseSpec s = spec_of(BaseKind::RsBalanced, t, k, p->n);
                s.b = b;
                s.tau = tau;
                best = s;
            }
        }
    s_[{t, k}] = best;
    return best;
}

LevelSpec Planner::level(std::size_t t, std::uint64_t k) {
    LevelSpec lv;
    lv.t = t;
    lv.k = static_cast<std::size_t>(k);
    lv.q = smallest_field_order(k, t);
    lv.l = static_cast<std::size_t>(ceil_log2_pow(lv.q, t));
    return lv;
}

const Planner::Node& Planner::node(std::size_t t, std::uint64_t k) {
    if (auto it = rec_.find({t, k}); it != rec_.end()) return it->second;
    Node nd;
    if (t == 0) {
        nd.n = k;
        nd.child = spec_of(BaseKind::Identity, 0, k, k);
    } else {
        const LevelSpec lv = level(t, k);
        const std::uint64_t kt = lv.next_k();
        const std::size_t tc = t - 1;
        // ties resolve in this order: recursive, M, S, R, W
        std::uint64_t best = node(tc, kt).n;
        std::optional<BaseSpec> child;
        if (tc == 0) child = spec_of(BaseKind::Identity, 0, kt, kt);
        if (auto m = length_m(tc, kt); m && *m < best) {
            best = *m;
            child = spec_of(BaseKind::LimitedMagnitude, tc, kt, *m);
        }
        if (auto s = best_s(tc, kt); s && s->n < best) {
            best = s->n;
            child = *s;
        }
        if (auto r = length_r(tc, kt); r < best) {
            best = r;
            child = spec_of(BaseKind::Repetition, tc, kt, r);
        }
        if (auto w = length_w(tc, kt); w < best) {
            best = w;
            child = spec_of(BaseKind::DistinctWeight, tc, kt, w);
        }
        nd.n = k + t + 1 + best;
        nd.child = child;
    }
    return rec_.emplace(std::make_pair(t, k), nd).first->second;
}

std::uint64_t Planner::length_recursive(std::size_t t, std::uint64_t k) { return node(t, k).n; }

void Planner::follow(Plan& p, std::size_t t, std::uint64_t k, bool down_to_identity) {
    for (;;) {
        if (t == 0) {
            p.base = spec_of(BaseKind::Identity, 0, k, k);
            break;
        }
        const LevelSpec lv = level(t, k);
        p.levels.push_back(lv);
        const std::uint64_t kt = lv.next_k();
        if (!down_to_identity) {
            const Node& nd = node(t, k);
            if (nd.child) {
                p.base = *nd.child;
                break;
            }
        }
        --t;
        k = kt;
    }
    p.n = p.base.n;
    for (const auto& lv : p.levels) p.n += lv.k + lv.t + 1;
}

Plan Planner::best(std::size_t t, std::uint64_t k) {
    Plan p;
    p.t = t;
    p.k = static_cast<std::size_t>(k);
    const std::uint64_t r = length_r(t, k), w = length_w(t, k), rec = length_recursive(t, k);
    if (r <= w && r <= rec) {
        p.base = spec_of(BaseKind::Repetition, t, k, r);
        p.n = r;
    } else if (w <= rec) {
        p.base = spec_of(BaseKind::DistinctWeight, t, k, w);
        p.n = w;
    } else {
        follow(p, t, k, false);
    }
    return p;
}

Plan Planner::plan(std::size_t t, std::uint64_t k, BaseSel sel) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    Plan p;
    p.t = t;
    p.k = static_cast<std::size_t>(k);
    switch (sel) {
    case BaseSel::Auto: return best(t, k);
    case BaseSel::Identity: follow(p, t, k, true); return p;
    case BaseSel::Repetition: p.base = spec_of(BaseKind::Repetition, t, k, length_r(t, k)); break;
    case BaseSel::DistinctWeight:
        if (length_w(t, k) >= kHuge) throw std::invalid_argument("distinct weight code needs k <= 24");
        p.base = spec_of(BaseKind::DistinctWeight, t, k, length_w(t, k));
        break;
    case BaseSel::LimitedMagnitude: p.base = spec_of(BaseKind::LimitedMagnitude, t, k, *length_m(t, k)); break;
    case BaseSel::RsBalanced: {
        auto s = best_s(t, k);
        if (!s) throw std::invalid_argument("no RS byte parameters fit these k and t");
        p.base = *s;
        break;
    }
    }
    p.n = p.base.n;
    return p;
}

// ------------------------------------------------------------------ codec

std::unique_ptr<Codec> make_base_codec(const BaseSpec& s, Mode mode) {
    switch (s.kind) {
    case BaseKind::Identity: return std::make_unique<IdentityCode>(s.k);
    case BaseKind::Repetition: return std::make_unique<RepetitionCode>(s.k, s.t);
    case BaseKind::DistinctWeight: return std::make_unique<DistinctWeightCode>(s.k, s.t);
    case BaseKind::LimitedMagnitude: return std::make_unique<LimitedMagnitudeCode>(s.k, s.t);
    case BaseKind::RsBalanced: return std::make_unique<RsBalancedCode>(s.k, s.t, s.b, s.tau, mode);
    case BaseKind::Recursive: break;
    }
    throw std::invalid_argument("not a base code");
}

RecursiveCodec::RecursiveCodec(const Plan& plan, Mode mode) : plan_(plan) {
    for (const auto& spec : plan_.levels) {
        Level lv{spec, smallest_field(spec.k, spec.t), {}, 0};
        if (lv.alg.is_field() && lv.alg.order() > kMaxBuildField)
            throw std::length_error("field too large for level with k = " + std::to_string(spec.k));
        lv.support = default_support(spec.k, lv.alg);
        levels_.push_back(std::move(lv));
    }
    base_ = make_base_codec(plan_.base, mode);
    std::size_t n = base_->n();
    for (std::size_t j = levels_.size(); j-- > 0;) {
        n += levels_[j].spec.k + levels_[j].spec.t + 1;
        levels_[j].n = n;
    }
    if (n != plan_.n) throw std::logic_error("plan length mismatch");
}

Poly RecursiveCodec::sigma_of(const Level& lv, const Bits& x) const {
    return sigma_poly(v_hat_map(x, lv.spec.k), lv.support, lv.spec.t, lv.alg);
}

Bits RecursiveCodec::check_part(std::size_t j, const Bits& x) const {
    const Level& lv = levels_[j];
    if (lv.spec.self_copy()) return x;
    const Poly s = sigma_of(lv, x);
    BigInt v = 0;
    for (std::size_t i = lv.spec.t; i >= 1; --i) v = v * lv.spec.q + s.coef(i);
    Bits out(lv.spec.l);
    for (std::size_t i = 0; i < lv.spec.l; ++i)
        out[lv.spec.l - 1 - i] = static_cast<std::uint8_t>(bit_test(v, static_cast<unsigned>(i)));
    return out;
}

Bits RecursiveCodec::encode_from(std::size_t j, const Bits& x) const {
    if (j == levels_.size()) return base_->encode(x);
    Bits out = x;
    const Bits m = marker(levels_[j].spec.t);
    out.insert(out.end(), m.begin(), m.end());
    const Bits rest = encode_from(j + 1, check_part(j, x));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Bits RecursiveCodec::encode(const Bits& x) const {
    check_info(x);
    return encode_from(0, x);
}

DecodeResult RecursiveCodec::decode_from(std::size_t j, const Bits& y) const {
    if (j == levels_.size()) return base_->decode(y);
    const Level& lv = levels_[j];
    const std::size_t K = lv.spec.k, t = lv.spec.t;
    const Bits zero(K, 0);
    auto fail = [&] { return DecodeResult{encode_from(j, zero), zero, false}; };

    const long delta = static_cast<long>(y.size()) - static_cast<long>(lv.n);
    if (delta > static_cast<long>(t) || -delta > static_cast<long>(t)) return fail();
    const std::size_t tau_plus = t - tau_minus_of(static_cast<long>(t), delta);
    Extracted ex = extract(y, t, K + tau_plus + 1);
    const DecodeResult sub = decode_from(j + 1, ex.tail);

    Bits x = ex.head;
    const std::size_t w = hamming_weight(ex.head);
    if (sub.cor && w <= K) {
        std::optional<Poly> sigma;
        if (lv.spec.self_copy()) {
            if (sub.info.size() == K) sigma = sigma_of(lv, sub.info);
        } else {
            BigInt v = 0;
            for (auto b : sub.info) v = (v << 1) | b;
            std::vector<Alg::Elem> c(t + 1, 0);
            c[0] = 1;
            for (std::size_t i = 1; i <= t; ++i) {
                c[i] = static_cast<Alg::Elem>(v % lv.spec.q);
                v /= lv.spec.q;
            }
            if (v == 0) sigma = Poly(std::move(c));
        }
        if (sigma) {
            CwSigmaCode code;
            code.alg = lv.alg;
            code.support.assign(lv.support.begin(), lv.support.begin() + static_cast<std::ptrdiff_t>(w));
            code.t = t;
            code.sigma_tilde = *sigma;
            code.n = w + 1;
            code.w = K - w;
            auto r = decode_cw(code, v_map(ex.head));
            if (r.cor) x = v_inverse(r.x);
        }
    }
    if (x.size() != K) x = zero;
    Bits e = encode_from(j, x);
    if (!d0di(e, y).within(t)) return fail();
    return {std::move(e), std::move(x), true};
}

DecodeResult RecursiveCodec::decode(const Bits& y) const { return decode_from(0, y); }

std::string RecursiveCodec::describe() const {
    nlohmann::json lv = nlohmann::json::array();
    for (const auto& l : levels_)
        lv.push_back({{"t", l.spec.t},
                      {"k", l.spec.k},
                      {"algebra", l.alg.describe()},
                      {"check_bits", l.spec.next_k()},
                      {"self_copy", l.spec.self_copy()}});
    return nlohmann::json{{"base", std::string(1, base_letter(plan_.base.kind))},
                          {"k", plan_.k},
                          {"t", plan_.t},
                          {"n", plan_.n},
                          {"levels", lv},
                          {"base_code", nlohmann::json::parse(base_->describe())}}
        .dump();
}

std::unique_ptr<Codec> make_codec(std::size_t k, std::size_t t, BaseSel sel, Mode mode) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    Planner planner({mode, true});
    const Plan p = planner.plan(t, k, sel);
    if (p.levels.empty()) return make_base_codec(p.base, mode);
    return std::make_unique<RecursiveCodec>(p, mode);
}

std::optional<BaseSel> parse_base_sel(const std::string& s0) {
    std::string s;
    for (char c : s0) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "auto") return BaseSel::Auto;
    if (s == "i" || s == "identity") return BaseSel::Identity;
    if (s == "r" || s == "repetition") return BaseSel::Repetition;
    if (s == "w" || s == "distinct-weight") return BaseSel::DistinctWeight;
    if (s == "m" || s == "limited-magnitude") return BaseSel::LimitedMagnitude;
    if (s == "s" || s == "rs" || s == "rs-balanced") return BaseSel::RsBalanced;
    return std::nullopt;
}

std::optional<Mode> parse_mode(const std::string& s) {
    if (s == "guaranteed") return Mode::Guaranteed;
    if (s == "conjecture") return Mode::Conjecture;
    return std::nullopt;
}

} // namespace zc
