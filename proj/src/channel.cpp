#include "zerocodec/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace zc {

PatternSize pattern_size(const ErrorPattern& p) {
    PatternSize s;
    for (auto d : p) {
        if (d < 0) s.deletions += static_cast<std::uint64_t>(-d);
        else s.insertions += static_cast<std::uint64_t>(d);
    }
    return s;
}

Bits apply_pattern(const Bits& x, const ErrorPattern& p) {
    Nat v = v_map(x);
    if (p.size() != v.size()) throw std::invalid_argument("pattern length differs from the bucket count");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (p[i] < 0 && static_cast<std::uint64_t>(-p[i]) > v[i])
            throw std::invalid_argument("pattern deletes more zeros than bucket " + std::to_string(i) + " holds");
        v[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(v[i]) + p[i]);
    }
    return v_inverse(v);
}

namespace {

struct Walker {
    const Nat& v;
    std::vector<std::uint64_t> room; // zeros in buckets i..end
    const std::function<bool(const ErrorPattern&)>& fn;
    ErrorPattern p;

    // entries i.. of p are zero on entry and on return
    bool go(std::size_t i, std::size_t e, std::size_t f) {
        if (e == 0 && f == 0) return fn(p);
        if (i == v.size() || e > room[i]) return true;
        if (!go(i + 1, e, f)) return false;
        const std::size_t dmax = static_cast<std::size_t>(std::min<std::uint64_t>(v[i], e));
        for (std::size_t d = 1; d <= dmax; ++d) {
            p[i] = -static_cast<std::int64_t>(d);
            if (!go(i + 1, e - d, f)) return false;
        }
        for (std::size_t a = 1; a <= f; ++a) {
            p[i] = static_cast<std::int64_t>(a);
            if (!go(i + 1, e, f - a)) return false;
        }
        p[i] = 0;
        return true;
    }
};

} // namespace

bool for_each_pattern(const Bits& x, std::size_t e, std::size_t f,
                      const std::function<bool(const ErrorPattern&)>& fn) {
    const Nat v = v_map(x);
    std::vector<std::uint64_t> room(v.size() + 1, 0);
    for (std::size_t i = v.size(); i-- > 0;) room[i] = room[i + 1] + v[i];
    Walker w{v, std::move(room), fn, ErrorPattern(v.size(), 0)};
    return w.go(0, e, f);
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > ~b ? ~std::uint64_t{0} : a + b; }
BigInt sat_add(const BigInt& a, const BigInt& b) { return a + b; }

template <class N>
N count_impl(const Bits& x, std::size_t e, std::size_t f) {
    // ways[i][j]: i deletions and j insertions placed so far
    std::vector<std::vector<N>> ways(e + 1, std::vector<N>(f + 1, N(0)));
    ways[0][0] = N(1);
    for (const std::uint64_t cap : v_map(x)) {
        auto next = ways;
        for (std::size_t i = 0; i <= e; ++i)
            for (std::size_t j = 0; j <= f; ++j) {
                if (ways[i][j] == 0) continue;
                for (std::size_t d = 1; i + d <= e && d <= cap; ++d) next[i + d][j] = sat_add(next[i + d][j], ways[i][j]);
                for (std::size_t a = 1; j + a <= f; ++a) next[i][j + a] = sat_add(next[i][j + a], ways[i][j]);
            }
        ways = std::move(next);
    }
    return ways[e][f];
}

} // namespace

BigInt count_patterns(const Bits& x, std::size_t e, std::size_t f) { return count_impl<BigInt>(x, e, f); }

std::vector<ErrorPattern> enumerate_patterns(const Bits& x, std::size_t e, std::size_t f, std::uint64_t budget) {
    std::vector<ErrorPattern> out;
    bool over = false;
    for_each_pattern(x, e, f, [&](const ErrorPattern& p) {
        if (out.size() >= budget) {
            over = true;
            return false;
        }
        out.push_back(p);
        return true;
    });
    if (over) throw std::length_error("pattern enumeration exceeds the budget of " + std::to_string(budget));
    return out;
}

std::optional<ErrorPattern> random_pattern(const Bits& x, std::size_t e, std::size_t f, std::mt19937_64& rng) {
    Nat v = v_map(x);
    ErrorPattern p(v.size(), 0);
    std::uint64_t zeros = l1_weight(v);
    for (std::size_t i = 0; i < e; ++i) {
        if (zeros == 0) return std::nullopt;
        std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, zeros - 1)(rng);
        std::size_t b = 0;
        while (r >= v[b]) r -= v[b++];
        --v[b];
        --p[b];
        --zeros;
    }
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == 0) open.push_back(i);
    if (f > 0 && open.empty()) return std::nullopt;
    for (std::size_t i = 0; i < f; ++i) {
        const std::size_t b = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        ++p[b];
    }
    return p;
}

std::uint64_t default_budget(std::uint64_t fallback) {
    const char* env = std::getenv("ZEROCODEC_BUDGET");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return fallback;
    return v;
}

namespace {

Bits random_info(std::size_t k, std::mt19937_64& rng) {
    Bits x(k);
    for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1);
    return x;
}

std::vector<Bits> pick_infos(std::size_t k, std::uint64_t max_cw, std::mt19937_64& rng, bool& exhaustive) {
    std::vector<Bits> out;
    exhaustive = k < 63 && (std::uint64_t{1} << k) <= max_cw;
    if (exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            Bits x(k);
            for (std::size_t i = 0; i < k; ++i) x[i] = static_cast<std::uint8_t>((m >> (k - 1 - i)) & 1);
            out.push_back(std::move(x));
        }
        return out;
    }
    out.push_back(Bits(k, 0));
    if (max_cw > 1) out.push_back(Bits(k, 1));
    while (out.size() < max_cw) out.push_back(random_info(k, rng));
    return out;
}

struct Job {
    std::size_t e, f;
};

std::vector<Job> jobs_for(std::size_t t, std::size_t horizon) {
    std::vector<Job> jobs;
    for (std::size_t s = 0; s <= t + 1; ++s)
        for (std::size_t e = 0; e <= s; ++e) jobs.push_back({e, s - e});
    for (std::size_t s = t + 2; s <= horizon; ++s) {
        jobs.push_back({s, 0});
        jobs.push_back({0, s});
    }
    return jobs;
}

std::string condition_for(std::size_t t, std::size_t e, std::size_t f) {
    if (e + f <= t) return "C4";
    if (e + f == t + 1 && e != 0 && f != 0) return "C3";
    return f == 0 ? "C1" : "C2";
}

struct CwResult {
    std::uint64_t patterns = 0;
    bool sampled = false;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
};

constexpr std::size_t kMaxViolations = 64;

// Each (e, f) class gets an equal share of what is left of the budget; a class
// that does not fit is sampled.
CwResult check_codeword(const Codec& code, const Bits& info, const std::vector<Job>& jobs, std::size_t t,
                        std::uint64_t budget, std::uint64_t seed) {
    CwResult res;
    const Bits sent = code.encode(info);
    std::mt19937_64 rng(seed);
    auto check = [&](const Job& job, const ErrorPattern& p) {
        ++res.patterns;
        const Bits y = apply_pattern(sent, p);
        Violation v;
        try {
            const DecodeResult d = code.decode(y);
            const bool exact = d.cor && d.info == info;
            if (exact || (!d.cor && job.e + job.f > t)) return;
            if (d.cor) v.got = d.info;
            v.condition = condition_for(t, job.e, job.f);
        } catch (const std::exception& ex) {
            v.condition = std::string("exception: ") + ex.what();
        }
        v.sent = sent;
        v.received = y;
        v.expected = info;
        ++res.violation_count;
        if (res.violations.size() < kMaxViolations) res.violations.push_back(std::move(v));
    };
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        const std::uint64_t left = budget > res.patterns ? budget - res.patterns : 0;
        const std::uint64_t share = left / (jobs.size() - j);
        if (count_impl<std::uint64_t>(sent, job.e, job.f) <= share) {
            for_each_pattern(sent, job.e, job.f, [&](const ErrorPattern& p) {
                check(job, p);
                return true;
            });
            continue;
        }
        res.sampled = true;
        for (std::uint64_t i = 0; i < share; ++i) {
            auto p = random_pattern(sent, job.e, job.f, rng);
            if (!p) break;
            check(job, *p);
        }
    }
    return res;
}

} // namespace

VerifyReport verify_code(const Codec& code, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.code_id = std::string(1, base_letter(code.kind())) + ":n=" + std::to_string(code.n()) +
                  ",k=" + std::to_string(code.k()) + ",t=" + std::to_string(opt.t);
    rep.params = code.describe();
    rep.t = opt.t;
    rep.horizon = opt.horizon ? opt.horizon : opt.t + 3;
    rep.seed = opt.seed;

    std::mt19937_64 rng(opt.seed);
    const std::vector<Bits> infos = pick_infos(code.k(), std::max<std::uint64_t>(opt.max_codewords, 1), rng,
                                               rep.exhaustive_codewords);
    const std::vector<Job> jobs = jobs_for(opt.t, rep.horizon);
    // fixed share and seed per codeword keep the report independent of scheduling
    const std::uint64_t share = std::max<std::uint64_t>(opt.budget / infos.size(), 1);

    std::vector<CwResult> results(infos.size());
    std::atomic<std::size_t> next{0};
    std::size_t nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, infos.size());
    std::vector<std::exception_ptr> errors(nthreads);
    auto worker = [&](std::size_t id) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < infos.size();)
                results[i] = check_codeword(code, infos[i], jobs, opt.t, share, opt.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < nthreads; ++i) pool.emplace_back(worker, i);
    worker(0);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (auto& r : results) {
        rep.codewords_checked += 1;
        rep.patterns_checked += r.patterns;
        rep.exhaustive_patterns = rep.exhaustive_patterns && !r.sampled;
        rep.violation_count += r.violation_count;
        for (auto& v : r.violations)
            if (rep.violations.size() < kMaxViolations) rep.violations.push_back(std::move(v));
    }
    return rep;
}

std::string VerifyReport::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations) {
        vs.push_back({{"sent", to_string(v.sent)},
                      {"received", to_string(v.received)},
                      {"expected", to_string(v.expected)},
                      {"got", v.got ? nlohmann::json(to_string(*v.got)) : nlohmann::json(nullptr)},
                      {"condition", v.condition}});
    }
    nlohmann::json j{{"code_id", code_id},
                     {"params", nlohmann::json::parse(params)},
                     {"t", t},
                     {"horizon", horizon},
                     {"codewords_checked", codewords_checked},
                     {"exhaustive_codewords", exhaustive_codewords},
                     {"patterns_checked", patterns_checked},
                     {"exhaustive_patterns", exhaustive_patterns},
                     {"violation_count", violation_count},
                     {"violations", vs},
                     {"seed", seed}};
    return j.dump();
}

std::string SimStats::to_json() const {
    return nlohmann::json{{"trials", trials},
                          {"corrected", corrected},
                          {"detected", detected},
                          {"miscorrected", miscorrected},
                          {"skipped", skipped},
                          {"seed", seed}}
        .dump();
}

SimStats simulate(const Codec& code, std::uint64_t trials, std::size_t e, std::size_t f, std::uint64_t seed) {
    SimStats s;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        ++s.trials;
        const Bits info = random_info(code.k(), rng);
        const Bits sent = code.encode(info);
        auto p = random_pattern(sent, e, f, rng);
        if (!p) {
            ++s.skipped;
            continue;
        }
        const DecodeResult d = code.decode(apply_pattern(sent, *p));
        if (!d.cor) ++s.detected;
        else if (d.info == info) ++s.corrected;
        else ++s.miscorrected;
    }
    return s;
}

} // namespace zc
