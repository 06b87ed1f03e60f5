#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zerocodec/codec.hpp"
#include "zerocodec/words.hpp"

namespace zc {

// One signed delta per bucket of V(x). Negative entries are 0-deletions.
using ErrorPattern = std::vector<std::int64_t>;

struct PatternSize {
    std::uint64_t deletions = 0;
    std::uint64_t insertions = 0;
};
PatternSize pattern_size(const ErrorPattern& p);

// y = V^-1(V(x) + p). Throws if a bucket would go negative.
Bits apply_pattern(const Bits& x, const ErrorPattern& p);

// Calls fn for every pattern with exactly e deletions and f insertions on
// disjoint buckets; each yields a distinct received word. Returns false if fn
// asked to stop.
bool for_each_pattern(const Bits& x, std::size_t e, std::size_t f,
                      const std::function<bool(const ErrorPattern&)>& fn);
// Number of patterns for_each_pattern would visit.
BigInt count_patterns(const Bits& x, std::size_t e, std::size_t f);
// Materialized form; throws std::length_error past `budget` patterns.
std::vector<ErrorPattern> enumerate_patterns(const Bits& x, std::size_t e, std::size_t f,
                                             std::uint64_t budget = 1'000'000);

// Uniform over placements of individual errors, not over patterns. Returns
// nullopt if x cannot absorb e deletions.
std::optional<ErrorPattern> random_pattern(const Bits& x, std::size_t e, std::size_t f, std::mt19937_64& rng);

// ZEROCODEC_BUDGET if set and valid, else the fallback.
std::uint64_t default_budget(std::uint64_t fallback = 2'000'000);

struct VerifyOptions {
    std::size_t t = 1;
    // unidirectional patterns are checked up to this total magnitude; 0 means t + 3
    std::size_t horizon = 0;
    // decoded words overall; (e, f) classes that do not fit are sampled
    std::uint64_t budget = 2'000'000;
    std::uint64_t seed = 1;
    // information words checked; all 2^k when that is smaller
    std::uint64_t max_codewords = 256;
    std::size_t threads = 0; // 0: hardware concurrency
};

struct Violation {
    Bits sent;
    Bits received;
    Bits expected;
    std::optional<Bits> got; // nullopt when the decoder flagged the word
    std::string condition;   // C1..C4, or "exception: ..."
};

struct VerifyReport {
    std::string code_id;
    std::string params; // JSON text from Codec::describe
    std::size_t t = 0, horizon = 0;
    std::uint64_t seed = 0;
    std::uint64_t codewords_checked = 0;
    bool exhaustive_codewords = false;
    std::uint64_t patterns_checked = 0;
    bool exhaustive_patterns = true; // false if any class was sampled
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations; // first 64

    bool ok() const { return violation_count == 0; }
    std::string to_json() const;
};

// Checks the decoder contract for each information word (all of them, or a
// seeded sample):
//  C1 all-deletion patterns, C2 all-insertion patterns: cor=1 implies exact
//  C3 up to t+1 symmetric errors: cor=1 implies exact
//  C4 up to t symmetric errors: cor=1 and exact
VerifyReport verify_code(const Codec& code, const VerifyOptions& opt);

struct SimStats {
    std::uint64_t trials = 0;
    std::uint64_t corrected = 0; // cor=1 and exact
    std::uint64_t detected = 0;  // cor=0
    std::uint64_t miscorrected = 0;
    std::uint64_t skipped = 0;   // codeword could not absorb the deletions
    std::uint64_t seed = 0;
    std::string to_json() const;
};

// Random information words through a channel with exactly e deletions and f insertions.
SimStats simulate(const Codec& code, std::uint64_t trials, std::size_t e, std::size_t f, std::uint64_t seed);

} // namespace zc
