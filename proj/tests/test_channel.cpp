#include <doctest.h>

#include <set>

#include <json.hpp>

#include "zerocodec/base_codes.hpp"
#include "zerocodec/channel.hpp"
#include "zerocodec/recursive.hpp"

using namespace zc;

TEST_CASE("apply_pattern") {
    const Bits x = parse_bits("0100101000101110");
    CHECK(apply_pattern(x, ErrorPattern(8, 0)) == x);
    const ErrorPattern p{1, -1, -1, 1, -1, 0, 2, 1};
    const Bits y = apply_pattern(x, p);
    CHECK(to_string(y) == "001011000011100100");
    CHECK(pattern_size(p).deletions == 3);
    CHECK(pattern_size(p).insertions == 5);
    CHECK(d0di(x, y) == Distance(8));
    CHECK_THROWS(apply_pattern(x, ErrorPattern{0, 0, 0, 0, 0, -1, 0, 0}));
    CHECK_THROWS(apply_pattern(x, ErrorPattern{0}));
}

TEST_CASE("pattern enumeration counts and distinctness") {
    CHECK(enumerate_patterns(parse_bits("0110"), 0, 0).size() == 1);
    CHECK(enumerate_patterns(parse_bits("1"), 0, 1).size() == 2);

    // insertion-only: compositions of f into w+1 parts
    for (const char* s : {"1", "101", "0110", "11111", "001000"}) {
        const Bits x = parse_bits(s);
        const std::uint64_t w = hamming_weight(x);
        for (std::size_t f = 0; f <= 4; ++f)
            CHECK(enumerate_patterns(x, 0, f).size() == binomial(w + f, f).convert_to<std::uint64_t>());
    }

    const Bits x = parse_bits("00101001000");
    for (std::size_t e = 0; e <= 3; ++e)
        for (std::size_t f = 0; f <= 3; ++f) {
            std::set<Bits> seen;
            std::size_t count = 0;
            for_each_pattern(x, e, f, [&](const ErrorPattern& p) {
                const auto sz = pattern_size(p);
                CHECK(sz.deletions == e);
                CHECK(sz.insertions == f);
                const Bits y = apply_pattern(x, p);
                CHECK(d0di(x, y) == Distance(e + f));
                seen.insert(y);
                ++count;
                return true;
            });
            CHECK(seen.size() == count);
            CHECK(count_patterns(x, e, f) == count);
            // every word at exactly this split is reached
            std::size_t expect = 0;
            for (const auto& [txt, d] : d0di_bfs_ball(x, x.size() + f + 1, 1 << 20)) {
                const Bits y = parse_bits(txt);
                if (d != e + f) continue;
                if (y.size() + e != x.size() + f) continue;
                ++expect;
            }
            CHECK(count == expect);
        }
    CHECK_THROWS_AS(enumerate_patterns(parse_bits("0001000"), 0, 6, 3), std::length_error);
}

TEST_CASE("random patterns") {
    std::mt19937_64 rng(7);
    const Bits x = parse_bits("0010001000100");
    for (int i = 0; i < 200; ++i) {
        auto p = random_pattern(x, 3, 2, rng);
        REQUIRE(p);
        CHECK(pattern_size(*p).deletions == 3);
        CHECK(pattern_size(*p).insertions == 2);
        CHECK(d0di(x, apply_pattern(x, *p)) == Distance(5));
    }
    CHECK_FALSE(random_pattern(parse_bits("101"), 2, 0, rng));
}

TEST_CASE("verify_code passes on shipped codes") {
    VerifyOptions opt;
    opt.t = 1;
    RepetitionCode r(2, 1);
    auto rep = verify_code(r, opt);
    CHECK(rep.ok());
    CHECK(rep.exhaustive_codewords);
    CHECK(rep.codewords_checked == 4);
    CHECK(rep.exhaustive_patterns);

    DistinctWeightCode w(3, 5);
    opt.t = 5;
    opt.horizon = 8;
    rep = verify_code(w, opt);
    CHECK(rep.ok());

    auto c = make_codec(4, 2, BaseSel::Auto, Mode::Guaranteed);
    opt.t = 2;
    opt.horizon = 0;
    rep = verify_code(*c, opt);
    CHECK(rep.ok());
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["violations"].empty());
    CHECK(j["seed"] == 1);
    CHECK(j["patterns_checked"].get<std::uint64_t>() == rep.patterns_checked);
}

TEST_CASE("verify_code reports a weakened code") {
    // code built for t-1 but checked at t
    auto c = make_codec(4, 1, BaseSel::Auto, Mode::Guaranteed);
    VerifyOptions opt;
    opt.t = 2;
    const auto rep = verify_code(*c, opt);
    CHECK_FALSE(rep.ok());
    bool c4 = false;
    for (const auto& v : rep.violations) c4 = c4 || v.condition == "C4";
    CHECK(c4);
    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["violations"].size() == rep.violations.size());
}

TEST_CASE("verify_code is deterministic and respects the budget") {
    auto c = make_codec(20, 2, BaseSel::Auto, Mode::Guaranteed);
    VerifyOptions opt;
    opt.t = 2;
    opt.max_codewords = 8;
    opt.budget = 400;
    opt.seed = 99;
    const auto a = verify_code(*c, opt);
    opt.threads = 1;
    const auto b = verify_code(*c, opt);
    CHECK(a.to_json() == b.to_json());
    CHECK_FALSE(a.exhaustive_patterns);
    CHECK(a.patterns_checked <= 400);
    CHECK_FALSE(a.exhaustive_codewords);
}

TEST_CASE("simulate") {
    auto c = make_codec(8, 2, BaseSel::Auto, Mode::Guaranteed);
    const auto s = simulate(*c, 200, 1, 1, 5);
    CHECK(s.trials == 200);
    CHECK(s.corrected + s.skipped == 200);
    const auto s2 = simulate(*c, 200, 1, 1, 5);
    CHECK(s.to_json() == s2.to_json());
    const auto u = simulate(*c, 200, 0, 6, 5);
    CHECK(u.miscorrected == 0);
}
