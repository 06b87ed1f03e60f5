// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerocodec/base_codes.hpp"
#include "zerocodec/channel.hpp"
#include "zerocodec/recursive.hpp"
#include "zerocodec/sigma.hpp"
#include "zerocodec/table.hpp"
#include "zerocodec/words.hpp"

#ifndef ZC_TEST_DATA_DIR
#define ZC_TEST_DATA_DIR "tests/data"
#endif

using namespace zc;

namespace {

struct Outcome {
    bool pass = false;
    std::vector<std::string> details;
    void note(const std::string& s) { details.push_back(s); }
};

std::string data_dir = ZC_TEST_DATA_DIR;

std::vector<Bits> all_words(std::size_t max_len) {
    std::vector<Bits> out;
    for (std::size_t len = 0; len <= max_len; ++len)
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
            Bits x(len);
            for (std::size_t i = 0; i < len; ++i) x[i] = static_cast<std::uint8_t>((m >> (len - 1 - i)) & 1);
            out.push_back(std::move(x));
        }
    return out;
}

// 1. d0di agrees with breadth-first search over single 0-edits
Outcome isometry() {
    Outcome o;
    const auto words = all_words(8);
    std::uint64_t pairs = 0, finite = 0, bad = 0;
    for (const auto& x : words) {
        // intermediate words may grow to 12 bits
        const auto ball = d0di_bfs_ball(x, 12, std::size_t{1} << 20);
        for (const auto& y : words) {
            ++pairs;
            const Distance d = d0di(x, y);
            const auto it = ball.find(to_string(y));
            const Distance oracle = it == ball.end() ? Distance::infinite() : Distance(it->second);
            if (d.finite()) ++finite;
            if (!(d == oracle)) {
                if (++bad <= 5) o.note("mismatch x=" + to_string(x) + " y=" + to_string(y) + " d0di=" + d.str() +
                                       " bfs=" + oracle.str());
            }
        }
    }
    o.note(std::to_string(pairs) + " ordered pairs, " + std::to_string(finite) + " with equal weight, " +
           std::to_string(bad) + " mismatches");
    o.pass = bad == 0;
    return o;
}

// 2. redundancy table against the reference values
Outcome table() {
    Outcome o;
    std::ifstream f(data_dir + "/reference_table.json");
    if (!f) {
        o.note("cannot open " + data_dir + "/reference_table.json");
        return o;
    }
    const auto ref = nlohmann::json::parse(f);
    const auto t0 = std::chrono::steady_clock::now();
    Planner planner({Mode::Conjecture, false});
    std::uint64_t exact_needed = 0, exact_ok = 0, ms_bounded = 0, ms_ok = 0, same = 0, beaten = 0, worse = 0;
    std::vector<std::string> lines;
    for (const auto& r : ref) {
        const auto k = r["k"].get<std::uint64_t>();
        const auto t = r["t"].get<std::size_t>();
        const auto want = r["r"].get<std::uint64_t>();
        const char base = r["base"].get<std::string>()[0];
        const TableCell c = table_cell(planner, t, k);
        std::string ref_text = std::to_string(want) + "_{" + std::to_string(r["t_b"].get<int>()) + "," + base + "," +
                               std::to_string(r["k_tb"].get<std::uint64_t>()) + "}^{" +
                               std::to_string(r["n_tb"].get<std::uint64_t>());
        if (r.contains("b")) ref_text += "," + std::to_string(r["b"].get<int>()) + "," + std::to_string(r["tau"].get<int>());
        ref_text += "}";
        const bool must_match = k <= 4 || base == 'R' || base == 'W' || base == 'I';
        if (must_match) {
            ++exact_needed;
            if (c.r == want) ++exact_ok;
            else lines.push_back("  MISSED exact k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                 " ours=" + cell_text(c) + " reference=" + ref_text);
        }
        if ((base == 'M' || base == 'S') && k <= 16 && t <= 8) {
            ++ms_bounded;
            if (c.r <= want + 2) ++ms_ok;
            else lines.push_back("  MISSED bound k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                 " ours=" + cell_text(c) + " reference=" + ref_text);
        }
        if (c.r == want) ++same;
        else if (c.r < want) {
            ++beaten;
            lines.push_back("  beaten k=" + std::to_string(k) + " t=" + std::to_string(t) + " ours=" + cell_text(c) +
                            " reference=" + ref_text);
        } else {
            ++worse;
            if (!must_match)
                lines.push_back("  above k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                " ours=" + cell_text(c) + " reference=" + ref_text);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.note(std::to_string(ref.size()) + " cells: " + std::to_string(same) + " equal, " + std::to_string(beaten) +
           " below the reference, " + std::to_string(worse) + " above");
    o.note("exact cells (k<=4 or R/W/I): " + std::to_string(exact_ok) + "/" + std::to_string(exact_needed));
    o.note("M/S cells with k<=16, t<=8 within +2: " + std::to_string(ms_ok) + "/" + std::to_string(ms_bounded));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    o.note(std::string("runtime ") + buf);
    for (auto& l : lines) o.note(l);
    o.pass = exact_ok == exact_needed && ms_ok == ms_bounded && secs < 300.0;
    return o;
}

// 3. the 42-bit RS-balanced example with k=9, t=4, b=3, tau=1
Outcome rs_example() {
    Outcome o;
    RsBalancedCode code(9, 4, 3, 1, Mode::Guaranteed);
    const Bits zero(9, 0);
    const std::string want = "000111000111000111000111000111000111000111";
    const std::string got = to_string(code.encode(zero));
    o.note("field " + code.field().describe() + ", n=" + std::to_string(code.n()));
    o.note("encode(0^9) = " + got);
    const std::string received = "00101100010110000111000111000111000111000111";
    const DecodeResult d = code.decode(parse_bits(received));
    o.note("decode(" + received + ") = " + to_string(d.info) + " cor=" + std::to_string(d.cor));
    o.pass = got == want && d.cor && d.info == zero && to_string(d.codeword) == want;
    return o;
}

// 4. exhaustive decoder contract
// Codes whose error patterns exceed the per-code budget are sampled instead;
// the criterion only passes when nothing had to be sampled.
Outcome contract() {
    Outcome o;
    constexpr std::uint64_t kBudget = 1'000'000;
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t codes = 0, patterns = 0, violations = 0, exhaustive = 0;
    std::vector<std::string> sampled;
    auto run = [&](const Codec& c, std::size_t t, const std::string& label) {
        VerifyOptions opt;
        opt.t = t;
        opt.horizon = t + 3;
        opt.budget = kBudget;
        opt.max_codewords = 512;
        const VerifyReport rep = verify_code(c, opt);
        ++codes;
        patterns += rep.patterns_checked;
        violations += rep.violation_count;
        if (rep.exhaustive_patterns && rep.exhaustive_codewords) ++exhaustive;
        else sampled.push_back(label);
        if (!rep.ok()) {
            const auto& v = rep.violations.front();
            o.note("  " + label + ": " + std::to_string(rep.violation_count) + " violations, first " + v.condition +
                   " sent=" + to_string(v.sent) + " received=" + to_string(v.received));
        }
    };
    for (std::size_t k = 1; k <= 8; ++k)
        for (std::size_t t = 1; t <= 2; ++t) {
            auto c = make_codec(k, t, BaseSel::Identity, Mode::Guaranteed);
            run(*c, t, "I k=" + std::to_string(k) + " t=" + std::to_string(t));
        }
    const std::uint64_t rec_codes = codes;
    for (BaseSel sel : {BaseSel::Repetition, BaseSel::DistinctWeight, BaseSel::LimitedMagnitude, BaseSel::RsBalanced})
        for (std::size_t k = 1; k <= 9; ++k)
            for (std::size_t t = 1; t <= 4; ++t) {
                std::unique_ptr<Codec> c;
                try {
                    c = make_codec(k, t, sel, Mode::Guaranteed);
                } catch (const std::exception& e) {
                    o.note("  cannot build base " + std::string(1, "IRWMS"[static_cast<int>(sel) - 1]) +
                           " k=" + std::to_string(k) + " t=" + std::to_string(t) + ": " + e.what());
                    ++violations;
                    continue;
                }
                run(*c, t, std::string(1, base_letter(c->kind())) + " k=" + std::to_string(k) + " t=" +
                               std::to_string(t) + " n=" + std::to_string(c->n()));
            }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.note(std::to_string(rec_codes) + " recursive codes with I base (k<=8, t<=2), " +
           std::to_string(codes - rec_codes) + " base codes (R/W/M/S, k<=9, t<=4), all information words");
    o.note("patterns: all with <= t+1 errors, unidirectional up to t+3; " + std::to_string(patterns) +
           " received words decoded");
    o.note(std::to_string(violations) + " violations; " + std::to_string(exhaustive) + "/" + std::to_string(codes) +
           " codes exhaustive within " + std::to_string(kBudget) + " words each");
    if (!sampled.empty()) {
        std::string s = "  sampled (pattern space too large): ";
        for (std::size_t i = 0; i < sampled.size(); ++i) s += (i ? ", " : "") + sampled[i];
        o.note(s);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    o.note(std::string("runtime ") + buf);
    o.pass = violations == 0 && sampled.empty() && secs < 600.0;
    return o;
}

// 5. pigeonhole classes: size bound and minimum distance
Outcome pigeonhole() {
    Outcome o;
    std::uint64_t cases = 0, bad = 0;
    for (std::size_t n = 1; n <= 14; ++n)
        for (std::size_t w = 0; w <= n; ++w)
            for (std::size_t t = 0; t <= 3; ++t) {
                ++cases;
                const ConstructedCode c = construct_cw_code(n, w, t, 14);
                std::vector<Nat> vs;
                for (const auto& b : c.words) vs.push_back(v_map(b));
                std::uint64_t dmin = ~std::uint64_t{0};
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j) dmin = std::min(dmin, l1_sym(vs[i], vs[j]));
                const bool size_ok = BigInt(c.words.size()) >= c.bound;
                const bool dist_ok = vs.size() < 2 || dmin >= 2 * t + 2;
                if (!size_ok || !dist_ok) {
                    ++bad;
                    std::ostringstream s;
                    s << "  n=" << n << " w=" << w << " t=" << t << " size=" << c.words.size() << " bound=" << c.bound
                      << " dmin=" << dmin;
                    o.note(s.str());
                }
            }
    o.note(std::to_string(cases) + " (n, w, t) cases, " + std::to_string(bad) + " failing");
    o.pass = bad == 0;
    return o;
}

// 6. concatenation laws over all parts of length <= 4
Outcome concatenation() {
    Outcome o;
    const auto words = all_words(4);
    const Bits one{1};
    std::uint64_t quads = 0, sub_bad = 0, q_bad = 0, sep_bad = 0, q_checked = 0;
    std::vector<std::vector<Distance>> d(words.size(), std::vector<Distance>(words.size()));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) d[i][j] = d0di(words[i], words[j]);
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = 0; b < words.size(); ++b)
            for (std::size_t c = 0; c < words.size(); ++c)
                for (std::size_t e = 0; e < words.size(); ++e) {
                    ++quads;
                    const Bits& x1 = words[a];
                    const Bits& x2 = words[b];
                    const Bits& y1 = words[c];
                    const Bits& y2 = words[e];
                    const Distance whole = d0di(concat(x1, x2), concat(y1, y2));
                    const Distance parts = d[a][c] + d[b][e];
                    if (!(whole <= parts)) ++sub_bad;
                    if (hamming_weight(x1) != hamming_weight(y1)) continue;
                    ++q_checked;
                    const std::uint64_t q = concat_q(x1, x2, y1, y2);
                    const bool eq = parts.finite() ? whole.finite() && whole.value() + q == parts.value()
                                                   : !whole.finite();
                    if (!eq) ++q_bad;
                    if (!(d0di(concat({x1, one, x2}), concat({y1, one, y2})) == parts)) ++sep_bad;
                }
    const auto w = [](const char* s) { return parse_bits(s); };
    const std::uint64_t q = concat_q(w("010"), w("010"), w("0001"), w("001"));
    const Distance whole = d0di(w("010010"), w("0001001"));
    const Distance parts = d0di(w("010"), w("0001")) + d0di(w("010"), w("001"));
    o.note(std::to_string(quads) + " quadruples; " + std::to_string(q_checked) + " with equal first-part weight");
    o.note("subadditivity failures " + std::to_string(sub_bad) + ", Q-equality failures " + std::to_string(q_bad) +
           ", separator additivity failures " + std::to_string(sep_bad));
    o.note("witness (010,010,0001,001): Q=" + std::to_string(q) + " d=" + whole.str() + " sum=" + parts.str());
    o.pass = sub_bad == 0 && q_bad == 0 && sep_bad == 0 && q == 2 && whole.finite() && parts.finite() &&
             whole.value() + 2 == parts.value();
    return o;
}

// 7. key-equation decoding over GF(11), 6 positions, t = 3
Outcome key_equation() {
    Outcome o;
    CwSigmaCode code;
    code.alg = Alg::field(11);
    code.support = default_support(6, code.alg);
    code.t = 3;
    code.n = 7;
    std::uint64_t words = 0, trials = 0, bad = 0;
    Nat x(6, 0);
    for (std::uint64_t m = 0; m < 729; ++m) {
        std::uint64_t r = m;
        for (auto& d : x) {
            d = r % 3;
            r /= 3;
        }
        ++words;
        code.sigma_tilde = code.sigma_of(x);
        const Bits as_word = v_inverse(x);
        for (std::size_t tm = 0; tm <= 3; ++tm) {
            const std::size_t tp = 3 - tm;
            for (std::size_t e = 0; e <= tm; ++e)
                for (std::size_t f = 0; f <= tp; ++f)
                    for_each_pattern(as_word, e, f, [&](const ErrorPattern& p) {
                        ++trials;
                        Nat y = x;
                        for (std::size_t i = 0; i < y.size(); ++i)
                            y[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(y[i]) + p[i]);
                        const auto got = decode_asymmetric(code, y, tm, tp);
                        if (!got || *got != x) {
                            if (++bad <= 5) o.note("  x=" + to_string(x) + " y=" + to_string(y) + " split (" +
                                                   std::to_string(tm) + "," + std::to_string(tp) + ")");
                        }
                        return true;
                    });
        }
    }
    o.note(std::to_string(words) + " words with digits 0..2, " + std::to_string(trials) + " (word, split, pattern) trials, " +
           std::to_string(bad) + " failures");
    o.pass = bad == 0;
    return o;
}

// 8. redundancy growth stays within 2.5 t log2 k
Outcome growth() {
    Outcome o;
    Planner planner({Mode::Conjecture, false});
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> ref;
    if (std::ifstream f(data_dir + "/reference_table.json"); f)
        for (const auto& r : nlohmann::json::parse(f))
            ref[{r["k"].get<std::uint64_t>(), r["t"].get<std::size_t>()}] = r["r"].get<std::uint64_t>();
    double worst = 0;
    std::string at;
    int over = 0, over_ref = 0;
    for (unsigned e = 6; e <= 14; ++e)
        for (std::size_t t = 1; t <= 8; ++t) {
            const std::uint64_t k = std::uint64_t{1} << e;
            const TableCell c = table_cell(planner, t, k);
            const double ratio = static_cast<double>(c.r) / (static_cast<double>(t) * e);
            if (ratio >= 2.5) {
                ++over;
                const auto it = ref.find({k, t});
                if (it != ref.end() && static_cast<double>(it->second) / (static_cast<double>(t) * e) >= 2.5)
                    ++over_ref;
            }
            if (ratio > worst) {
                worst = ratio;
                at = "k=2^" + std::to_string(e) + " t=" + std::to_string(t) + " r=" + std::to_string(c.r);
                const auto it = ref.find({k, t});
                if (it != ref.end()) at += " (reference r=" + std::to_string(it->second) + ")";
            }
        }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max r/(t log2 k) = %.3f", worst);
    o.note(std::string(buf) + " at " + at + " (k = 2^6..2^14, t = 1..8)");
    o.note(std::to_string(over) + " cells at or above 2.5; the reference table is also at or above 2.5 in " +
           std::to_string(over_ref) + " of them");
    o.pass = worst < 2.5;
    return o;
}

} // namespace

// usage: acceptance [data-dir] [criterion numbers...]
int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (!a.empty() && std::all_of(a.begin(), a.end(), ::isdigit)) only.insert(std::stoi(a));
        else data_dir = a;
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 d0di equals shortest-path distance (lengths <= 8)", isometry},
        {"2 redundancy table vs reference", table},
        {"3 RS-balanced k=9 t=4 example bit-exact", rs_example},
        {"4 exhaustive decoder contract C1-C4", contract},
        {"5 pigeonhole class size and distance (n <= 14, t <= 3)", pigeonhole},
        {"6 concatenation laws (parts <= 4 bits)", concatenation},
        {"7 key equation over GF(11), 6 positions, t=3", key_equation},
        {"8 redundancy within 2.5 t log2 k", growth},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        if (!only.empty() && !only.count(std::stoi(name))) continue;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << "\n";
        for (const auto& d : o.details) std::cout << "     " << d << "\n";
        std::cout.flush();
        if (!o.pass) ++failed;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criterion(s) failed" : "acceptance: all passed")
              << "\n";
    return failed ? 1 : 0;
}
