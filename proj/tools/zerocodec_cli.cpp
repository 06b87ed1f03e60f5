// zerocodec command line front end. Talks to the library only through zerocodec.h.
#include <cctype>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zerocodec/zerocodec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDetected = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodecOpts {
    std::size_t k = 0, t = 1;
    std::string base = "auto";
    std::string mode = "guaranteed";
    std::size_t b = 0, tau = 0;
    std::string format = "bin";
    bool json = false;
    bool weaken = false;
};

struct CodecDeleter {
    void operator()(zc_codec* c) const { zc_codec_free(c); }
};
using CodecPtr = std::unique_ptr<zc_codec, CodecDeleter>;

struct CString {
    char* p = nullptr;
    ~CString() { zc_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

void check(zc_status s) {
    if (s == ZC_OK) return;
    if (s == ZC_INVALID_ARGUMENT || s == ZC_UNSUPPORTED) throw BadInput(zc_last_error());
    throw std::runtime_error(zc_last_error());
}

zc_mode mode_of(const std::string& m) { return m == "conjecture" ? ZC_MODE_CONJECTURE : ZC_MODE_GUARANTEED; }

CodecPtr make(const CodecOpts& o, std::size_t t) {
    zc_codec* c = nullptr;
    const bool explicit_rs = o.b != 0 || o.tau != 0;
    if (explicit_rs) {
        std::string base = o.base;
        for (auto& ch : base) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (base != "s" && base != "rs" && base != "rs-balanced")
            throw BadInput("--b and --tau need --base S");
        if (o.b == 0 || o.tau == 0) throw BadInput("--b and --tau must be given together");
        check(zc_codec_create_rs(o.k, t, o.b, o.tau, mode_of(o.mode), &c));
    } else {
        check(zc_codec_create(o.k, t, o.base.c_str(), mode_of(o.mode), &c));
    }
    return CodecPtr(c);
}

// hex form: "<nbits>:<hex digits>", MSB first, last nibble zero padded
std::string to_hex(const std::string& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(bits.size()) + ":";
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) v = v * 2 + (i + j < bits.size() && bits[i + j] == '1');
        out.push_back(digits[v]);
    }
    return out;
}

std::string from_hex(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw BadInput("hex words look like <nbits>:<hex>");
    std::size_t n = 0;
    try {
        n = std::stoul(s.substr(0, colon));
    } catch (const std::exception&) {
        throw BadInput("bad bit count in '" + s + "'");
    }
    const std::string hex = s.substr(colon + 1);
    if (hex.size() != (n + 3) / 4) throw BadInput("hex digit count does not match " + std::to_string(n) + " bits");
    std::string bits;
    for (char c : hex) {
        if (!std::isxdigit(static_cast<unsigned char>(c))) throw BadInput(std::string("not a hex digit: ") + c);
        const int v = std::stoi(std::string(1, c), nullptr, 16);
        for (int j = 3; j >= 0; --j) bits.push_back((v >> j) & 1 ? '1' : '0');
    }
    for (std::size_t i = n; i < bits.size(); ++i)
        if (bits[i] != '0') throw BadInput("nonzero padding in '" + s + "'");
    bits.resize(n);
    return bits;
}

std::string read_word(const std::string& raw, const std::string& format) {
    return format == "hex" ? from_hex(raw) : raw;
}

std::string write_word(const std::string& bits, const std::string& format) {
    return format == "hex" ? to_hex(bits) : bits;
}

// words from the positional arguments, or one per non-empty stdin line
std::vector<std::string> inputs(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        std::string w;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) w.push_back(c);
        if (!w.empty()) out.push_back(w);
    }
    if (out.empty()) throw BadInput("no input word");
    return out;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_encode(const CodecOpts& o, const std::vector<std::string>& args) {
    auto c = make(o, o.t);
    for (const auto& raw : inputs(args)) {
        const std::string x = read_word(raw, o.format);
        if (x.size() != o.k)
            throw BadInput("information word has " + std::to_string(x.size()) + " bits, expected " +
                           std::to_string(o.k));
        CString cw;
        check(zc_encode(c.get(), x.c_str(), &cw.p));
        if (o.json)
            std::cout << "{\"info\":" << quote(write_word(x, o.format))
                      << ",\"codeword\":" << quote(write_word(cw.str(), o.format)) << "}\n";
        else
            std::cout << write_word(cw.str(), o.format) << "\n";
    }
    return kExitOk;
}

int cmd_decode(const CodecOpts& o, const std::vector<std::string>& args) {
    auto c = make(o, o.t);
    int rc = kExitOk;
    for (const auto& raw : inputs(args)) {
        const std::string y = read_word(raw, o.format);
        CString info, cw;
        int cor = 0;
        check(zc_decode(c.get(), y.c_str(), &info.p, &cw.p, &cor));
        if (o.json)
            std::cout << "{\"info\":" << quote(write_word(info.str(), o.format))
                      << ",\"codeword\":" << quote(write_word(cw.str(), o.format)) << ",\"cor\":" << cor
                      << "}\n";
        else
            std::cout << write_word(info.str(), o.format) << " cor=" << cor << "\n";
        if (!cor) rc = kExitDetected;
    }
    return rc;
}

struct SimOpts {
    std::uint64_t trials = 1000;
    std::size_t deletions = 0, insertions = 0;
};

int cmd_simulate(const CodecOpts& o, const SimOpts& s, std::uint64_t seed) {
    auto c = make(o, o.t);
    CString stats;
    check(zc_simulate(c.get(), s.trials, s.deletions, s.insertions, seed, &stats.p));
    std::cout << stats.str() << "\n";
    return kExitOk;
}

struct VerifyOpts {
    std::size_t horizon = 0;
    std::uint64_t budget = 0;
    std::uint64_t max_codewords = 0;
};

int cmd_verify(const CodecOpts& o, const VerifyOpts& v, std::uint64_t seed) {
    // --weaken builds the code one error short of the strength being checked
    if (o.weaken && o.t == 0) throw BadInput("--weaken needs t >= 1");
    auto c = make(o, o.weaken ? o.t - 1 : o.t);
    CString report;
    int ok = 0;
    check(zc_verify(c.get(), o.t, v.horizon, v.budget, seed, v.max_codewords, &report.p, &ok));
    std::cout << report.str() << "\n";
    if (!o.json) std::cerr << (ok ? "verify: no violations\n" : "verify: violations found\n");
    return ok ? kExitOk : kExitViolation;
}

// "1-4,8,16" -> {1,2,3,4,8,16}
template <class T>
std::vector<T> parse_list(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        try {
            const auto dash = part.find('-');
            if (dash == std::string::npos) {
                out.push_back(static_cast<T>(std::stoull(part)));
                continue;
            }
            const auto lo = std::stoull(part.substr(0, dash)), hi = std::stoull(part.substr(dash + 1));
            if (hi < lo || hi - lo > 100000) throw BadInput("bad range '" + part + "'");
            for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
        } catch (const std::logic_error&) {
            throw BadInput("bad list element '" + part + "'");
        }
    }
    if (out.empty()) throw BadInput("empty list '" + s + "'");
    return out;
}

int cmd_table(const std::string& ks, const std::string& ts, const std::string& mode, bool json) {
    std::vector<std::uint64_t> kv;
    std::vector<std::size_t> tv;
    if (!ks.empty()) kv = parse_list<std::uint64_t>(ks);
    if (!ts.empty()) tv = parse_list<std::size_t>(ts);
    CString out;
    check(zc_table(kv.empty() ? nullptr : kv.data(), kv.size(), tv.empty() ? nullptr : tv.data(), tv.size(),
                   mode_of(mode), json ? 1 : 0, &out.p));
    std::cout << out.str();
    if (!out.str().empty() && out.str().back() != '\n') std::cout << "\n";
    return kExitOk;
}

void add_codec_options(CLI::App* app, CodecOpts& o) {
    app->add_option("--k", o.k, "information bits")->required()->check(CLI::PositiveNumber);
    app->add_option("--t", o.t, "0-errors to correct")->capture_default_str();
    app->add_option("--base", o.base, "base code: auto, I, R, W, M or S")->capture_default_str();
    app->add_option("--mode", o.mode, "RS distance rule")
        ->check(CLI::IsMember({"guaranteed", "conjecture"}))
        ->capture_default_str();
    app->add_option("--b", o.b, "S base: byte length (with --tau)");
    app->add_option("--tau", o.tau, "S base: byte strength (with --b)");
    app->add_option("--format", o.format, "word format: bin or hex (<nbits>:<hex>)")
        ->check(CLI::IsMember({"bin", "hex"}))
        ->capture_default_str();
    app->add_flag("--json", o.json, "JSON output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes for deletions and insertions of the symbol 0"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;

    CodecOpts enc_o, dec_o, sim_o, ver_o;
    std::vector<std::string> enc_args, dec_args;

    auto* enc = app.add_subcommand("encode", "encode information words (arguments or stdin lines)");
    add_codec_options(enc, enc_o);
    enc->add_option("words", enc_args, "information words");

    auto* dec = app.add_subcommand("decode", "decode received words; exit 3 if any was flagged");
    add_codec_options(dec, dec_o);
    dec->add_option("words", dec_args, "received words");

    SimOpts sim;
    auto* simc = app.add_subcommand("simulate", "random words through a channel with fixed error counts");
    add_codec_options(simc, sim_o);
    simc->add_option("--trials", sim.trials)->capture_default_str();
    simc->add_option("--deletions,-e", sim.deletions, "0-deletions per word")->capture_default_str();
    simc->add_option("--insertions,-f", sim.insertions, "0-insertions per word")->capture_default_str();
    simc->add_option("--seed", seed)->capture_default_str();

    VerifyOpts ver;
    auto* verc = app.add_subcommand("verify", "decoder contract check; exit 1 on violations");
    add_codec_options(verc, ver_o);
    verc->add_option("--horizon", ver.horizon, "largest unidirectional pattern (default t+3)");
    verc->add_option("--budget", ver.budget, "decoded words before sampling kicks in (default ZEROCODEC_BUDGET or 2000000)");
    verc->add_option("--max-codewords", ver.max_codewords, "information words to check (default 256)");
    verc->add_option("--seed", seed)->capture_default_str();
    verc->add_flag("--weaken", ver_o.weaken)->group("");

    std::string ks, ts, table_mode = "conjecture";
    bool table_json = false;
    auto* tab = app.add_subcommand("table", "redundancy r(t,k) of the best design");
    tab->add_option("--k", ks, "rows, e.g. 1-16,32,64 (default grid)");
    tab->add_option("--t", ts, "columns, e.g. 1-8 (default grid)");
    tab->add_option("--mode", table_mode)
        ->check(CLI::IsMember({"guaranteed", "conjecture"}))
        ->capture_default_str();
    tab->add_flag("--json", table_json, "JSON records instead of the text grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*enc) return cmd_encode(enc_o, enc_args);
        if (*dec) return cmd_decode(dec_o, dec_args);
        if (*simc) return cmd_simulate(sim_o, sim, seed);
        if (*verc) return cmd_verify(ver_o, ver, seed);
        if (*tab) return cmd_table(ks, ts, table_mode, table_json);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return kExitBadInput;
}
