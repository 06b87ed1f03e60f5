#include "zerocodec/zerocodec.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>

#include "zerocodec/base_codes.hpp"
#include "zerocodec/channel.hpp"
#include "zerocodec/recursive.hpp"
#include "zerocodec/table.hpp"

struct zc_codec {
    std::unique_ptr<zc::Codec> impl;
};

namespace {

thread_local std::string g_error;

zc_status fail(zc_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

template <class F>
zc_status guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const std::invalid_argument& e) {
        return fail(ZC_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ZC_INVALID_ARGUMENT, e.what());
    } catch (const std::length_error& e) {
        return fail(ZC_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(ZC_INTERNAL, e.what());
    } catch (...) {
        return fail(ZC_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

zc::Mode to_mode(zc_mode m) {
    switch (m) {
    case ZC_MODE_GUARANTEED: return zc::Mode::Guaranteed;
    case ZC_MODE_CONJECTURE: return zc::Mode::Conjecture;
    }
    throw std::invalid_argument("unknown mode");
}

} // namespace

extern "C" {

zc_status zc_codec_create(size_t k, size_t t, const char* base, zc_mode mode, zc_codec** out) {
    if (!out) return fail(ZC_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        const auto sel = zc::parse_base_sel(base ? base : "auto");
        if (!sel) return fail(ZC_INVALID_ARGUMENT, std::string("unknown base code '") + base + "'");
        auto c = std::make_unique<zc_codec>();
        c->impl = zc::make_codec(k, t, *sel, to_mode(mode));
        *out = c.release();
        return ZC_OK;
    });
}

zc_status zc_codec_create_rs(size_t k, size_t t, size_t b, size_t tau, zc_mode mode, zc_codec** out) {
    if (!out) return fail(ZC_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        auto c = std::make_unique<zc_codec>();
        c->impl = std::make_unique<zc::RsBalancedCode>(k, t, b, tau, to_mode(mode));
        *out = c.release();
        return ZC_OK;
    });
}

void zc_codec_free(zc_codec* c) { delete c; }

size_t zc_codec_n(const zc_codec* c) { return c ? c->impl->n() : 0; }
size_t zc_codec_k(const zc_codec* c) { return c ? c->impl->k() : 0; }
size_t zc_codec_t(const zc_codec* c) { return c ? c->impl->t() : 0; }

zc_status zc_codec_describe(const zc_codec* c, char** json) {
    if (!c || !json) return fail(ZC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *json = dup(c->impl->describe());
        return ZC_OK;
    });
}

zc_status zc_encode(const zc_codec* c, const char* info, char** codeword) {
    if (!c || !info || !codeword) return fail(ZC_INVALID_ARGUMENT, "null argument");
    *codeword = nullptr;
    return guarded([&] {
        *codeword = dup(zc::to_string(c->impl->encode(zc::parse_bits(info))));
        return ZC_OK;
    });
}

zc_status zc_decode(const zc_codec* c, const char* received, char** info, char** codeword, int* cor) {
    if (!c || !received) return fail(ZC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const zc::DecodeResult r = c->impl->decode(zc::parse_bits(received));
        char* i = info ? dup(zc::to_string(r.info)) : nullptr;
        if (codeword) {
            try {
                *codeword = dup(zc::to_string(r.codeword));
            } catch (...) {
                std::free(i);
                throw;
            }
        }
        if (info) *info = i;
        if (cor) *cor = r.cor ? 1 : 0;
        return ZC_OK;
    });
}

zc_status zc_verify(const zc_codec* c, size_t t, size_t horizon, uint64_t budget, uint64_t seed,
                    uint64_t max_codewords, char** report_json, int* ok) {
    if (!c) return fail(ZC_INVALID_ARGUMENT, "null codec");
    return guarded([&] {
        zc::VerifyOptions opt;
        opt.t = t;
        opt.horizon = horizon;
        opt.budget = budget ? budget : zc::default_budget();
        opt.seed = seed;
        if (max_codewords) opt.max_codewords = max_codewords;
        const zc::VerifyReport rep = zc::verify_code(*c->impl, opt);
        if (report_json) *report_json = dup(rep.to_json());
        if (ok) *ok = rep.ok() ? 1 : 0;
        return ZC_OK;
    });
}

zc_status zc_simulate(const zc_codec* c, uint64_t trials, size_t deletions, size_t insertions, uint64_t seed,
                      char** stats_json) {
    if (!c || !stats_json) return fail(ZC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *stats_json = dup(zc::simulate(*c->impl, trials, deletions, insertions, seed).to_json());
        return ZC_OK;
    });
}

zc_status zc_table(const uint64_t* ks, size_t nks, const size_t* ts, size_t nts, zc_mode mode, int as_json,
                   char** out) {
    if (!out) return fail(ZC_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        const auto kv = ks ? std::vector<std::uint64_t>(ks, ks + nks) : zc::default_table_ks();
        const auto tv = ts ? std::vector<std::size_t>(ts, ts + nts) : zc::default_table_ts();
        for (auto k : kv)
            if (k == 0) throw std::invalid_argument("table rows need k >= 1");
        const auto cells = zc::redundancy_table(kv, tv, to_mode(mode));
        *out = dup(as_json ? zc::table_json(cells) : zc::table_text(cells, kv, tv));
        return ZC_OK;
    });
}

void zc_string_free(char* s) { std::free(s); }

const char* zc_last_error(void) { return g_error.c_str(); }

} // extern "C"
