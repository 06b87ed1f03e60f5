#ifndef ZEROCODEC_H
#define ZEROCODEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(ZC_BUILDING_LIBRARY)
#define ZC_API __attribute__((visibility("default")))
#else
#define ZC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zc_codec zc_codec;

typedef enum zc_status {
    ZC_OK = 0,
    ZC_INVALID_ARGUMENT = 1, /* bad parameters or malformed word */
    ZC_UNSUPPORTED = 2,      /* design exists but cannot be built */
    ZC_INTERNAL = 3
} zc_status;

typedef enum zc_mode { ZC_MODE_GUARANTEED = 0, ZC_MODE_CONJECTURE = 1 } zc_mode;

/* base: "auto", "I", "R", "W", "M" or "S" (case-insensitive; long names accepted). */
ZC_API zc_status zc_codec_create(size_t k, size_t t, const char* base, zc_mode mode, zc_codec** out);
/* RS-balanced base code with explicit byte length b and strength tau. */
ZC_API zc_status zc_codec_create_rs(size_t k, size_t t, size_t b, size_t tau, zc_mode mode, zc_codec** out);
ZC_API void zc_codec_free(zc_codec* c);

ZC_API size_t zc_codec_n(const zc_codec* c);
ZC_API size_t zc_codec_k(const zc_codec* c);
ZC_API size_t zc_codec_t(const zc_codec* c);
/* JSON description; free with zc_string_free. */
ZC_API zc_status zc_codec_describe(const zc_codec* c, char** json);

/* Words are '0'/'1' strings. Outputs are malloc'd; free with zc_string_free. */
ZC_API zc_status zc_encode(const zc_codec* c, const char* info, char** codeword);
/* cor is 1 when the word was accepted, 0 when errors were detected. */
ZC_API zc_status zc_decode(const zc_codec* c, const char* received, char** info, char** codeword, int* cor);

/* Decoder contract check at strength t: exhaustive when the error patterns fit the budget of
 * decoded words, sampled otherwise (the report says which). horizon 0 means t+3, budget 0 the default.
 * *ok is 1 iff no violation was found. */
ZC_API zc_status zc_verify(const zc_codec* c, size_t t, size_t horizon, uint64_t budget, uint64_t seed,
                           uint64_t max_codewords, char** report_json, int* ok);
ZC_API zc_status zc_simulate(const zc_codec* c, uint64_t trials, size_t deletions, size_t insertions,
                             uint64_t seed, char** stats_json);

/* Redundancy table. ks/ts may be NULL for the default grid. as_json selects JSON or text. */
ZC_API zc_status zc_table(const uint64_t* ks, size_t nks, const size_t* ts, size_t nts, zc_mode mode,
                          int as_json, char** out);

ZC_API void zc_string_free(char* s);
/* Message for the last failure on this thread; never NULL. */
ZC_API const char* zc_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
