#include <stdio.h>
#include <string.h>

#include "zerocodec/zerocodec.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static void round_trip(void) {
    zc_codec* c = NULL;
    EXPECT(zc_codec_create(4, 1, "R", ZC_MODE_GUARANTEED, &c) == ZC_OK);
    EXPECT(zc_codec_n(c) == 8);
    EXPECT(zc_codec_k(c) == 4 && zc_codec_t(c) == 1);

    char* cw = NULL;
    EXPECT(zc_encode(c, "1011", &cw) == ZC_OK);
    EXPECT(cw && strlen(cw) == 8);

    char *info = NULL, *est = NULL;
    int cor = -1;
    EXPECT(zc_decode(c, cw, &info, &est, &cor) == ZC_OK);
    EXPECT(cor == 1 && strcmp(info, "1011") == 0 && strcmp(est, cw) == 0);
    zc_string_free(info);
    zc_string_free(est);

    /* one 0-insertion in front */
    char buf[64];
    snprintf(buf, sizeof buf, "0%s", cw);
    EXPECT(zc_decode(c, buf, &info, NULL, &cor) == ZC_OK);
    EXPECT(cor == 1 && strcmp(info, "1011") == 0);
    zc_string_free(info);
    zc_string_free(cw);

    char* desc = NULL;
    EXPECT(zc_codec_describe(c, &desc) == ZC_OK && desc[0] == '{');
    zc_string_free(desc);
    zc_codec_free(c);
}

static void errors(void) {
    zc_codec* c = NULL;
    EXPECT(zc_codec_create(4, 1, "nope", ZC_MODE_GUARANTEED, &c) == ZC_INVALID_ARGUMENT);
    EXPECT(c == NULL && strlen(zc_last_error()) > 0);
    EXPECT(zc_codec_create(0, 1, "auto", ZC_MODE_GUARANTEED, &c) == ZC_INVALID_ARGUMENT);
    EXPECT(zc_codec_create(40, 1, "W", ZC_MODE_GUARANTEED, &c) == ZC_INVALID_ARGUMENT);

    EXPECT(zc_codec_create(5, 2, "auto", ZC_MODE_GUARANTEED, &c) == ZC_OK);
    char* cw = NULL;
    EXPECT(zc_encode(c, "10x11", &cw) == ZC_INVALID_ARGUMENT);
    EXPECT(zc_encode(c, "101", &cw) == ZC_INVALID_ARGUMENT);
    EXPECT(cw == NULL);
    zc_codec_free(c);
    zc_codec_free(NULL);
}

static void verify_and_simulate(void) {
    zc_codec* c = NULL;
    EXPECT(zc_codec_create(3, 2, "auto", ZC_MODE_GUARANTEED, &c) == ZC_OK);
    char* rep = NULL;
    int ok = 0;
    EXPECT(zc_verify(c, 2, 0, 0, 1, 0, &rep, &ok) == ZC_OK);
    EXPECT(ok == 1 && strstr(rep, "\"violations\":[]") != NULL);
    zc_string_free(rep);

    /* a t=1 code checked at t=2 */
    zc_codec* weak = NULL;
    EXPECT(zc_codec_create(4, 1, "auto", ZC_MODE_GUARANTEED, &weak) == ZC_OK);
    EXPECT(zc_verify(weak, 2, 0, 0, 1, 0, &rep, &ok) == ZC_OK);
    EXPECT(ok == 0 && strstr(rep, "C4") != NULL);
    zc_string_free(rep);
    zc_codec_free(weak);

    char* stats = NULL;
    EXPECT(zc_simulate(c, 50, 1, 1, 3, &stats) == ZC_OK);
    EXPECT(strstr(stats, "\"trials\":50") != NULL);
    zc_string_free(stats);
    zc_codec_free(c);

    EXPECT(zc_codec_create_rs(9, 4, 3, 1, ZC_MODE_CONJECTURE, &c) == ZC_OK);
    EXPECT(zc_codec_n(c) == 42);
    zc_codec_free(c);
}

static void table(void) {
    const uint64_t ks[] = {4, 64};
    const size_t ts[] = {1, 3};
    char* out = NULL;
    EXPECT(zc_table(ks, 2, ts, 2, ZC_MODE_CONJECTURE, 1, &out) == ZC_OK);
    EXPECT(strstr(out, "\"r\":11") != NULL);
    zc_string_free(out);
    EXPECT(zc_table(ks, 2, ts, 2, ZC_MODE_CONJECTURE, 0, &out) == ZC_OK);
    EXPECT(strlen(out) > 0);
    zc_string_free(out);
}

int main(void) {
    round_trip();
    errors();
    verify_and_simulate();
    table();
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    puts("capi: all checks passed");
    return 0;
}
