/* dcconv: convolutional coding over GF(q) with stacked Reed-Solomon window
 * decoding.
 *
 * All functions returning dcv_status report DCV_OK on success; on failure
 * dcv_last_error() describes the most recent error in the calling thread.
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function. Out-parameters are left
 * untouched on failure.
 */
#ifndef DCCONV_H
#define DCCONV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DCV_API __declspec(dllexport)
#else
#define DCV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dcv_status {
    DCV_OK = 0,
    DCV_ERR_PARAM = 1,    /* invalid argument or unsatisfiable parameters */
    DCV_ERR_DATA = 2,     /* malformed file or stream contents */
    DCV_ERR_IO = 3,       /* filesystem failure */
    DCV_ERR_LIMIT = 4,    /* enumeration cap exceeded */
    DCV_ERR_DECODE = 5,   /* decode failure in strict mode */
    DCV_ERR_INTERNAL = 6  /* broken invariant */
} dcv_status;

typedef struct dcv_code dcv_code;     /* a code together with its decoder tables */
typedef struct dcv_stream dcv_stream; /* a sequence of fixed-width symbol blocks */

/* Builds the code over GF(q) with message width k and memory m.
 * q must be a prime power at most 2^16; the block length is n = q-1.
 * modulus: coefficients of the defining polynomial (low to high, len+1 ==
 * extension degree + 1) for extension fields; pass NULL/0 to use a built-in
 * (available for q = 2^e) or for prime q. alpha = 0 picks the smallest
 * primitive element. Constraints: 1 <= k <= (q-1)/2, (m+1)k <= q-1. */
DCV_API dcv_status dcv_code_build(uint32_t q, const uint16_t* modulus, size_t modulus_len,
                                  uint16_t alpha, uint32_t k, uint32_t m, dcv_code** out);
DCV_API dcv_status dcv_code_load(const char* path, dcv_code** out);
DCV_API dcv_status dcv_code_save(const dcv_code* code, const char* path);
DCV_API void dcv_code_free(dcv_code* code);

DCV_API uint32_t dcv_code_q(const dcv_code* code);
DCV_API uint32_t dcv_code_n(const dcv_code* code);
DCV_API uint32_t dcv_code_k(const dcv_code* code);
DCV_API uint32_t dcv_code_m(const dcv_code* code);
DCV_API uint16_t dcv_code_alpha(const dcv_code* code);
/* d_level for level in [0, m]; 0 when level is out of range */
DCV_API uint32_t dcv_code_level_distance(const dcv_code* code, uint32_t level);
/* sum of level distances minus 1: the window decoding weight parameter */
DCV_API uint32_t dcv_code_distance(const dcv_code* code);
DCV_API uint32_t dcv_code_dfree(const dcv_code* code);

typedef enum dcv_role {
    DCV_ROLE_MESSAGE = 0,  /* width k */
    DCV_ROLE_CODEWORD = 1, /* width n */
    DCV_ROLE_RECEIVED = 2  /* width n */
} dcv_role;

/* symbols: nblocks * width values, block by block */
DCV_API dcv_status dcv_stream_new(uint32_t width, size_t nblocks, const uint16_t* symbols,
                                  dcv_stream** out);
/* Loads a stream file; when code is non-NULL the file header must describe
 * the same code (DCV_ERR_DATA otherwise). */
DCV_API dcv_status dcv_stream_load(const char* path, const dcv_code* code, dcv_stream** out);
DCV_API dcv_status dcv_stream_save(const dcv_code* code, const dcv_stream* stream, dcv_role role,
                                   const char* path);
DCV_API uint32_t dcv_stream_width(const dcv_stream* stream);
DCV_API size_t dcv_stream_blocks(const dcv_stream* stream);
/* copies all symbols; buf_len must be at least blocks*width */
DCV_API dcv_status dcv_stream_copy_out(const dcv_stream* stream, uint16_t* buf, size_t buf_len);
DCV_API void dcv_stream_free(dcv_stream* stream);

/* message (width k) -> codeword stream (width n, message blocks + m) */
DCV_API dcv_status dcv_encode(const dcv_code* code, const dcv_stream* message, dcv_stream** out);

typedef enum dcv_model {
    DCV_MODEL_IID = 0,
    DCV_MODEL_BURST = 1,
    DCV_MODEL_CAPPED = 2 /* every m+1 block window stays within cap errors */
} dcv_model;

/* Adds a seeded pseudorandom error pattern; identical seeds give identical
 * patterns. total_errors may be NULL. */
DCV_API dcv_status dcv_corrupt(const dcv_code* code, const dcv_stream* in, dcv_model model,
                               double rate, uint32_t burst_len, uint32_t cap, uint64_t seed,
                               dcv_stream** out, uint32_t* total_errors);

#define DCV_DECODE_STRICT 1u     /* fail instead of taking the fallback */
#define DCV_DECODE_STEP2_LIST 2u /* exhaustive list decoding inside each level */
#define DCV_DECODE_VERBOSE 4u    /* per-level trace in the JSON report */

/* Sliding-window decode. decoded (width n), messages (width k) and
 * report_json are each optional; free the report with dcv_string_free. */
DCV_API dcv_status dcv_decode(const dcv_code* code, const dcv_stream* received, uint32_t flags,
                              dcv_stream** decoded, dcv_stream** messages, char** report_json);

/* Code diagnostics as JSON. enumerate_d != 0 runs the exhaustive window
 * weight search; dfree_cap > 0 adds a distance scan over messages of that
 * degree. */
DCV_API dcv_status dcv_analyze(const dcv_code* code, int enumerate_d, uint32_t dfree_cap,
                               char** json_out);

/* Monte Carlo comparison of the sliding decoder against independent
 * blockwise decoding, reported as JSON. */
DCV_API dcv_status dcv_simulate(const dcv_code* code, uint32_t trials, uint32_t msg_len,
                                dcv_model model, double rate, uint32_t burst_len, uint32_t cap,
                                uint64_t seed, char** json_out);

DCV_API void dcv_string_free(char* s);

/* message of the most recent failure in this thread; never NULL */
DCV_API const char* dcv_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* DCCONV_H */
