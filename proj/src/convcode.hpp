#pragma once

#include <functional>
#include <memory>

#include "algebra.hpp"

namespace dcconv {

// Sequence of fixed-width blocks over one field.
struct SymbolStream {
    std::uint32_t width = 0;
    std::vector<Vec> blocks;

    std::size_t size() const { return blocks.size(); }
    bool operator==(const SymbolStream&) const = default;
};

SymbolStream make_stream(std::uint32_t width, std::vector<Vec> blocks);

// Polynomial generator matrix G(z) = G_0 + G_1 z + ... + G_m z^m with k x n
// coefficient matrices; encodes length-k message blocks into length-n
// codeword blocks.
struct ConvEncoder {
    std::shared_ptr<const Field> field;
    std::uint32_t n = 0, k = 0, m = 0;
    std::vector<Matrix> G;  // m+1 coefficient matrices

    const Field& F() const { return *field; }
};

ConvEncoder make_encoder(std::shared_ptr<const Field> field, std::uint32_t n, std::uint32_t k,
                         std::uint32_t m, std::vector<Matrix> G);

// v_t = sum_i u_{t-i} G_i for t = 0..T+m-1, with u zero outside [0,T)
SymbolStream encode(const ConvEncoder& enc, const SymbolStream& u);

// Window matrices for processing depth N:
//   Ghat  (N k x N n): block (i,j) = G_{j-i} for 0 <= j-i <= m, else 0.
//     Its row space is the window code seen by each decoding cycle.
//   Gtilde (m k x N n): block (i,j) = G_{m-i+j} for j <= i, else 0.
//     Multiplied by the last m committed message blocks it yields the
//     contribution of the past to the current window.
struct WindowMatrices {
    Matrix Ghat, Gtilde;
};
WindowMatrices window_matrices(const ConvEncoder& enc, std::uint32_t N);

struct WindowContext {
    std::uint32_t N = 0;  // processing depth, in blocks
    std::uint32_t L = 1;  // blocks committed per cycle, L <= N
    std::uint32_t d = 0;  // weight parameter driving detection thresholds
    WindowMatrices mats;
};
WindowContext make_window_context(const ConvEncoder& enc, std::uint32_t N, std::uint32_t L,
                                  std::uint32_t d);

// Largest d such that every window-code word of weight <= d has zero first-L
// blocks: one less than the minimum weight over words with a nonzero opening.
// Exhaustive over q^{Nk} messages; raises Limit beyond enum_cap.
std::uint32_t weight_param_search(const ConvEncoder& enc, std::uint32_t N, std::uint32_t L,
                                  std::uint64_t enum_cap = 1u << 20);

// Per-level record of one window decode attempt (produced by the stacked
// decoder; the brute-force decoder leaves the list empty).
struct LevelTrace {
    int level = 0;
    bool step2_ok = false;    // a candidate emerged at this level
    std::uint32_t rs_errors = 0;
    Vec w;                    // candidate expanded to blocks 0..level
    Vec x;                    // its coordinates, (level+1)k symbols
    std::uint32_t dist = 0;   // distance to the leading window blocks
    std::uint32_t threshold = 0;
    bool accepted = false;
};

// Result of decoding one syndrome-adjusted window word.
struct PartialOutcome {
    Vec w_full;               // chosen window codeword, N*n symbols
    Vec x_full;               // its message, N*k symbols
    int level = -1;           // accepting stack level, -1 outside the stacked path
    bool fallback = false;
    char fallback_case = 0;   // 'a' or 'b' when fallback
    bool detected = false;    // decoder signalled failure for this window
    std::uint32_t rs_calls = 0;
    std::vector<LevelTrace> levels;
};

using PartialDecoder = std::function<PartialOutcome(const Vec& window_word)>;

struct CycleRecord {
    std::uint32_t j = 0;  // cycle index; the window starts at block j*L
    Vec V;                // received window, zero padded, N*n
    Vec S;                // contribution of committed past, N*n
    Vec w;                // V - S, the word handed to the partial decoder
    PartialOutcome outcome;
};

struct DecodeReport {
    SymbolStream decoded;   // width n, one block per received block
    SymbolStream messages;  // width k
    std::vector<CycleRecord> cycles;
    std::vector<std::uint32_t> window_distance;  // received vs decoded, window at each block
    std::vector<bool> window_flagged;            // distance exceeds floor(d/2)
    bool error_detected = false;                 // any cycle fell back
};

DecodeReport sliding_decode(const ConvEncoder& enc, const WindowContext& ctx,
                            const SymbolStream& received, const PartialDecoder& partial);

// Exhaustive nearest-window-codeword decoder; ties resolved toward the
// lexicographically smallest message. Oracle-grade, q^{Nk} work per window.
PartialDecoder brute_force_partial(const ConvEncoder& enc, const WindowContext& ctx,
                                   std::uint64_t enum_cap = 1u << 20);

struct BasicReducedReport {
    bool basic = false;
    bool reduced = false;
    std::vector<int> row_degrees;  // degree of each generator row, -1 for a zero row
    int minor_degree = -1;         // max degree over all k x k minors, -1 if all vanish
};
// basic: gcd of all k x k minors is a nonzero constant.
// reduced: sum of row degrees equals the maximal minor degree.
BasicReducedReport check_basic_reduced(const ConvEncoder& enc);

struct DistanceReport {
    std::uint32_t dfree_upper = 0;  // min codeword weight over messages of length <= cap+1
    std::vector<std::uint32_t> column_distances;  // c_0..c_cap, nondecreasing lower bounds
};
DistanceReport distance_checks(const ConvEncoder& enc, std::uint32_t deg_cap,
                               std::uint64_t enum_cap = 1u << 20);

// q^count, saturating at cap+1 to keep feasibility checks overflow-free
std::uint64_t enum_size(std::uint32_t q, std::uint32_t count, std::uint64_t cap);

}  // namespace dcconv
