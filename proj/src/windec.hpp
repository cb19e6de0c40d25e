#pragma once

#include "rsdec.hpp"

namespace dcconv {

struct WindecConfig {
    std::uint32_t branch_cap = 4;  // tie branching kept per extension level
    bool step2_list = false;       // exhaustive list decoding per level instead of
                                   // bounded-distance decoding
    bool strict = false;           // raise Decode instead of taking the fallback
    std::uint64_t enum_cap = 1u << 20;
};

// Decodes one syndrome-adjusted window word of (m+1)n symbols against the
// level stack: walk levels l = m..0, bounded-distance decode block l against
// the level-l code, expand the candidate to blocks 0..l and accept when its
// distance to the window stays within half the accumulated level distances.
// If no level accepts, fall back to the nearest extension of the collected
// partial candidates (case 'a') or, with none, of the nearest block-0
// decodes (case 'b'); fallback marks the window as a detected error.
//
// The accepted coordinates are zero-extended to a full window codeword, so
// w_full/x_full always cover m+1 blocks.
PartialOutcome partial_block_decode(const DoublyCyclicCode& code, const Vec& window,
                                    const WindecConfig& cfg = {});

// Extends coordinates for levels 0..level upward through levels level+1..m:
// at each next block the residual after the committed prefix is decoded to
// the nearest multiple of G_0, branching on ties up to cfg.branch_cap and
// keeping the branch_cap extensions closest on the extended blocks.
// Returns (message, codeword) pairs covering all m+1 blocks.
std::vector<std::pair<Vec, Vec>> extend_partial(const DoublyCyclicCode& code, const Vec& x_partial,
                                                std::uint32_t level, const Vec& window,
                                                const WindecConfig& cfg = {});

// Among full-window (message, codeword) candidates picks the one closest to
// the window; ties go to the lexicographically smallest message.
std::pair<Vec, Vec> fallback_select(const std::vector<std::pair<Vec, Vec>>& candidates,
                                    const Vec& window);

// Adapter for sliding_decode; requires processing depth N = m+1.
PartialDecoder make_partial_decoder(const DoublyCyclicCode& code, const WindecConfig& cfg = {});

}  // namespace dcconv
