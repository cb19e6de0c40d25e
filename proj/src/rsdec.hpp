#pragma once

#include "dcc.hpp"

namespace dcconv {

struct RsResult {
    bool ok = false;
    Vec codeword;             // length n when ok
    std::uint32_t errors = 0; // corrected positions
};

// Bounded-distance decoding of `word` against the level code: syndrome
// computation at the roots alpha^0..alpha^{d-2}, Berlekamp-Massey, Chien
// search, Forney magnitudes. ok=false when no codeword lies within t errors
// or the candidate fails the full syndrome check. t=0 degenerates to a
// membership test.
RsResult rs_bounded_decode(const Field& F, const StackedCode& s, const Vec& word);

// Coordinates x with x * s.gen = codeword, ordered like the generator rows
// (x_0 scales the top block G_l). Raises Param when codeword is not in the
// level code.
Vec recover_message(const Field& F, const StackedCode& s, const Vec& codeword);

struct SearchCandidate {
    Vec message;
    Vec codeword;
    std::uint32_t dist = 0;
};

struct SearchResult {
    // sorted by (distance, lexicographic message), truncated to max_list
    std::vector<SearchCandidate> candidates;
    // true: candidates are exactly the codewords within `radius` (up to the
    // cap); false: none were, candidates hold the global nearest instead
    bool within_radius = false;
};

// Exhaustive search over the row space of gen (q^rows codewords, guarded by
// enum_cap).
SearchResult nearest_codeword_search(const Field& F, const Matrix& gen, const Vec& word,
                                     std::uint32_t radius, std::uint32_t max_list,
                                     std::uint64_t enum_cap = 1u << 20);

}  // namespace dcconv
