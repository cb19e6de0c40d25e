#pragma once

#include <string>

#include "convcode.hpp"

namespace dcconv {

// Block code at one level of the stack: the row space of (G_l; ...; G_0),
// which equals the cyclic code generated by gen_poly, a Reed-Solomon code
// with roots alpha^0..alpha^{n-(l+1)k-1}.
struct StackedCode {
    std::uint32_t level = 0;
    Matrix gen;      // (l+1)k x n, row blocks G_l down to G_0
    Vec gen_poly;    // plain polynomial, degree n-(l+1)k
    std::uint32_t dist = 0;  // n-(l+1)k+1
    std::uint32_t t = 0;     // (dist-1)/2
};

// Convolutional code over GF(q) with n = q-1 whose coefficient matrices are
// built from one ring element f and the automorphism sigma(x) = alpha^k x:
// row l of G_j is the coefficient vector of sigma^j(x^l f).
struct DoublyCyclicCode {
    ConvEncoder enc;
    Vec f;  // ring element of length n generating the top row block
    std::vector<StackedCode> stacks;       // level 0..m
    std::vector<std::uint32_t> level_dist; // d_l = n-(l+1)k+1
    std::uint32_t d = 0;      // sum of level distances minus 1
    std::uint32_t dfree = 0;  // (m+1)(n-k+1)

    const Field& F() const { return enc.F(); }
};

// Requires 1 <= k <= (q-1)/2 and 0 <= m <= (q-1)/k - 1.
DoublyCyclicCode make_code(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);

// membership via divisibility by the level generator polynomial
bool stack_membership(const Field& F, const StackedCode& s, const Vec& word);

// --- parameter records ---

struct CodeParams {
    std::uint32_t q = 0;
    Symbol alpha = 0;
    std::vector<Symbol> modulus;  // empty for prime fields
    std::uint32_t k = 0, m = 0;

    bool operator==(const CodeParams&) const = default;
};

CodeParams params_of(const DoublyCyclicCode& code);
DoublyCyclicCode code_from_params(const CodeParams& params);

std::string params_to_text(const CodeParams& params);
CodeParams params_from_text(const std::string& text);
void params_save(const CodeParams& params, const std::string& path);
CodeParams params_load(const std::string& path);

}  // namespace dcconv
