#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace dcconv {

using Symbol = std::uint16_t;

// Finite field GF(p^e) with q = p^e <= 2^16, equipped with log/antilog tables
// over a fixed primitive element alpha.
//
// Element encoding: prime fields use residues 0..p-1.  Extension field
// elements are packed base-p digit strings: the coset representative
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} is encoded as sum c_i p^i.  Canonical
// ordering of elements is the ordering of these packed values.
class Field {
public:
    // modulus: coefficients of the defining polynomial, low to high, length
    // e+1 with nonzero leading coefficient (normalized monic internally).
    // Empty selects a built-in irreducible polynomial, available for p = 2.
    // alpha = 0 selects the smallest primitive element in canonical order.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e,
                                             const std::vector<Symbol>& modulus = {},
                                             Symbol alpha = 0);

    // q must be a prime power; factors q and forwards to make().
    static std::shared_ptr<const Field> make_q(std::uint32_t q,
                                               const std::vector<Symbol>& modulus = {},
                                               Symbol alpha = 0);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t n() const { return q_ - 1; }  // order of the multiplicative group
    Symbol alpha() const { return alpha_; }
    const std::vector<Symbol>& modulus() const { return modulus_; }  // empty when e == 1

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const;
    Symbol neg(Symbol a) const;
    Symbol mul(Symbol a, Symbol b) const;
    Symbol div(Symbol a, Symbol b) const;  // b == 0 raises Param
    Symbol inv(Symbol a) const;            // a == 0 raises Param

    // a^j with 0^0 = 1; negative exponents require a != 0
    Symbol pow(Symbol a, std::int64_t j) const;
    // alpha^j, exponent reduced mod q-1
    Symbol alpha_pow(std::int64_t j) const;
    // discrete log base alpha; a must be nonzero
    std::uint32_t log(Symbol a) const;

    bool is_primitive(Symbol g) const;

    // table-free arithmetic; construction-time workhorse, kept public as a
    // test oracle
    Symbol raw_add(Symbol a, Symbol b) const;
    Symbol raw_neg(Symbol a) const;
    Symbol raw_mul(Symbol a, Symbol b) const;
    Symbol raw_pow(Symbol a, std::uint64_t j) const;

private:
    Field() = default;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    Symbol alpha_ = 0;
    std::vector<Symbol> modulus_;     // normalized monic, length e+1; empty when e == 1
    std::vector<Symbol> exp_;         // size 2(q-1); exp_[i] = alpha^i
    std::vector<std::uint32_t> log_;  // size q; log_[0] is a sentinel
};

// distinct prime factors, ascending
std::vector<std::uint32_t> prime_factors(std::uint32_t v);

}  // namespace dcconv
