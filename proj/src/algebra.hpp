#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace dcconv {

using Vec = std::vector<Symbol>;

struct Matrix {
    std::uint32_t rows = 0, cols = 0;
    std::vector<Symbol> a;  // row-major

    static Matrix zeros(std::uint32_t r, std::uint32_t c) {
        Matrix m;
        m.rows = r;
        m.cols = c;
        m.a.assign(static_cast<std::size_t>(r) * c, 0);
        return m;
    }
    Symbol& at(std::uint32_t r, std::uint32_t c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Symbol at(std::uint32_t r, std::uint32_t c) const {
        return a[static_cast<std::size_t>(r) * cols + c];
    }
    Vec row(std::uint32_t r) const {
        return Vec(a.begin() + static_cast<std::size_t>(r) * cols,
                   a.begin() + static_cast<std::size_t>(r + 1) * cols);
    }
    bool operator==(const Matrix&) const = default;
};

Matrix matrix_from_rows(const std::vector<Vec>& rows);

Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
// acc += c * v
void add_scaled_into(const Field& F, Vec& acc, Symbol c, const Vec& v);
// u * M for a row vector u of length M.rows
Vec mul_vec_mat(const Field& F, const Vec& u, const Matrix& M);

std::uint32_t hamming_weight(const Vec& v);
std::uint32_t hamming_distance(const Vec& a, const Vec& b);  // sizes must match

// --- cyclic ring F_q[x]/(x^n - 1), n = q - 1 ---
// Elements are coefficient vectors of length n, low to high.

Vec ring_mul(const Field& F, const Vec& a, const Vec& b);
// sigma^j applied coefficientwise, where sigma(x) = alpha^k x:
// the coefficient of x^i picks up a factor alpha^{k*i*j}
Vec sigma_apply(const Field& F, const Vec& g, std::uint32_t k, std::uint32_t j);

// --- plain polynomials, coefficients low to high ---
// The zero polynomial is any all-zero (or empty) vector; poly_deg returns -1.

int poly_deg(const Vec& a);
Vec poly_trim(const Vec& a);
Vec poly_mul(const Field& F, const Vec& a, const Vec& b);
// den must be nonzero; returns (quotient, remainder)
std::pair<Vec, Vec> poly_divmod(const Field& F, const Vec& num, const Vec& den);
Vec poly_gcd(const Field& F, Vec a, Vec b);  // monic, [] for gcd(0,0)
Symbol poly_eval(const Field& F, const Vec& a, Symbol x);

// Solves x * M = target for a row vector x of length M.rows.
// Requires M to have full row rank (raises Param otherwise); returns nullopt
// when target lies outside the row space.
std::optional<Vec> solve_right(const Field& F, const Matrix& M, const Vec& target);

std::uint32_t matrix_rank(const Field& F, Matrix M);

}  // namespace dcconv
