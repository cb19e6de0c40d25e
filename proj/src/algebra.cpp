#include "algebra.hpp"

#include <algorithm>

namespace dcconv {

Matrix matrix_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix{};
    Matrix m = Matrix::zeros(static_cast<std::uint32_t>(rows.size()),
                             static_cast<std::uint32_t>(rows[0].size()));
    for (std::uint32_t r = 0; r < m.rows; ++r) {
        if (rows[r].size() != m.cols) raise(ErrKind::Param, "ragged row lengths");
        std::copy(rows[r].begin(), rows[r].end(), m.a.begin() + static_cast<std::size_t>(r) * m.cols);
    }
    return m;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrKind::Param, "vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
    return out;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrKind::Param, "vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return out;
}

void add_scaled_into(const Field& F, Vec& acc, Symbol c, const Vec& v) {
    if (acc.size() != v.size()) raise(ErrKind::Param, "vector size mismatch");
    if (c == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] = F.add(acc[i], F.mul(c, v[i]));
}

Vec mul_vec_mat(const Field& F, const Vec& u, const Matrix& M) {
    if (u.size() != M.rows) raise(ErrKind::Param, "vector/matrix shape mismatch");
    Vec out(M.cols, 0);
    for (std::uint32_t r = 0; r < M.rows; ++r) {
        Symbol c = u[r];
        if (c == 0) continue;
        const Symbol* row = M.a.data() + static_cast<std::size_t>(r) * M.cols;
        for (std::uint32_t j = 0; j < M.cols; ++j) out[j] = F.add(out[j], F.mul(c, row[j]));
    }
    return out;
}

std::uint32_t hamming_weight(const Vec& v) {
    std::uint32_t w = 0;
    for (Symbol s : v) w += (s != 0);
    return w;
}

std::uint32_t hamming_distance(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrKind::Param, "vector size mismatch");
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

Vec ring_mul(const Field& F, const Vec& a, const Vec& b) {
    std::uint32_t n = F.n();
    if (a.size() != n || b.size() != n)
        raise(ErrKind::Param, "ring elements must have length q-1");
    Vec out(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            std::uint32_t idx = i + j >= n ? i + j - n : i + j;
            out[idx] = F.add(out[idx], F.mul(a[i], b[j]));
        }
    }
    return out;
}

Vec sigma_apply(const Field& F, const Vec& g, std::uint32_t k, std::uint32_t j) {
    std::uint32_t n = F.n();
    if (g.size() != n) raise(ErrKind::Param, "ring elements must have length q-1");
    Vec out(n);
    for (std::uint32_t i = 0; i < n; ++i)
        out[i] = F.mul(g[i], F.alpha_pow(static_cast<std::int64_t>(k) * i * j));
    return out;
}

int poly_deg(const Vec& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Vec poly_trim(const Vec& a) {
    int d = poly_deg(a);
    return Vec(a.begin(), a.begin() + (d + 1));
}

Vec poly_mul(const Field& F, const Vec& a, const Vec& b) {
    int da = poly_deg(a), db = poly_deg(b);
    if (da < 0 || db < 0) return {};
    Vec out(static_cast<std::size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

std::pair<Vec, Vec> poly_divmod(const Field& F, const Vec& num, const Vec& den) {
    int dd = poly_deg(den);
    if (dd < 0) raise(ErrKind::Param, "polynomial division by zero");
    Vec rem = poly_trim(num);
    int dr = poly_deg(rem);
    if (dr < dd) return {Vec{}, rem};
    Vec quot(static_cast<std::size_t>(dr - dd + 1), 0);
    Symbol lead_inv = F.inv(den[dd]);
    for (int i = dr; i >= dd; --i) {
        Symbol c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(c, den[j]));
    }
    return {quot, poly_trim(rem)};
}

Vec poly_gcd(const Field& F, Vec a, Vec b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (poly_deg(b) >= 0) {
        Vec r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    int d = poly_deg(a);
    if (d < 0) return {};
    Symbol lead_inv = F.inv(a[d]);
    for (auto& c : a) c = F.mul(c, lead_inv);
    return a;
}

Symbol poly_eval(const Field& F, const Vec& a, Symbol x) {
    Symbol acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

std::optional<Vec> solve_right(const Field& F, const Matrix& M, const Vec& target) {
    if (target.size() != M.cols) raise(ErrKind::Param, "target length mismatch");
    std::uint32_t rows = M.rows, cols = M.cols;
    if (rows == 0) {
        if (hamming_weight(target) != 0) return std::nullopt;
        return Vec{};
    }
    // eliminate on the transpose augmented with the target
    Matrix A = Matrix::zeros(cols, rows + 1);
    for (std::uint32_t r = 0; r < cols; ++r) {
        for (std::uint32_t c = 0; c < rows; ++c) A.at(r, c) = M.at(c, r);
        A.at(r, rows) = target[r];
    }
    std::vector<std::uint32_t> pivot_row(rows, 0);
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < rows && rank < cols; ++col) {
        std::uint32_t pr = rank;
        while (pr < cols && A.at(pr, col) == 0) ++pr;
        if (pr == cols) continue;
        for (std::uint32_t c = 0; c <= rows; ++c) std::swap(A.at(rank, c), A.at(pr, c));
        Symbol inv = F.inv(A.at(rank, col));
        for (std::uint32_t c = col; c <= rows; ++c) A.at(rank, c) = F.mul(A.at(rank, c), inv);
        for (std::uint32_t r = 0; r < cols; ++r) {
            if (r == rank) continue;
            Symbol f = A.at(r, col);
            if (f == 0) continue;
            for (std::uint32_t c = col; c <= rows; ++c)
                A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(rank, c)));
        }
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank < rows) raise(ErrKind::Param, "matrix does not have full row rank");
    for (std::uint32_t r = rank; r < cols; ++r)
        if (A.at(r, rows) != 0) return std::nullopt;
    Vec x(rows, 0);
    for (std::uint32_t col = 0; col < rows; ++col) x[col] = A.at(pivot_row[col], rows);
    return x;
}

std::uint32_t matrix_rank(const Field& F, Matrix M) {
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::uint32_t pr = rank;
        while (pr < M.rows && M.at(pr, col) == 0) ++pr;
        if (pr == M.rows) continue;
        for (std::uint32_t c = 0; c < M.cols; ++c) std::swap(M.at(rank, c), M.at(pr, c));
        Symbol inv = F.inv(M.at(rank, col));
        for (std::uint32_t c = col; c < M.cols; ++c) M.at(rank, c) = F.mul(M.at(rank, c), inv);
        for (std::uint32_t r = 0; r < M.rows; ++r) {
            if (r == rank) continue;
            Symbol f = M.at(r, col);
            if (f == 0) continue;
            for (std::uint32_t c = col; c < M.cols; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(f, M.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace dcconv
