#include "convcode.hpp"

#include <algorithm>

namespace dcconv {
namespace {

void check_stream(const ConvEncoder& enc, const SymbolStream& s, std::uint32_t width,
                  const char* what) {
    if (s.width != width) raise(ErrKind::Data, std::string(what) + ": block width mismatch");
    for (const Vec& b : s.blocks) {
        if (b.size() != width) raise(ErrKind::Data, std::string(what) + ": ragged block");
        for (Symbol v : b)
            if (v >= enc.F().q()) raise(ErrKind::Data, std::string(what) + ": symbol out of range");
    }
}

// lexicographic odometer over `len` symbols, last coordinate fastest
bool next_message(Vec& u, std::uint32_t q) {
    for (std::size_t i = u.size(); i-- > 0;) {
        if (++u[i] < q) return true;
        u[i] = 0;
    }
    return false;
}

}  // namespace

std::uint64_t enum_size(std::uint32_t q, std::uint32_t count, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < count; ++i) {
        if (total > cap / q + 1) return cap + 1;
        total *= q;
        if (total > cap) return cap + 1;
    }
    return total;
}

SymbolStream make_stream(std::uint32_t width, std::vector<Vec> blocks) {
    SymbolStream s;
    s.width = width;
    for (const Vec& b : blocks)
        if (b.size() != width) raise(ErrKind::Param, "ragged block");
    s.blocks = std::move(blocks);
    return s;
}

ConvEncoder make_encoder(std::shared_ptr<const Field> field, std::uint32_t n, std::uint32_t k,
                         std::uint32_t m, std::vector<Matrix> G) {
    if (!field) raise(ErrKind::Param, "null field");
    if (n < 1 || k < 1) raise(ErrKind::Param, "n and k must be positive");
    if (G.size() != m + 1) raise(ErrKind::Param, "expected m+1 coefficient matrices");
    for (const Matrix& g : G) {
        if (g.rows != k || g.cols != n) raise(ErrKind::Param, "coefficient matrix shape mismatch");
        for (Symbol v : g.a)
            if (v >= field->q()) raise(ErrKind::Param, "matrix entry out of range");
    }
    ConvEncoder enc;
    enc.field = std::move(field);
    enc.n = n;
    enc.k = k;
    enc.m = m;
    enc.G = std::move(G);
    return enc;
}

SymbolStream encode(const ConvEncoder& enc, const SymbolStream& u) {
    check_stream(enc, u, enc.k, "message stream");
    const Field& F = enc.F();
    std::size_t T = u.size();
    SymbolStream v;
    v.width = enc.n;
    v.blocks.assign(T ? T + enc.m : 0, Vec(enc.n, 0));
    for (std::size_t t = 0; t < v.blocks.size(); ++t) {
        Vec& out = v.blocks[t];
        for (std::uint32_t i = 0; i <= enc.m; ++i) {
            if (t < i || t - i >= T) continue;
            const Vec& ub = u.blocks[t - i];
            for (std::uint32_t r = 0; r < enc.k; ++r)
                add_scaled_into(F, out, ub[r], enc.G[i].row(r));
        }
    }
    return v;
}

WindowMatrices window_matrices(const ConvEncoder& enc, std::uint32_t N) {
    if (N < 1) raise(ErrKind::Param, "processing depth must be at least 1");
    const std::uint32_t n = enc.n, k = enc.k, m = enc.m;
    WindowMatrices wm;
    wm.Ghat = Matrix::zeros(N * k, N * n);
    for (std::uint32_t i = 0; i < N; ++i) {
        for (std::uint32_t j = i; j < N && j - i <= m; ++j) {
            const Matrix& g = enc.G[j - i];
            for (std::uint32_t r = 0; r < k; ++r)
                for (std::uint32_t c = 0; c < n; ++c) wm.Ghat.at(i * k + r, j * n + c) = g.at(r, c);
        }
    }
    wm.Gtilde = Matrix::zeros(m * k, N * n);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < N && j <= i; ++j) {
            const Matrix& g = enc.G[m - i + j];
            for (std::uint32_t r = 0; r < k; ++r)
                for (std::uint32_t c = 0; c < n; ++c)
                    wm.Gtilde.at(i * k + r, j * n + c) = g.at(r, c);
        }
    }
    return wm;
}

WindowContext make_window_context(const ConvEncoder& enc, std::uint32_t N, std::uint32_t L,
                                  std::uint32_t d) {
    if (L < 1 || L > N) raise(ErrKind::Param, "commit step must satisfy 1 <= L <= N");
    WindowContext ctx;
    ctx.N = N;
    ctx.L = L;
    ctx.d = d;
    ctx.mats = window_matrices(enc, N);
    return ctx;
}

std::uint32_t weight_param_search(const ConvEncoder& enc, std::uint32_t N, std::uint32_t L,
                                  std::uint64_t enum_cap) {
    if (L < 1 || L > N) raise(ErrKind::Param, "commit step must satisfy 1 <= L <= N");
    const Field& F = enc.F();
    if (enum_size(F.q(), N * enc.k, enum_cap) > enum_cap)
        raise(ErrKind::Limit, "window code too large to enumerate");
    WindowMatrices wm = window_matrices(enc, N);
    const std::uint32_t open = L * enc.n;
    std::uint32_t best = UINT32_MAX;
    Vec u(static_cast<std::size_t>(N) * enc.k, 0);
    while (next_message(u, F.q())) {
        Vec v = mul_vec_mat(F, u, wm.Ghat);
        bool opening = false;
        for (std::uint32_t i = 0; i < open; ++i)
            if (v[i]) {
                opening = true;
                break;
            }
        if (!opening) continue;
        best = std::min(best, hamming_weight(v));
        if (best == 1) break;  // cannot go lower; d_max = 0
    }
    if (best == UINT32_MAX)
        raise(ErrKind::Param, "no window codeword with a nonzero opening block");
    return best - 1;
}

DecodeReport sliding_decode(const ConvEncoder& enc, const WindowContext& ctx,
                            const SymbolStream& received, const PartialDecoder& partial) {
    check_stream(enc, received, enc.n, "received stream");
    const Field& F = enc.F();
    const std::uint32_t n = enc.n, k = enc.k, m = enc.m, N = ctx.N, L = ctx.L;
    const std::size_t T = received.size();

    DecodeReport rep;
    rep.decoded.width = n;
    rep.messages.width = k;
    if (T == 0) return rep;

    for (std::uint32_t j = 0; static_cast<std::size_t>(j) * L < T; ++j) {
        const std::size_t base = static_cast<std::size_t>(j) * L;
        CycleRecord cyc;
        cyc.j = j;
        cyc.V.assign(static_cast<std::size_t>(N) * n, 0);
        for (std::uint32_t t = 0; t < N; ++t) {
            if (base + t >= T) break;
            const Vec& b = received.blocks[base + t];
            std::copy(b.begin(), b.end(), cyc.V.begin() + static_cast<std::size_t>(t) * n);
        }
        Vec past(static_cast<std::size_t>(m) * k, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            // block i of the past vector is the message committed m-i cycles back
            std::int64_t t = static_cast<std::int64_t>(base) - m + i;
            if (t < 0) continue;
            const Vec& ub = rep.messages.blocks[static_cast<std::size_t>(t)];
            std::copy(ub.begin(), ub.end(), past.begin() + static_cast<std::size_t>(i) * k);
        }
        cyc.S = mul_vec_mat(F, past, ctx.mats.Gtilde);
        cyc.w = vec_sub(F, cyc.V, cyc.S);
        cyc.outcome = partial(cyc.w);
        if (cyc.outcome.w_full.size() != static_cast<std::size_t>(N) * n ||
            cyc.outcome.x_full.size() != static_cast<std::size_t>(N) * k)
            raise(ErrKind::Internal, "partial decoder returned wrong shapes");
        if (cyc.outcome.detected) rep.error_detected = true;
        for (std::uint32_t t = 0; t < L && base + t < T; ++t) {
            Vec vb(cyc.outcome.w_full.begin() + static_cast<std::size_t>(t) * n,
                   cyc.outcome.w_full.begin() + static_cast<std::size_t>(t + 1) * n);
            Vec sb(cyc.S.begin() + static_cast<std::size_t>(t) * n,
                   cyc.S.begin() + static_cast<std::size_t>(t + 1) * n);
            rep.decoded.blocks.push_back(vec_add(F, vb, sb));
            rep.messages.blocks.push_back(
                Vec(cyc.outcome.x_full.begin() + static_cast<std::size_t>(t) * k,
                    cyc.outcome.x_full.begin() + static_cast<std::size_t>(t + 1) * k));
        }
        rep.cycles.push_back(std::move(cyc));
    }

    // the committed stream must be the prefix of a codeword
    SymbolStream recheck = encode(enc, rep.messages);
    for (std::size_t t = 0; t < T; ++t)
        if (recheck.blocks[t] != rep.decoded.blocks[t])
            raise(ErrKind::Internal, "committed stream is not a codeword prefix");

    const std::uint32_t threshold = ctx.d / 2;
    for (std::size_t j = 0; j < T; ++j) {
        std::uint32_t dist = 0;
        for (std::uint32_t t = 0; t < N; ++t) {
            std::size_t idx = j + t;
            const Vec* a = idx < T ? &rep.decoded.blocks[idx] : nullptr;
            const Vec* b = idx < T ? &received.blocks[idx] : nullptr;
            if (a && b)
                dist += hamming_distance(*a, *b);
        }
        rep.window_distance.push_back(dist);
        rep.window_flagged.push_back(dist > threshold);
    }
    return rep;
}

PartialDecoder brute_force_partial(const ConvEncoder& enc, const WindowContext& ctx,
                                   std::uint64_t enum_cap) {
    const Field& F = enc.F();
    if (enum_size(F.q(), ctx.N * enc.k, enum_cap) > enum_cap)
        raise(ErrKind::Limit, "window code too large to enumerate");
    Matrix Ghat = ctx.mats.Ghat;
    std::uint32_t q = F.q();
    std::size_t len = static_cast<std::size_t>(ctx.N) * enc.n;
    std::size_t klen = static_cast<std::size_t>(ctx.N) * enc.k;
    const Field* fp = enc.field.get();
    auto field_keepalive = enc.field;
    return [=](const Vec& word) -> PartialOutcome {
        if (word.size() != len) raise(ErrKind::Param, "window word length mismatch");
        PartialOutcome out;
        std::uint32_t best = UINT32_MAX;
        Vec u(klen, 0);
        // include the all-zero message, then advance lexicographically
        do {
            Vec v = mul_vec_mat(*fp, u, Ghat);
            std::uint32_t d = hamming_distance(v, word);
            if (d < best) {
                best = d;
                out.w_full = std::move(v);
                out.x_full = u;
            }
        } while (next_message(u, q));
        (void)field_keepalive;
        return out;
    };
}

BasicReducedReport check_basic_reduced(const ConvEncoder& enc) {
    const Field& F = enc.F();
    const std::uint32_t n = enc.n, k = enc.k, m = enc.m;
    if (k > n) raise(ErrKind::Param, "generator has more rows than columns");
    if (k > 20) raise(ErrKind::Limit, "too many rows for minor enumeration");

    // entries as polynomials in the delay variable
    std::vector<std::vector<Vec>> P(k, std::vector<Vec>(n, Vec(m + 1, 0)));
    for (std::uint32_t j = 0; j <= m; ++j)
        for (std::uint32_t r = 0; r < k; ++r)
            for (std::uint32_t c = 0; c < n; ++c) P[r][c][j] = enc.G[j].at(r, c);

    BasicReducedReport rep;
    for (std::uint32_t r = 0; r < k; ++r) {
        int deg = -1;
        for (std::uint32_t c = 0; c < n; ++c) deg = std::max(deg, poly_deg(P[r][c]));
        rep.row_degrees.push_back(deg);
    }

    // determinant of the k x k submatrix on `cols`, Laplace expansion by rows
    std::vector<std::uint32_t> cols(k);
    std::function<Vec(std::uint32_t, std::uint32_t)> det = [&](std::uint32_t r,
                                                               std::uint32_t used) -> Vec {
        if (r == k) return Vec{1};
        Vec acc;
        std::uint32_t pos = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (used & (1u << i)) continue;
            const Vec& entry = P[r][cols[i]];
            if (poly_deg(entry) >= 0) {
                Vec term = poly_mul(F, entry, det(r + 1, used | (1u << i)));
                if (pos & 1)
                    for (auto& c : term) c = F.neg(c);
                if (acc.size() < term.size()) acc.resize(term.size(), 0);
                for (std::size_t t = 0; t < term.size(); ++t) acc[t] = F.add(acc[t], term[t]);
            }
            ++pos;
        }
        return acc;
    };

    Vec gcd;  // running gcd over minors
    bool any_nonzero = false;
    std::function<void(std::uint32_t, std::uint32_t)> choose = [&](std::uint32_t idx,
                                                                   std::uint32_t from) {
        if (idx == k) {
            Vec minor = det(0, 0);
            int dm = poly_deg(minor);
            if (dm >= 0) {
                any_nonzero = true;
                rep.minor_degree = std::max(rep.minor_degree, dm);
                if (poly_deg(gcd) != 0) gcd = poly_gcd(F, gcd, minor);
            }
            return;
        }
        for (std::uint32_t c = from; c < n; ++c) {
            cols[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);

    rep.basic = any_nonzero && poly_deg(gcd) == 0;
    int degsum = 0;
    bool zero_row = false;
    for (int dr : rep.row_degrees) {
        if (dr < 0) zero_row = true;
        degsum += std::max(dr, 0);
    }
    rep.reduced = !zero_row && rep.minor_degree >= 0 && degsum == rep.minor_degree;
    return rep;
}

DistanceReport distance_checks(const ConvEncoder& enc, std::uint32_t deg_cap,
                               std::uint64_t enum_cap) {
    const Field& F = enc.F();
    const std::uint32_t q = F.q(), k = enc.k;
    if (enum_size(q, (deg_cap + 1) * k, enum_cap) > enum_cap)
        raise(ErrKind::Limit, "message space too large to enumerate");

    DistanceReport rep;
    rep.column_distances.assign(deg_cap + 1, UINT32_MAX);
    rep.dfree_upper = UINT32_MAX;
    SymbolStream u;
    u.width = k;
    u.blocks.assign(deg_cap + 1, Vec(k, 0));
    Vec flat(static_cast<std::size_t>(deg_cap + 1) * k, 0);
    while (next_message(flat, q)) {
        // restrict to a nonzero leading block; every codeword is a shift of one
        bool lead = false;
        for (std::uint32_t i = 0; i < k; ++i)
            if (flat[i]) {
                lead = true;
                break;
            }
        if (!lead) continue;
        for (std::uint32_t t = 0; t <= deg_cap; ++t)
            std::copy(flat.begin() + static_cast<std::size_t>(t) * k,
                      flat.begin() + static_cast<std::size_t>(t + 1) * k, u.blocks[t].begin());
        SymbolStream v = encode(enc, u);
        std::uint32_t acc = 0;
        for (std::uint32_t t = 0; t <= deg_cap; ++t) {
            acc += hamming_weight(v.blocks[t]);
            rep.column_distances[t] = std::min(rep.column_distances[t], acc);
        }
        std::uint32_t full = acc;
        for (std::size_t t = deg_cap + 1; t < v.size(); ++t) full += hamming_weight(v.blocks[t]);
        rep.dfree_upper = std::min(rep.dfree_upper, full);
    }
    return rep;
}

}  // namespace dcconv
