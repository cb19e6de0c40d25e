#include "rsdec.hpp"

#include <algorithm>

namespace dcconv {
namespace {

// Berlekamp-Massey: shortest LFSR generating the syndrome sequence.
// Returns the connection polynomial Lambda, constant term 1.
Vec berlekamp_massey(const Field& F, const std::vector<Symbol>& S) {
    Vec lambda{1}, prev{1};
    std::uint32_t L = 0, shift = 1;
    Symbol prev_delta = 1;
    for (std::size_t i = 0; i < S.size(); ++i) {
        Symbol delta = S[i];
        for (std::uint32_t j = 1; j <= L && j < lambda.size(); ++j)
            delta = F.add(delta, F.mul(lambda[j], S[i - j]));
        if (delta == 0) {
            ++shift;
        } else if (2 * L <= i) {
            Vec tmp = lambda;
            Symbol c = F.div(delta, prev_delta);
            if (lambda.size() < prev.size() + shift) lambda.resize(prev.size() + shift, 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                lambda[j + shift] = F.sub(lambda[j + shift], F.mul(c, prev[j]));
            L = static_cast<std::uint32_t>(i + 1 - L);
            prev = std::move(tmp);
            prev_delta = delta;
            shift = 1;
        } else {
            Symbol c = F.div(delta, prev_delta);
            if (lambda.size() < prev.size() + shift) lambda.resize(prev.size() + shift, 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                lambda[j + shift] = F.sub(lambda[j + shift], F.mul(c, prev[j]));
            ++shift;
        }
    }
    return poly_trim(lambda);
}

}  // namespace

RsResult rs_bounded_decode(const Field& F, const StackedCode& s, const Vec& word) {
    const std::uint32_t n = F.n();
    if (word.size() != n) raise(ErrKind::Param, "word length mismatch");
    const std::uint32_t r = s.dist - 1;  // number of syndrome positions

    std::vector<Symbol> synd(r);
    bool clean = true;
    for (std::uint32_t i = 0; i < r; ++i) {
        synd[i] = poly_eval(F, word, F.alpha_pow(i));
        clean = clean && synd[i] == 0;
    }
    if (clean) return RsResult{true, word, 0};
    if (s.t == 0) return RsResult{};

    std::vector<Symbol> bm(synd.begin(), synd.begin() + 2 * s.t);
    Vec lambda = berlekamp_massey(F, bm);
    std::uint32_t L = static_cast<std::uint32_t>(poly_deg(lambda));
    if (L == 0 || L > s.t) return RsResult{};

    // roots of Lambda among the inverse locators alpha^{-pos}
    std::vector<std::uint32_t> positions;
    for (std::uint32_t pos = 0; pos < n; ++pos) {
        Symbol x_inv = F.alpha_pow(-static_cast<std::int64_t>(pos));
        if (poly_eval(F, lambda, x_inv) == 0) positions.push_back(pos);
    }
    if (positions.size() != L) return RsResult{};

    // evaluator Omega = S(x) Lambda(x) mod x^{2t}
    Vec omega(2 * s.t, 0);
    for (std::uint32_t i = 0; i < 2 * s.t; ++i) {
        Symbol acc = 0;
        for (std::uint32_t j = 0; j <= i && j < lambda.size(); ++j)
            acc = F.add(acc, F.mul(lambda[j], bm[i - j]));
        omega[i] = acc;
    }
    // formal derivative of Lambda
    Vec dlambda(lambda.size() > 1 ? lambda.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < lambda.size(); ++i)
        dlambda[i - 1] = F.mul(lambda[i], static_cast<Symbol>(i % F.p()));

    Vec corrected = word;
    for (std::uint32_t pos : positions) {
        Symbol xi = F.alpha_pow(pos);
        Symbol xi_inv = F.alpha_pow(-static_cast<std::int64_t>(pos));
        Symbol den = poly_eval(F, dlambda, xi_inv);
        if (den == 0) return RsResult{};
        // error magnitude for root offset 0: -x_i Omega(x_i^{-1}) / Lambda'(x_i^{-1})
        Symbol mag = F.neg(F.mul(xi, F.div(poly_eval(F, omega, xi_inv), den)));
        if (mag == 0) return RsResult{};
        corrected[pos] = F.sub(corrected[pos], mag);
    }

    for (std::uint32_t i = 0; i < r; ++i)
        if (poly_eval(F, corrected, F.alpha_pow(i)) != 0) return RsResult{};
    return RsResult{true, corrected, L};
}

Vec recover_message(const Field& F, const StackedCode& s, const Vec& codeword) {
    auto x = solve_right(F, s.gen, codeword);
    if (!x) raise(ErrKind::Param, "word is not in the level code");
    return *x;
}

SearchResult nearest_codeword_search(const Field& F, const Matrix& gen, const Vec& word,
                                     std::uint32_t radius, std::uint32_t max_list,
                                     std::uint64_t enum_cap) {
    if (word.size() != gen.cols) raise(ErrKind::Param, "word length mismatch");
    if (max_list < 1) raise(ErrKind::Param, "max_list must be at least 1");
    if (enum_size(F.q(), gen.rows, enum_cap) > enum_cap)
        raise(ErrKind::Limit, "code too large to enumerate");

    // keep the best max_list by (distance, enumeration order); enumeration is
    // lexicographic, so ties stay in lexicographic message order
    std::vector<SearchCandidate> top;
    Vec u(gen.rows, 0);
    bool more = true;
    while (more) {
        Vec cw = mul_vec_mat(F, u, gen);
        std::uint32_t d = hamming_distance(cw, word);
        if (top.size() < max_list || d < top.back().dist) {
            auto it = std::upper_bound(top.begin(), top.end(), d,
                                       [](std::uint32_t lhs, const SearchCandidate& c) {
                                           return lhs < c.dist;
                                       });
            top.insert(it, SearchCandidate{u, std::move(cw), d});
            if (top.size() > max_list) top.pop_back();
        }
        // advance the odometer (last coordinate fastest)
        more = false;
        for (std::size_t i = u.size(); i-- > 0;) {
            if (++u[i] < F.q()) {
                more = true;
                break;
            }
            u[i] = 0;
        }
        if (u.empty()) break;
    }

    SearchResult res;
    if (top.empty()) raise(ErrKind::Internal, "empty candidate set");
    if (top.front().dist <= radius) {
        res.within_radius = true;
        for (auto& c : top)
            if (c.dist <= radius) res.candidates.push_back(std::move(c));
    } else {
        std::uint32_t best = top.front().dist;
        for (auto& c : top)
            if (c.dist == best) res.candidates.push_back(std::move(c));
    }
    return res;
}

}  // namespace dcconv
