#include "windec.hpp"

#include <algorithm>

namespace dcconv {
namespace {

// blocks 0..upto of the convolution of per-step coordinates with G
Vec conv_blocks(const DoublyCyclicCode& code, const Vec& x, std::uint32_t upto) {
    const Field& F = code.F();
    const std::uint32_t n = code.enc.n, k = code.enc.k, m = code.enc.m;
    Vec out(static_cast<std::size_t>(upto + 1) * n, 0);
    const std::uint32_t steps = static_cast<std::uint32_t>(x.size() / k);
    for (std::uint32_t j = 0; j <= upto; ++j) {
        Vec blk(n, 0);
        for (std::uint32_t i = 0; i < steps && i <= j; ++i) {
            if (j - i > m) continue;
            const Matrix& g = code.enc.G[j - i];
            for (std::uint32_t r = 0; r < k; ++r)
                add_scaled_into(F, blk, x[static_cast<std::size_t>(i) * k + r], g.row(r));
        }
        std::copy(blk.begin(), blk.end(), out.begin() + static_cast<std::size_t>(j) * n);
    }
    return out;
}

Vec window_block(const Vec& window, std::uint32_t n, std::uint32_t j) {
    return Vec(window.begin() + static_cast<std::size_t>(j) * n,
               window.begin() + static_cast<std::size_t>(j + 1) * n);
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<std::pair<Vec, Vec>> extend_partial(const DoublyCyclicCode& code, const Vec& x_partial,
                                                std::uint32_t level, const Vec& window,
                                                const WindecConfig& cfg) {
    const Field& F = code.F();
    const std::uint32_t n = code.enc.n, k = code.enc.k, m = code.enc.m;
    if (window.size() != static_cast<std::size_t>(m + 1) * n)
        raise(ErrKind::Param, "window length mismatch");
    if (x_partial.size() != static_cast<std::size_t>(level + 1) * k)
        raise(ErrKind::Param, "partial coordinate length mismatch");
    if (cfg.branch_cap < 1) raise(ErrKind::Param, "branch cap must be at least 1");

    std::vector<Vec> frontier{x_partial};
    for (std::uint32_t j = level + 1; j <= m; ++j) {
        std::vector<Vec> next;
        for (const Vec& x : frontier) {
            // residual of block j after the contribution of steps 0..j-1
            Vec acc(n, 0);
            const std::uint32_t steps = static_cast<std::uint32_t>(x.size() / k);
            for (std::uint32_t i = 0; i < steps && i < j; ++i) {
                if (j - i > m) continue;
                const Matrix& g = code.enc.G[j - i];
                for (std::uint32_t r = 0; r < k; ++r)
                    add_scaled_into(F, acc, x[static_cast<std::size_t>(i) * k + r], g.row(r));
            }
            Vec target = vec_sub(F, window_block(window, n, j), acc);
            SearchResult sr = nearest_codeword_search(F, code.stacks[0].gen, target, n,
                                                      cfg.branch_cap, cfg.enum_cap);
            for (const SearchCandidate& c : sr.candidates) {
                Vec ext = x;
                ext.insert(ext.end(), c.message.begin(), c.message.end());
                next.push_back(std::move(ext));
            }
        }
        // keep the closest branch_cap on the extended blocks, lex tie-break
        std::vector<std::pair<std::uint32_t, std::size_t>> order;
        for (std::size_t idx = 0; idx < next.size(); ++idx) {
            Vec w = conv_blocks(code, next[idx], j);
            std::uint32_t dist = 0;
            for (std::uint32_t t = level + 1; t <= j; ++t)
                dist += hamming_distance(window_block(w, n, t), window_block(window, n, t));
            order.emplace_back(dist, idx);
        }
        std::sort(order.begin(), order.end(),
                  [&](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return lex_less(next[a.second], next[b.second]);
                  });
        std::vector<Vec> kept;
        for (std::size_t i = 0; i < order.size() && i < cfg.branch_cap; ++i)
            kept.push_back(next[order[i].second]);
        frontier = std::move(kept);
    }

    std::vector<std::pair<Vec, Vec>> out;
    for (Vec& x : frontier) {
        Vec w = conv_blocks(code, x, m);
        out.emplace_back(std::move(x), std::move(w));
    }
    return out;
}

std::pair<Vec, Vec> fallback_select(const std::vector<std::pair<Vec, Vec>>& candidates,
                                    const Vec& window) {
    if (candidates.empty()) raise(ErrKind::Internal, "no fallback candidates");
    const std::pair<Vec, Vec>* best = nullptr;
    std::uint32_t best_dist = 0;
    for (const auto& cand : candidates) {
        std::uint32_t d = hamming_distance(cand.second, window);
        if (!best || d < best_dist || (d == best_dist && lex_less(cand.first, best->first))) {
            best = &cand;
            best_dist = d;
        }
    }
    return *best;
}

PartialOutcome partial_block_decode(const DoublyCyclicCode& code, const Vec& window,
                                    const WindecConfig& cfg) {
    const Field& F = code.F();
    const std::uint32_t n = code.enc.n, k = code.enc.k, m = code.enc.m;
    if (window.size() != static_cast<std::size_t>(m + 1) * n)
        raise(ErrKind::Param, "window length mismatch");

    PartialOutcome out;
    std::vector<std::pair<Vec, std::uint32_t>> partials;  // (coords, level)

    std::vector<std::uint32_t> dsum(m + 1, 0);  // accumulated level distances
    for (std::uint32_t l = 0; l <= m; ++l)
        dsum[l] = (l ? dsum[l - 1] : 0) + code.level_dist[l];

    for (std::uint32_t l = m + 1; l-- > 0;) {
        const StackedCode& stack = code.stacks[l];
        Vec wl = window_block(window, n, l);
        std::vector<std::pair<Vec, std::uint32_t>> candidates;  // (coords, rs errors)
        ++out.rs_calls;
        if (!cfg.step2_list) {
            RsResult rs = rs_bounded_decode(F, stack, wl);
            if (rs.ok) candidates.emplace_back(recover_message(F, stack, rs.codeword), rs.errors);
        } else {
            SearchResult sr = nearest_codeword_search(F, stack.gen, wl, stack.dist - 1,
                                                      cfg.branch_cap, cfg.enum_cap);
            if (sr.within_radius)
                for (SearchCandidate& c : sr.candidates)
                    candidates.emplace_back(std::move(c.message), c.dist);
        }
        if (candidates.empty()) {
            LevelTrace tr;
            tr.level = static_cast<int>(l);
            out.levels.push_back(std::move(tr));
            continue;
        }
        for (auto& [coords, nerr] : candidates) {
            Vec w = conv_blocks(code, coords, l);
            std::uint32_t dist = hamming_distance(
                w, Vec(window.begin(), window.begin() + static_cast<std::size_t>(l + 1) * n));
            std::uint32_t threshold = (dsum[l] - 1) / 2;
            LevelTrace tr;
            tr.level = static_cast<int>(l);
            tr.step2_ok = true;
            tr.rs_errors = nerr;
            tr.w = w;
            tr.x = coords;
            tr.dist = dist;
            tr.threshold = threshold;
            tr.accepted = dist <= threshold;
            out.levels.push_back(tr);
            if (dist <= threshold) {
                Vec x_full = coords;
                x_full.resize(static_cast<std::size_t>(m + 1) * k, 0);
                out.x_full = x_full;
                out.w_full = conv_blocks(code, x_full, m);
                out.level = static_cast<int>(l);
                return out;
            }
            partials.emplace_back(std::move(coords), l);
        }
    }

    if (cfg.strict) raise(ErrKind::Decode, "no level accepted the window (strict mode)");

    std::vector<std::pair<Vec, Vec>> full;
    if (!partials.empty()) {
        out.fallback_case = 'a';
        for (const auto& [coords, l] : partials)
            for (auto& cand : extend_partial(code, coords, l, window, cfg))
                full.push_back(std::move(cand));
    } else {
        out.fallback_case = 'b';
        SearchResult sr = nearest_codeword_search(F, code.stacks[0].gen,
                                                  window_block(window, n, 0), n, cfg.branch_cap,
                                                  cfg.enum_cap);
        for (const SearchCandidate& c : sr.candidates)
            for (auto& cand : extend_partial(code, c.message, 0, window, cfg))
                full.push_back(std::move(cand));
    }
    auto [x, w] = fallback_select(full, window);
    out.x_full = std::move(x);
    out.w_full = std::move(w);
    out.level = -1;
    out.fallback = true;
    out.detected = true;
    return out;
}

PartialDecoder make_partial_decoder(const DoublyCyclicCode& code, const WindecConfig& cfg) {
    return [code, cfg](const Vec& window) { return partial_block_decode(code, window, cfg); };
}

}  // namespace dcconv
