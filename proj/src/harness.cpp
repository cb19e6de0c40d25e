#include "harness.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace dcconv {
namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (Symbol s : v) out.push_back(s);
    return out;
}

Json stream_json(const SymbolStream& s) {
    Json out = Json::array();
    for (const Vec& b : s.blocks) out.push_back(vec_json(b));
    return out;
}

const char* role_name(StreamRole role) {
    switch (role) {
        case StreamRole::Message: return "message";
        case StreamRole::Codeword: return "codeword";
        case StreamRole::Received: return "received";
    }
    raise(ErrKind::Internal, "unknown stream role");
}

}  // namespace

CorruptResult inject(const Field& F, const SymbolStream& v, const CorruptConfig& cfg) {
    if (cfg.rate < 0.0 || cfg.rate > 1.0) raise(ErrKind::Param, "rate must lie in [0,1]");
    const std::uint32_t q = F.q();
    for (const Vec& b : v.blocks)
        for (Symbol s : b)
            if (s >= q) raise(ErrKind::Data, "symbol out of range");

    CorruptResult res;
    res.corrupted = v;
    res.pattern = v;
    for (auto& b : res.pattern.blocks) std::fill(b.begin(), b.end(), 0);

    SplitMix64 rng(cfg.seed);
    const std::size_t T = v.size();
    auto corrupt_at = [&](std::size_t blk, std::uint32_t sym) {
        Symbol offset = static_cast<Symbol>(1 + rng.below(q - 1));
        res.pattern.blocks[blk][sym] = offset;
        res.corrupted.blocks[blk][sym] = F.add(v.blocks[blk][sym], offset);
        ++res.total_errors;
    };

    switch (cfg.model) {
        case ErrorModel::Iid: {
            for (std::size_t t = 0; t < T; ++t)
                for (std::uint32_t i = 0; i < v.width; ++i)
                    if (rng.chance(cfg.rate)) corrupt_at(t, i);
            break;
        }
        case ErrorModel::Burst: {
            if (cfg.burst_len < 1) raise(ErrKind::Param, "burst length must be at least 1");
            double start_p = cfg.rate / cfg.burst_len;
            std::uint32_t remaining = 0;
            for (std::size_t t = 0; t < T; ++t) {
                for (std::uint32_t i = 0; i < v.width; ++i) {
                    if (remaining == 0 && rng.chance(start_p)) remaining = cfg.burst_len;
                    if (remaining > 0) {
                        corrupt_at(t, i);
                        --remaining;
                    }
                }
            }
            break;
        }
        case ErrorModel::WindowCapped: {
            if (cfg.window_blocks < 1) raise(ErrKind::Param, "window length must be at least 1");
            const std::uint32_t N = cfg.window_blocks;
            std::vector<std::uint32_t> per_block(T, 0);
            auto window_allows = [&](std::size_t t) {
                // windows starting at j cover blocks j..j+N-1
                std::size_t lo = t + 1 >= N ? t + 1 - N : 0;
                for (std::size_t j = lo; j <= t && j < T; ++j) {
                    std::uint32_t sum = 0;
                    for (std::size_t b = j; b < j + N && b < T; ++b) sum += per_block[b];
                    if (sum + 1 > cfg.cap) return false;
                }
                return true;
            };
            for (std::size_t t = 0; t < T; ++t) {
                for (std::uint32_t i = 0; i < v.width; ++i) {
                    if (!rng.chance(cfg.rate)) continue;
                    if (!window_allows(t)) continue;
                    corrupt_at(t, i);
                    ++per_block[t];
                }
            }
            // the greedy budget must have kept every window within the cap
            for (std::size_t j = 0; j < T; ++j) {
                std::uint32_t sum = 0;
                for (std::size_t b = j; b < j + N && b < T; ++b) sum += per_block[b];
                if (sum > cfg.cap) raise(ErrKind::Internal, "window budget exceeded");
            }
            break;
        }
    }
    return res;
}

BaselineReport decode_blockwise(const DoublyCyclicCode& code, const SymbolStream& received) {
    const Field& F = code.F();
    if (received.width != code.enc.n) raise(ErrKind::Data, "received stream: block width mismatch");
    BaselineReport rep;
    for (const Vec& b : received.blocks) {
        RsResult rs = rs_bounded_decode(F, code.stacks[0], b);
        BaselineBlock blk;
        blk.ok = rs.ok;
        if (rs.ok) {
            blk.codeword = rs.codeword;
            blk.errors = rs.errors;
        } else {
            ++rep.failures;
        }
        rep.blocks.push_back(std::move(blk));
    }
    return rep;
}

std::string stream_to_text(const StreamFile& f) {
    std::ostringstream out;
    out << "dcconv-stream v1\n";
    out << "q " << f.params.q << "\n";
    if (!f.params.modulus.empty()) {
        out << "modulus";
        for (Symbol c : f.params.modulus) out << ' ' << c;
        out << "\n";
    }
    out << "alpha " << f.params.alpha << "\n";
    out << "k " << f.params.k << "\n";
    out << "m " << f.params.m << "\n";
    out << "role " << role_name(f.role) << "\n";
    out << "blocks " << f.stream.size() << "\n";
    for (const Vec& b : f.stream.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
        out << "\n";
    }
    return out.str();
}

StreamFile stream_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "dcconv-stream v1")
        raise(ErrKind::Data, "bad stream file header");

    std::map<std::string, std::string> kv;
    std::size_t nblocks = 0;
    bool have_blocks = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp == std::string::npos ? line.size() : sp);
        std::string val = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "blocks") {
            try {
                nblocks = std::stoul(val);
            } catch (const std::exception&) {
                raise(ErrKind::Data, "bad block count");
            }
            have_blocks = true;
            break;
        }
        if (kv.count(key)) raise(ErrKind::Data, "duplicate key in stream header: " + key);
        kv[key] = val;
    }
    if (!have_blocks) raise(ErrKind::Data, "stream file missing block count");

    auto parse_u32 = [](const std::string& s, const std::string& what) -> std::uint32_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            raise(ErrKind::Data, "bad integer for " + what);
        }
        if (pos != s.size() || v > UINT32_MAX) raise(ErrKind::Data, "bad integer for " + what);
        return static_cast<std::uint32_t>(v);
    };
    auto get = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) raise(ErrKind::Data, "stream header missing key: " + key);
        return it->second;
    };

    StreamFile f;
    f.params.q = parse_u32(get("q"), "q");
    std::uint32_t alpha = parse_u32(get("alpha"), "alpha");
    if (alpha == 0 || alpha >= f.params.q) raise(ErrKind::Data, "alpha out of range");
    f.params.alpha = static_cast<Symbol>(alpha);
    f.params.k = parse_u32(get("k"), "k");
    f.params.m = parse_u32(get("m"), "m");
    if (kv.count("modulus")) {
        std::istringstream ms(kv["modulus"]);
        std::string tok;
        while (ms >> tok)
            f.params.modulus.push_back(static_cast<Symbol>(parse_u32(tok, "modulus coefficient")));
    }
    std::string role = get("role");
    if (role == "message")
        f.role = StreamRole::Message;
    else if (role == "codeword")
        f.role = StreamRole::Codeword;
    else if (role == "received")
        f.role = StreamRole::Received;
    else
        raise(ErrKind::Data, "unknown stream role: " + role);
    for (const auto& [key, value] : kv) {
        (void)value;
        if (key != "q" && key != "alpha" && key != "k" && key != "m" && key != "modulus" &&
            key != "role")
            raise(ErrKind::Data, "unknown key in stream header: " + key);
    }

    const std::uint32_t n = f.params.q - 1;
    const std::uint32_t width = f.role == StreamRole::Message ? f.params.k : n;
    f.stream.width = width;
    for (std::size_t b = 0; b < nblocks; ++b) {
        if (!std::getline(in, line)) raise(ErrKind::Data, "stream file truncated");
        std::istringstream ls(line);
        Vec blk;
        std::string tok;
        while (ls >> tok) {
            std::uint32_t v = parse_u32(tok, "symbol");
            if (v >= f.params.q) raise(ErrKind::Data, "symbol out of range");
            blk.push_back(static_cast<Symbol>(v));
        }
        if (blk.size() != width) raise(ErrKind::Data, "stream block width mismatch");
        f.stream.blocks.push_back(std::move(blk));
    }
    std::string tail;
    while (std::getline(in, tail))
        if (!tail.empty()) raise(ErrKind::Data, "trailing content in stream file");
    return f;
}

void stream_save(const StreamFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrKind::Io, "cannot open for writing: " + path);
    out << stream_to_text(f);
    if (!out) raise(ErrKind::Io, "write failed: " + path);
}

StreamFile stream_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrKind::Io, "cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return stream_from_text(buf.str());
}

SimulateReport simulate(const DoublyCyclicCode& code, const WindowContext& ctx,
                        const SimulateConfig& cfg) {
    const Field& F = code.F();
    if (cfg.msg_len < 1) raise(ErrKind::Param, "message length must be at least 1");
    SimulateReport rep;
    rep.trials = cfg.trials;
    PartialDecoder partial = make_partial_decoder(code, cfg.windec);
    SplitMix64 master(cfg.corrupt.seed);
    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
        std::uint64_t trial_seed = master.next();
        SplitMix64 rng(trial_seed);
        SymbolStream u;
        u.width = code.enc.k;
        for (std::uint32_t t = 0; t < cfg.msg_len; ++t) {
            Vec b(code.enc.k);
            for (auto& s : b) s = static_cast<Symbol>(rng.below(F.q()));
            u.blocks.push_back(std::move(b));
        }
        SymbolStream v = encode(code.enc, u);
        CorruptConfig cc = cfg.corrupt;
        cc.seed = trial_seed;
        CorruptResult corr = inject(F, v, cc);
        rep.injected_symbols += corr.total_errors;

        DecodeReport dec = sliding_decode(code.enc, ctx, corr.corrupted, partial);
        for (std::size_t t = 0; t < v.size(); ++t)
            if (dec.decoded.blocks[t] != v.blocks[t]) ++rep.block_errors;
        bool any = false;
        for (std::size_t t = 0; t < v.size(); ++t) any = any || dec.decoded.blocks[t] != v.blocks[t];
        if (any) ++rep.stream_errors;
        if (dec.error_detected) ++rep.detected_streams;

        BaselineReport base = decode_blockwise(code, corr.corrupted);
        rep.baseline_block_failures += base.failures;
        for (std::size_t t = 0; t < v.size(); ++t) {
            const BaselineBlock& blk = base.blocks[t];
            if (!blk.ok || blk.codeword != v.blocks[t]) ++rep.baseline_block_errors;
        }
    }
    return rep;
}

AnalyzeReport analyze_code(const DoublyCyclicCode& code, const AnalyzeOptions& opts) {
    AnalyzeReport rep;
    rep.params = params_of(code);
    rep.n = code.enc.n;
    rep.level_dist = code.level_dist;
    rep.d = code.d;
    rep.dfree = code.dfree;
    rep.structure = check_basic_reduced(code.enc);
    if (opts.enumerate_d) {
        rep.has_enumerated_d = true;
        rep.enumerated_d = weight_param_search(code.enc, code.enc.m + 1, 1, opts.enum_cap);
    }
    if (opts.dfree_cap > 0) {
        rep.has_distance_scan = true;
        rep.distances = distance_checks(code.enc, opts.dfree_cap, opts.enum_cap);
    }
    return rep;
}

std::string decode_report_json(const DoublyCyclicCode& code, const WindowContext& ctx,
                               const DecodeReport& rep, bool verbose) {
    Json j;
    j["format"] = "dcconv-report v1";
    CodeParams p = params_of(code);
    j["code"] = {{"q", p.q},        {"alpha", p.alpha},          {"n", code.enc.n},
                 {"k", p.k},        {"m", p.m},                  {"level_distance", code.level_dist},
                 {"d", code.d},     {"dfree", code.dfree}};
    if (!p.modulus.empty()) j["code"]["modulus"] = vec_json(p.modulus);
    j["window"] = {{"depth", ctx.N}, {"step", ctx.L}, {"weight_param", ctx.d},
                   {"threshold", ctx.d / 2}};
    j["received_blocks"] = rep.decoded.size();
    j["error_detected"] = rep.error_detected;
    j["message"] = stream_json(rep.messages);
    j["decoded"] = stream_json(rep.decoded);
    j["window_distance"] = rep.window_distance;
    Json flagged = Json::array();
    for (bool b : rep.window_flagged) flagged.push_back(b);
    j["window_flagged"] = flagged;

    Json cycles = Json::array();
    for (const CycleRecord& cyc : rep.cycles) {
        Json c;
        c["index"] = cyc.j;
        if (cyc.outcome.fallback) {
            c["level"] = nullptr;
            c["fallback"] = std::string(1, cyc.outcome.fallback_case);
        } else {
            c["level"] = cyc.outcome.level;
            c["fallback"] = nullptr;
        }
        c["detected"] = cyc.outcome.detected;
        c["rs_calls"] = cyc.outcome.rs_calls;
        if (verbose) {
            c["received_window"] = vec_json(cyc.V);
            c["past_contribution"] = vec_json(cyc.S);
            c["adjusted_window"] = vec_json(cyc.w);
            c["codeword"] = vec_json(cyc.outcome.w_full);
            c["coordinates"] = vec_json(cyc.outcome.x_full);
            Json levels = Json::array();
            for (const LevelTrace& tr : cyc.outcome.levels) {
                Json lt;
                lt["level"] = tr.level;
                lt["candidate_found"] = tr.step2_ok;
                if (tr.step2_ok) {
                    lt["corrected"] = tr.rs_errors;
                    lt["candidate"] = vec_json(tr.w);
                    lt["coordinates"] = vec_json(tr.x);
                    lt["distance"] = tr.dist;
                    lt["threshold"] = tr.threshold;
                    lt["accepted"] = tr.accepted;
                }
                levels.push_back(std::move(lt));
            }
            c["levels"] = std::move(levels);
        }
        cycles.push_back(std::move(c));
    }
    j["cycles"] = std::move(cycles);
    return j.dump(2) + "\n";
}

std::string analyze_report_json(const AnalyzeReport& rep) {
    Json j;
    j["format"] = "dcconv-analyze v1";
    j["q"] = rep.params.q;
    j["alpha"] = rep.params.alpha;
    if (!rep.params.modulus.empty()) j["modulus"] = vec_json(rep.params.modulus);
    j["n"] = rep.n;
    j["k"] = rep.params.k;
    j["m"] = rep.params.m;
    j["level_distance"] = rep.level_dist;
    j["d"] = rep.d;
    j["dfree"] = rep.dfree;
    j["basic"] = rep.structure.basic;
    j["reduced"] = rep.structure.reduced;
    j["row_degrees"] = rep.structure.row_degrees;
    j["minor_degree"] = rep.structure.minor_degree;
    if (rep.has_enumerated_d) j["d_enumerated"] = rep.enumerated_d;
    if (rep.has_distance_scan) {
        j["dfree_upper"] = rep.distances.dfree_upper;
        j["column_distances"] = rep.distances.column_distances;
    }
    return j.dump(2) + "\n";
}

std::string simulate_report_json(const SimulateConfig& cfg, const SimulateReport& rep) {
    Json j;
    j["format"] = "dcconv-simulate v1";
    const char* model = cfg.corrupt.model == ErrorModel::Iid      ? "iid"
                        : cfg.corrupt.model == ErrorModel::Burst ? "burst"
                                                                 : "capped";
    j["config"] = {{"trials", cfg.trials},
                   {"message_blocks", cfg.msg_len},
                   {"model", model},
                   {"rate", cfg.corrupt.rate},
                   {"burst_len", cfg.corrupt.burst_len},
                   {"cap", cfg.corrupt.cap},
                   {"seed", cfg.corrupt.seed}};
    j["injected_symbols"] = rep.injected_symbols;
    j["sliding"] = {{"block_errors", rep.block_errors},
                    {"stream_errors", rep.stream_errors},
                    {"detected_streams", rep.detected_streams}};
    j["baseline"] = {{"block_failures", rep.baseline_block_failures},
                     {"block_errors", rep.baseline_block_errors}};
    return j.dump(2) + "\n";
}

}  // namespace dcconv
