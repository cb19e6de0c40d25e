#pragma once

#include <string>

#include "windec.hpp"

namespace dcconv {

// SplitMix64: tiny, portable, seedable 64-bit generator. Identical output on
// every platform for a given seed, which the corruption models rely on.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1; rejection keeps it unbiased
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // true with probability p (clamped to [0,1])
    bool chance(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        constexpr double kScale = 9007199254740992.0;  // 2^53
        return below(1ull << 53) < static_cast<std::uint64_t>(p * kScale);
    }
};

enum class ErrorModel { Iid, Burst, WindowCapped };

struct CorruptConfig {
    ErrorModel model = ErrorModel::Iid;
    double rate = 0.05;          // per-symbol corruption probability
    std::uint32_t burst_len = 4; // symbols per burst (burst model)
    std::uint32_t cap = 0;       // max corrupted symbols in any window (capped model)
    std::uint32_t window_blocks = 1;  // window length in blocks (capped model)
    std::uint64_t seed = 0;
};

struct CorruptResult {
    SymbolStream corrupted;
    SymbolStream pattern;  // corrupted - input
    std::uint32_t total_errors = 0;
};

// Adds a pseudorandom error pattern to the stream. Corrupted symbols receive
// a uniformly random nonzero offset. The capped model admits a corruption
// only if every window of window_blocks blocks stays within cap errors.
CorruptResult inject(const Field& F, const SymbolStream& v, const CorruptConfig& cfg);

// --- blockwise baseline ---

struct BaselineBlock {
    bool ok = false;
    Vec codeword;
    std::uint32_t errors = 0;
};
struct BaselineReport {
    std::vector<BaselineBlock> blocks;
    std::uint32_t failures = 0;
};
// Decodes each received block independently against the level-0 code,
// ignoring the convolutional structure.
BaselineReport decode_blockwise(const DoublyCyclicCode& code, const SymbolStream& received);

// --- stream files ---

enum class StreamRole { Message, Codeword, Received };

struct StreamFile {
    CodeParams params;
    StreamRole role = StreamRole::Message;
    SymbolStream stream;
};

std::string stream_to_text(const StreamFile& f);
StreamFile stream_from_text(const std::string& text);
void stream_save(const StreamFile& f, const std::string& path);
StreamFile stream_load(const std::string& path);

// --- simulation ---

struct SimulateConfig {
    std::uint32_t trials = 100;
    std::uint32_t msg_len = 8;  // message blocks per trial
    CorruptConfig corrupt;      // seed acts as the master seed
    WindecConfig windec;
};

struct SimulateReport {
    std::uint32_t trials = 0;
    std::uint64_t injected_symbols = 0;
    std::uint64_t block_errors = 0;      // decoded blocks differing from sent
    std::uint32_t stream_errors = 0;     // trials with any block error
    std::uint32_t detected_streams = 0;  // trials where the decoder flagged a failure
    std::uint64_t baseline_block_failures = 0;
    std::uint64_t baseline_block_errors = 0;  // baseline decodes differing from sent
};

SimulateReport simulate(const DoublyCyclicCode& code, const WindowContext& ctx,
                        const SimulateConfig& cfg);

// --- structured reports ---

std::string decode_report_json(const DoublyCyclicCode& code, const WindowContext& ctx,
                               const DecodeReport& rep, bool verbose);

struct AnalyzeOptions {
    bool enumerate_d = false;       // exhaustive window-code weight search
    std::uint32_t dfree_cap = 0;    // message degree cap for the distance scan, 0 = skip
    std::uint64_t enum_cap = 1u << 20;
};
struct AnalyzeReport {
    CodeParams params;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> level_dist;
    std::uint32_t d = 0;
    std::uint32_t dfree = 0;
    BasicReducedReport structure;
    bool has_enumerated_d = false;
    std::uint32_t enumerated_d = 0;
    bool has_distance_scan = false;
    DistanceReport distances;
};
AnalyzeReport analyze_code(const DoublyCyclicCode& code, const AnalyzeOptions& opts);
std::string analyze_report_json(const AnalyzeReport& rep);

std::string simulate_report_json(const SimulateConfig& cfg, const SimulateReport& rep);

}  // namespace dcconv
