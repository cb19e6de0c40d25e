#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <string>

#include "harness.hpp"

using namespace dcconv;

namespace {

DoublyCyclicCode code5() { return make_code(Field::make(5, 1), 1, 2); }

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

SymbolStream worked_received() {
    return make_stream(4, {{4, 0, 3, 1}, {1, 1, 3, 0}, {3, 2, 1, 0}, {3, 2, 1, 3}, {0, 1, 0, 0}});
}

std::uint32_t pattern_weight(const SymbolStream& pattern) {
    std::uint32_t w = 0;
    for (const Vec& b : pattern.blocks) w += hamming_weight(b);
    return w;
}

}  // namespace

TEST_CASE("stream text format is stable") {
    StreamFile f;
    f.params = params_of(code5());
    f.role = StreamRole::Message;
    f.stream = make_stream(1, {{1}, {2}, {0}});
    CHECK(stream_to_text(f) ==
          "dcconv-stream v1\nq 5\nalpha 2\nk 1\nm 2\nrole message\nblocks 3\n1\n2\n0\n");
}

TEST_CASE("stream files round trip") {
    StreamFile f;
    f.params = params_of(code5());
    f.role = StreamRole::Received;
    f.stream = worked_received();
    StreamFile g = stream_from_text(stream_to_text(f));
    CHECK(g.params == f.params);
    CHECK(g.role == f.role);
    CHECK(g.stream == f.stream);

    std::string path = temp_path("dcconv_harness_roundtrip.txt");
    stream_save(f, path);
    StreamFile h = stream_load(path);
    CHECK(h.stream == f.stream);
    std::remove(path.c_str());

    CHECK_THROWS_AS(stream_load(temp_path("dcconv_harness_missing.txt")), Error);
}

TEST_CASE("extension field streams keep their modulus") {
    DoublyCyclicCode code = make_code(Field::make(2, 3), 1, 2);
    SymbolStream msg = make_stream(1, {{3}, {5}});
    StreamFile f;
    f.params = params_of(code);
    f.role = StreamRole::Codeword;
    f.stream = encode(code.enc, msg);
    REQUIRE(f.params.modulus == std::vector<Symbol>{1, 1, 0, 1});
    std::string text = stream_to_text(f);
    CHECK(text.find("modulus 1 1 0 1\n") != std::string::npos);
    StreamFile g = stream_from_text(text);
    CHECK(g.params == f.params);
    CHECK(g.stream == f.stream);
}

TEST_CASE("stream parsing rejects malformed input") {
    auto base = [](const std::string& header_extra, const std::string& rows) {
        return "dcconv-stream v1\nq 5\n" + header_extra +
               "alpha 2\nk 1\nm 2\nrole received\nblocks 2\n" + rows;
    };
    std::string good = base("", "1 2 3 4\n0 0 0 0\n");
    CHECK_NOTHROW(stream_from_text(good));

    CHECK_THROWS_AS(stream_from_text("dcconv-stream v2\n"), Error);
    CHECK_THROWS_AS(stream_from_text("dcconv-stream v1\nq 5\nalpha 2\nk 1\nm 2\nrole received\n"),
                    Error);  // no block count
    CHECK_THROWS_AS(stream_from_text(base("", "1 2 3 4\n")), Error);        // truncated
    CHECK_THROWS_AS(stream_from_text(base("", "1 2 3\n0 0 0 0\n")), Error);  // narrow row
    CHECK_THROWS_AS(stream_from_text(good + "stray\n"), Error);
    CHECK_THROWS_AS(stream_from_text(base("q 7\n", "1 2 3 4\n0 0 0 0\n")), Error);  // duplicate
    CHECK_THROWS_AS(stream_from_text(base("color blue\n", "1 2 3 4\n0 0 0 0\n")), Error);
    CHECK_THROWS_AS(stream_from_text(base("", "1 2 3 5\n0 0 0 0\n")), Error);  // symbol range
    CHECK_THROWS_AS(
        stream_from_text("dcconv-stream v1\nq 5\nalpha 2\nk 1\nm 2\nrole parity\nblocks 0\n"),
        Error);
    CHECK_THROWS_AS(
        stream_from_text("dcconv-stream v1\nq 5\nalpha 0\nk 1\nm 2\nrole message\nblocks 0\n"),
        Error);
    CHECK_THROWS_AS(
        stream_from_text("dcconv-stream v1\nq 5\nalpha 5\nk 1\nm 2\nrole message\nblocks 0\n"),
        Error);
    CHECK_THROWS_AS(
        stream_from_text("dcconv-stream v1\nq five\nalpha 2\nk 1\nm 2\nrole message\nblocks 0\n"),
        Error);
}

TEST_CASE("independent corruption is seeded and self-consistent") {
    DoublyCyclicCode code = code5();
    SymbolStream sent = encode(code.enc, make_stream(1, {{1}, {2}, {0}}));

    CorruptConfig cfg;
    cfg.model = ErrorModel::Iid;
    cfg.rate = 0.3;
    cfg.seed = 42;
    CorruptResult a = inject(code.F(), sent, cfg);
    CorruptResult b = inject(code.F(), sent, cfg);
    CHECK(a.corrupted == b.corrupted);
    CHECK(a.pattern == b.pattern);
    CHECK(a.total_errors == pattern_weight(a.pattern));
    for (std::size_t t = 0; t < sent.size(); ++t)
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(a.corrupted.blocks[t][i] ==
                  code.F().add(sent.blocks[t][i], a.pattern.blocks[t][i]));

    cfg.rate = 0.0;
    CHECK(inject(code.F(), sent, cfg).total_errors == 0);
    cfg.rate = 1.0;
    CorruptResult full = inject(code.F(), sent, cfg);
    CHECK(full.total_errors == 4 * sent.size());
    for (std::size_t t = 0; t < sent.size(); ++t)
        CHECK(hamming_distance(full.corrupted.blocks[t], sent.blocks[t]) == 4);

    cfg.rate = -0.1;
    CHECK_THROWS_AS(inject(code.F(), sent, cfg), Error);
    cfg.rate = 1.5;
    CHECK_THROWS_AS(inject(code.F(), sent, cfg), Error);
    cfg.rate = 0.3;
    SymbolStream bad = make_stream(2, {{1, 5}});
    CHECK_THROWS_AS(inject(code.F(), bad, cfg), Error);
}

TEST_CASE("burst corruption hits whole runs") {
    DoublyCyclicCode code = code5();
    SymbolStream sent{4, std::vector<Vec>(30, Vec(4, 0))};

    CorruptConfig cfg;
    cfg.model = ErrorModel::Burst;
    cfg.rate = 0.2;
    cfg.burst_len = 4;
    cfg.seed = 7;
    CorruptResult r = inject(code.F(), sent, cfg);
    REQUIRE(r.total_errors > 0);
    CHECK(r.total_errors == pattern_weight(r.pattern));

    // flatten and measure maximal runs; only a run cut off by the stream end
    // may break the burst length
    Vec flat;
    for (const Vec& b : r.pattern.blocks) flat.insert(flat.end(), b.begin(), b.end());
    std::size_t run = 0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] != 0) {
            ++run;
        } else if (run > 0) {
            CHECK(run % cfg.burst_len == 0);
            run = 0;
        }
    }

    cfg.burst_len = 0;
    CHECK_THROWS_AS(inject(code.F(), sent, cfg), Error);
}

TEST_CASE("capped corruption keeps every window within budget") {
    DoublyCyclicCode code = code5();
    SymbolStream sent{4, std::vector<Vec>(40, Vec(4, 0))};

    CorruptConfig cfg;
    cfg.model = ErrorModel::WindowCapped;
    cfg.rate = 0.5;
    cfg.cap = 4;
    cfg.window_blocks = 3;
    cfg.seed = 9;
    CorruptResult r = inject(code.F(), sent, cfg);
    REQUIRE(r.total_errors > 0);
    std::vector<std::uint32_t> per_block;
    for (const Vec& b : r.pattern.blocks) per_block.push_back(hamming_weight(b));
    for (std::size_t j = 0; j < per_block.size(); ++j) {
        std::uint32_t sum = 0;
        for (std::size_t t = j; t < j + 3 && t < per_block.size(); ++t) sum += per_block[t];
        CHECK(sum <= 4);
    }

    cfg.cap = 0;
    CHECK(inject(code.F(), sent, cfg).total_errors == 0);
    cfg.cap = 4;
    cfg.window_blocks = 0;
    CHECK_THROWS_AS(inject(code.F(), sent, cfg), Error);
}

TEST_CASE("blockwise decoding misses what the sliding decoder catches") {
    DoublyCyclicCode code = code5();
    BaselineReport rep = decode_blockwise(code, worked_received());
    REQUIRE(rep.blocks.size() == 5);
    CHECK(rep.failures == 4);
    for (int i = 0; i < 4; ++i) CHECK_FALSE(rep.blocks[i].ok);
    CHECK(rep.blocks[4].ok);
    CHECK(rep.blocks[4].codeword == Vec{0, 0, 0, 0});
    CHECK(rep.blocks[4].errors == 1);

    CHECK_THROWS_AS(decode_blockwise(code, make_stream(3, {{1, 2, 3}})), Error);
}

TEST_CASE("simulation under the window budget decodes every trial") {
    DoublyCyclicCode code = code5();
    WindowContext ctx = make_window_context(code.enc, 3, 1, code.d);

    SimulateConfig cfg;
    cfg.trials = 50;
    cfg.msg_len = 8;
    cfg.corrupt.model = ErrorModel::WindowCapped;
    cfg.corrupt.rate = 0.35;
    cfg.corrupt.cap = 4;
    cfg.corrupt.window_blocks = 3;
    cfg.corrupt.seed = 1234;
    SimulateReport rep = simulate(code, ctx, cfg);
    CHECK(rep.trials == 50);
    CHECK(rep.injected_symbols > 0);
    CHECK(rep.block_errors == 0);
    CHECK(rep.stream_errors == 0);
    CHECK(rep.baseline_block_errors > 0);  // single-block decoding cannot keep up

    cfg.msg_len = 0;
    CHECK_THROWS_AS(simulate(code, ctx, cfg), Error);
}

TEST_CASE("decode report serializes the full trace") {
    DoublyCyclicCode code = code5();
    WindowContext ctx = make_window_context(code.enc, 3, 1, code.d);
    DecodeReport rep = sliding_decode(code.enc, ctx, worked_received(), make_partial_decoder(code));

    nlohmann::json j = nlohmann::json::parse(decode_report_json(code, ctx, rep, true));
    CHECK(j["format"] == "dcconv-report v1");
    CHECK(j["code"]["q"] == 5);
    CHECK(j["code"]["alpha"] == 2);
    CHECK(j["window"]["depth"] == 3);
    CHECK(j["window"]["threshold"] == 4);
    CHECK(j["received_blocks"] == 5);
    CHECK(j["error_detected"] == false);
    CHECK(j["decoded"][0] == nlohmann::json::array({2, 4, 3, 1}));
    CHECK(j["message"][1] == nlohmann::json::array({2}));
    CHECK(j["window_distance"] == nlohmann::json::array({4, 3, 4, 2, 1}));
    REQUIRE(j["cycles"].size() == 5);
    CHECK(j["cycles"][0]["level"] == 1);
    CHECK(j["cycles"][0]["fallback"].is_null());
    CHECK(j["cycles"][1]["rs_calls"] == 3);
    CHECK(j["cycles"][0]["adjusted_window"].size() == 12);
    REQUIRE(j["cycles"][0]["levels"].size() == 2);
    CHECK(j["cycles"][0]["levels"][0]["candidate_found"] == false);
    CHECK(j["cycles"][0]["levels"][1]["accepted"] == true);
    CHECK(j["cycles"][0]["levels"][1]["distance"] == 2);

    nlohmann::json terse = nlohmann::json::parse(decode_report_json(code, ctx, rep, false));
    CHECK_FALSE(terse["cycles"][0].contains("levels"));
    CHECK_FALSE(terse["cycles"][0].contains("received_window"));
}

TEST_CASE("analysis report carries structure and distances") {
    DoublyCyclicCode code = code5();
    AnalyzeOptions opts;
    opts.enumerate_d = true;
    opts.dfree_cap = 2;
    nlohmann::json j = nlohmann::json::parse(analyze_report_json(analyze_code(code, opts)));
    CHECK(j["format"] == "dcconv-analyze v1");
    CHECK(j["q"] == 5);
    CHECK(j["n"] == 4);
    CHECK(j["level_distance"] == nlohmann::json::array({4, 3, 2}));
    CHECK(j["d"] == 8);
    CHECK(j["dfree"] == 12);
    CHECK(j["basic"] == true);
    CHECK(j["reduced"] == true);
    CHECK(j["row_degrees"] == nlohmann::json::array({2}));
    CHECK(j["minor_degree"] == 2);
    CHECK(j["d_enumerated"] == 8);
    CHECK(j["dfree_upper"] == 12);
    CHECK(j["column_distances"] == nlohmann::json::array({4, 7, 9}));

    AnalyzeOptions none;
    nlohmann::json bare = nlohmann::json::parse(analyze_report_json(analyze_code(code, none)));
    CHECK_FALSE(bare.contains("d_enumerated"));
    CHECK_FALSE(bare.contains("dfree_upper"));
}

TEST_CASE("simulation report is machine readable") {
    DoublyCyclicCode code = code5();
    WindowContext ctx = make_window_context(code.enc, 3, 1, code.d);
    SimulateConfig cfg;
    cfg.trials = 5;
    cfg.msg_len = 6;
    cfg.corrupt.model = ErrorModel::WindowCapped;
    cfg.corrupt.rate = 0.3;
    cfg.corrupt.cap = 4;
    cfg.corrupt.window_blocks = 3;
    cfg.corrupt.seed = 77;
    SimulateReport rep = simulate(code, ctx, cfg);
    nlohmann::json j = nlohmann::json::parse(simulate_report_json(cfg, rep));
    CHECK(j["format"] == "dcconv-simulate v1");
    CHECK(j["config"]["trials"] == 5);
    CHECK(j["config"]["model"] == "capped");
    CHECK(j["sliding"]["stream_errors"] == 0);
    CHECK(j["sliding"]["block_errors"] == 0);
    CHECK(j["baseline"].contains("block_failures"));
    CHECK(j["injected_symbols"] == rep.injected_symbols);
}
