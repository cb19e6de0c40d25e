// Command line front end for the dcconv library. Exit codes: 0 success,
// 2 usage, 3 data/decode errors, 4 parameter errors, 1 internal.
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcconv.h"

namespace {

using Json = nlohmann::json;

struct CodeDeleter {
    void operator()(dcv_code* c) const { dcv_code_free(c); }
};
struct StreamDeleter {
    void operator()(dcv_stream* s) const { dcv_stream_free(s); }
};
using CodePtr = std::unique_ptr<dcv_code, CodeDeleter>;
using StreamPtr = std::unique_ptr<dcv_stream, StreamDeleter>;

struct CliFailure {
    int exit_code;
    std::string message;
};

int exit_code_for(dcv_status st) {
    switch (st) {
        case DCV_OK: return 0;
        case DCV_ERR_PARAM: return 4;
        case DCV_ERR_LIMIT: return 4;
        case DCV_ERR_DATA: return 3;
        case DCV_ERR_IO: return 3;
        case DCV_ERR_DECODE: return 3;
        case DCV_ERR_INTERNAL: return 1;
    }
    return 1;
}

void check(dcv_status st) {
    if (st != DCV_OK) throw CliFailure{exit_code_for(st), dcv_last_error()};
}

CodePtr load_code(const std::string& path) {
    dcv_code* raw = nullptr;
    check(dcv_code_load(path.c_str(), &raw));
    return CodePtr(raw);
}

StreamPtr load_stream(const std::string& path, const dcv_code* code) {
    dcv_stream* raw = nullptr;
    check(dcv_stream_load(path.c_str(), code, &raw));
    return StreamPtr(raw);
}

dcv_model parse_model(const std::string& name) {
    if (name == "iid") return DCV_MODEL_IID;
    if (name == "burst") return DCV_MODEL_BURST;
    if (name == "capped") return DCV_MODEL_CAPPED;
    throw CliFailure{2, "unknown error model: " + name};
}

std::string format_trace(const std::string& report_json) {
    Json rep = Json::parse(report_json);
    std::string out;
    for (const auto& cyc : rep["cycles"]) {
        out += "cycle " + std::to_string(cyc["index"].get<unsigned>());
        if (cyc["fallback"].is_null())
            out += "  level " + std::to_string(cyc["level"].get<int>());
        else
            out += "  fallback " + cyc["fallback"].get<std::string>();
        out += "  rs_calls " + std::to_string(cyc["rs_calls"].get<unsigned>()) + "\n";
        if (!cyc.contains("levels")) continue;
        for (const auto& lt : cyc["levels"]) {
            out += "  level " + std::to_string(lt["level"].get<int>());
            if (!lt["candidate_found"].get<bool>()) {
                out += ": no candidate\n";
                continue;
            }
            out += ": distance " + std::to_string(lt["distance"].get<unsigned>()) +
                   " threshold " + std::to_string(lt["threshold"].get<unsigned>()) +
                   (lt["accepted"].get<bool>() ? " accepted" : " rejected") + "\n";
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw CliFailure{3, "cannot open for writing: " + path};
    bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    ok = std::fclose(f) == 0 && ok;
    if (!ok) throw CliFailure{3, "write failed: " + path};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convolutional coding over GF(q) with sliding-window decoding"};
    app.require_subcommand(1);

    // build-code
    auto* build = app.add_subcommand("build-code", "construct a code and write its parameters");
    std::uint32_t q = 0, bk = 0, bm = 0;
    std::uint32_t alpha = 0;
    std::string modulus_csv, out_path;
    build->add_option("--q", q, "field size, a prime power <= 2^16")->required();
    build->add_option("--k", bk, "message block width")->required();
    build->add_option("--m", bm, "memory (number of delayed taps)")->required();
    build->add_option("--alpha", alpha, "primitive element (default: smallest)");
    build->add_option("--modulus", modulus_csv,
                      "defining polynomial coefficients, low to high, comma separated");
    build->add_option("--out", out_path, "output parameter file")->required();

    // shared options
    std::string code_path, in_path, stream_out, msg_out, report_path;
    bool strict = false, step2_list = false, verbose = false;
    std::string model_name = "iid";
    double rate = 0.05;
    std::uint32_t burst_len = 4, cap = 0;
    std::uint64_t seed = 0;

    auto* enc = app.add_subcommand("encode", "encode a message stream");
    enc->add_option("--code", code_path)->required();
    enc->add_option("--in", in_path, "message stream file")->required();
    enc->add_option("--out", stream_out, "codeword stream file")->required();

    auto* cor = app.add_subcommand("corrupt", "add a seeded pseudorandom error pattern");
    cor->add_option("--code", code_path)->required();
    cor->add_option("--in", in_path, "codeword stream file")->required();
    cor->add_option("--out", stream_out, "received stream file")->required();
    cor->add_option("--model", model_name, "iid | burst | capped");
    cor->add_option("--rate", rate, "per-symbol corruption probability");
    cor->add_option("--burst-len", burst_len, "burst length in symbols");
    cor->add_option("--cap", cap, "max errors per window (capped model; default floor(d/2))");
    cor->add_option("--seed", seed);

    auto* dec = app.add_subcommand("decode", "sliding-window decode a received stream");
    dec->add_option("--code", code_path)->required();
    dec->add_option("--in", in_path, "received stream file")->required();
    dec->add_option("--out", stream_out, "decoded codeword stream file");
    dec->add_option("--msg-out", msg_out, "decoded message stream file");
    dec->add_option("--report", report_path, "JSON report file");
    dec->add_flag("--strict", strict, "fail instead of taking the fallback");
    dec->add_flag("--step2-list", step2_list, "list decoding inside each level");
    dec->add_flag("--verbose", verbose, "print the per-cycle trace");

    auto* ana = app.add_subcommand("analyze", "report code structure and distances");
    bool enum_d = false;
    std::uint32_t dfree_cap = 0;
    ana->add_option("--code", code_path)->required();
    ana->add_flag("--enumerate-d", enum_d, "exhaustive window weight search");
    ana->add_option("--dfree-cap", dfree_cap, "distance scan over messages up to this degree");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo sliding vs blockwise comparison");
    std::uint32_t trials = 100, msg_len = 8;
    sim->add_option("--code", code_path)->required();
    sim->add_option("--trials", trials);
    sim->add_option("--msg-len", msg_len, "message blocks per trial");
    sim->add_option("--model", model_name, "iid | burst | capped");
    sim->add_option("--rate", rate);
    sim->add_option("--burst-len", burst_len);
    sim->add_option("--cap", cap);
    sim->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            std::vector<std::uint16_t> modulus;
            if (!modulus_csv.empty()) {
                std::string tok;
                for (char c : modulus_csv + ",") {
                    if (c == ',') {
                        if (tok.empty()) throw CliFailure{2, "empty modulus coefficient"};
                        modulus.push_back(static_cast<std::uint16_t>(std::stoul(tok)));
                        tok.clear();
                    } else {
                        tok += c;
                    }
                }
            }
            dcv_code* raw = nullptr;
            check(dcv_code_build(q, modulus.empty() ? nullptr : modulus.data(), modulus.size(),
                                 static_cast<std::uint16_t>(alpha), bk, bm, &raw));
            CodePtr code(raw);
            check(dcv_code_save(code.get(), out_path.c_str()));
            std::printf("q %u  alpha %u  n %u  k %u  m %u\n", dcv_code_q(code.get()),
                        dcv_code_alpha(code.get()), dcv_code_n(code.get()), dcv_code_k(code.get()),
                        dcv_code_m(code.get()));
            std::printf("d_l =");
            for (std::uint32_t l = 0; l <= dcv_code_m(code.get()); ++l)
                std::printf(" %u", dcv_code_level_distance(code.get(), l));
            std::printf("\nd = %u\n", dcv_code_distance(code.get()));
            std::printf("dfree = %u\n", dcv_code_dfree(code.get()));
        } else if (enc->parsed()) {
            CodePtr code = load_code(code_path);
            StreamPtr msg = load_stream(in_path, code.get());
            dcv_stream* raw = nullptr;
            check(dcv_encode(code.get(), msg.get(), &raw));
            StreamPtr cw(raw);
            check(dcv_stream_save(code.get(), cw.get(), DCV_ROLE_CODEWORD, stream_out.c_str()));
            std::printf("encoded %zu message blocks into %zu codeword blocks\n",
                        dcv_stream_blocks(msg.get()), dcv_stream_blocks(cw.get()));
        } else if (cor->parsed()) {
            CodePtr code = load_code(code_path);
            StreamPtr in = load_stream(in_path, code.get());
            dcv_stream* raw = nullptr;
            std::uint32_t nerr = 0;
            check(dcv_corrupt(code.get(), in.get(), parse_model(model_name), rate, burst_len, cap,
                              seed, &raw, &nerr));
            StreamPtr out(raw);
            check(dcv_stream_save(code.get(), out.get(), DCV_ROLE_RECEIVED, stream_out.c_str()));
            std::printf("corrupted %u symbols across %zu blocks\n", nerr,
                        dcv_stream_blocks(out.get()));
        } else if (dec->parsed()) {
            CodePtr code = load_code(code_path);
            StreamPtr in = load_stream(in_path, code.get());
            std::uint32_t flags = 0;
            if (strict) flags |= DCV_DECODE_STRICT;
            if (step2_list) flags |= DCV_DECODE_STEP2_LIST;
            if (verbose) flags |= DCV_DECODE_VERBOSE;
            dcv_stream* decoded = nullptr;
            dcv_stream* messages = nullptr;
            char* report = nullptr;
            check(dcv_decode(code.get(), in.get(), flags, &decoded, &messages, &report));
            StreamPtr dstream(decoded), mstream(messages);
            std::string report_str = report ? report : "";
            dcv_string_free(report);
            if (!stream_out.empty())
                check(dcv_stream_save(code.get(), dstream.get(), DCV_ROLE_CODEWORD,
                                      stream_out.c_str()));
            if (!msg_out.empty())
                check(dcv_stream_save(code.get(), mstream.get(), DCV_ROLE_MESSAGE,
                                      msg_out.c_str()));
            if (!report_path.empty()) write_text(report_path, report_str);
            Json rep = Json::parse(report_str);
            std::printf("decoded %zu blocks, error_detected %s\n",
                        dcv_stream_blocks(dstream.get()),
                        rep["error_detected"].get<bool>() ? "yes" : "no");
            unsigned flagged = 0;
            for (const auto& b : rep["window_flagged"])
                if (b.get<bool>()) ++flagged;
            std::printf("flagged windows: %u\n", flagged);
            if (verbose) std::fputs(format_trace(report_str).c_str(), stdout);
        } else if (ana->parsed()) {
            CodePtr code = load_code(code_path);
            char* json = nullptr;
            check(dcv_analyze(code.get(), enum_d ? 1 : 0, dfree_cap, &json));
            Json rep = Json::parse(json);
            dcv_string_free(json);
            std::printf("q %u  alpha %u  n %u  k %u  m %u\n", rep["q"].get<unsigned>(),
                        rep["alpha"].get<unsigned>(), rep["n"].get<unsigned>(),
                        rep["k"].get<unsigned>(), rep["m"].get<unsigned>());
            std::printf("d_l =");
            for (const auto& dl : rep["level_distance"]) std::printf(" %u", dl.get<unsigned>());
            std::printf("\nd = %u\n", rep["d"].get<unsigned>());
            std::printf("dfree = %u\n", rep["dfree"].get<unsigned>());
            std::printf("basic %s  reduced %s\n", rep["basic"].get<bool>() ? "yes" : "no",
                        rep["reduced"].get<bool>() ? "yes" : "no");
            std::printf("row degrees:");
            for (const auto& rd : rep["row_degrees"]) std::printf(" %d", rd.get<int>());
            std::printf("\n");
            if (rep.contains("d_enumerated"))
                std::printf("d_enumerated = %u\n", rep["d_enumerated"].get<unsigned>());
            if (rep.contains("dfree_upper")) {
                std::printf("dfree_upper = %u\ncolumn distances:",
                            rep["dfree_upper"].get<unsigned>());
                for (const auto& cd : rep["column_distances"])
                    std::printf(" %u", cd.get<unsigned>());
                std::printf("\n");
            }
        } else if (sim->parsed()) {
            CodePtr code = load_code(code_path);
            char* json = nullptr;
            check(dcv_simulate(code.get(), trials, msg_len, parse_model(model_name), rate,
                               burst_len, cap, seed, &json));
            std::fputs(json, stdout);
            dcv_string_free(json);
        }
    } catch (const CliFailure& f) {
        std::fprintf(stderr, "error: %s\n", f.message.c_str());
        return f.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
