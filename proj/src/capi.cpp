#include "dcconv.h"

#include <cstring>
#include <new>

#include "harness.hpp"

using namespace dcconv;

struct dcv_code {
    DoublyCyclicCode code;
    WindowContext ctx;  // default context: depth m+1, step 1, d from the closed form
};

struct dcv_stream {
    SymbolStream s;
};

namespace {

thread_local std::string g_last_error;

dcv_status set_error(ErrKind kind, const std::string& msg) {
    g_last_error = msg;
    switch (kind) {
        case ErrKind::Param: return DCV_ERR_PARAM;
        case ErrKind::Data: return DCV_ERR_DATA;
        case ErrKind::Io: return DCV_ERR_IO;
        case ErrKind::Limit: return DCV_ERR_LIMIT;
        case ErrKind::Decode: return DCV_ERR_DECODE;
        case ErrKind::Internal: return DCV_ERR_INTERNAL;
    }
    return DCV_ERR_INTERNAL;
}

template <typename Fn>
dcv_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DCV_OK;
    } catch (const Error& e) {
        return set_error(e.kind(), e.what());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DCV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DCV_ERR_INTERNAL;
    }
}

dcv_status require(bool cond, const char* msg) {
    if (cond) return DCV_OK;
    g_last_error = msg;
    return DCV_ERR_PARAM;
}

dcv_code* wrap_code(DoublyCyclicCode code) {
    auto* handle = new dcv_code{std::move(code), {}};
    handle->ctx = make_window_context(handle->code.enc, handle->code.enc.m + 1, 1,
                                      handle->code.d);
    return handle;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

CorruptConfig corrupt_config(const dcv_code* code, dcv_model model, double rate,
                             uint32_t burst_len, uint32_t cap, uint64_t seed) {
    CorruptConfig cc;
    switch (model) {
        case DCV_MODEL_IID: cc.model = ErrorModel::Iid; break;
        case DCV_MODEL_BURST: cc.model = ErrorModel::Burst; break;
        case DCV_MODEL_CAPPED: cc.model = ErrorModel::WindowCapped; break;
        default: raise(ErrKind::Param, "unknown error model");
    }
    cc.rate = rate;
    cc.burst_len = burst_len;
    cc.cap = cap ? cap : code->code.d / 2;
    cc.window_blocks = code->code.enc.m + 1;
    cc.seed = seed;
    return cc;
}

}  // namespace

extern "C" {

dcv_status dcv_code_build(uint32_t q, const uint16_t* modulus, size_t modulus_len, uint16_t alpha,
                          uint32_t k, uint32_t m, dcv_code** out) {
    if (dcv_status st = require(out != nullptr, "null out pointer")) return st;
    if (dcv_status st = require(modulus != nullptr || modulus_len == 0, "null modulus pointer"))
        return st;
    return guarded([&] {
        std::vector<Symbol> mod(modulus, modulus + modulus_len);
        auto field = Field::make_q(q, mod, alpha);
        *out = wrap_code(make_code(field, k, m));
    });
}

dcv_status dcv_code_load(const char* path, dcv_code** out) {
    if (dcv_status st = require(path && out, "null argument")) return st;
    return guarded([&] { *out = wrap_code(code_from_params(params_load(path))); });
}

dcv_status dcv_code_save(const dcv_code* code, const char* path) {
    if (dcv_status st = require(code && path, "null argument")) return st;
    return guarded([&] { params_save(params_of(code->code), path); });
}

void dcv_code_free(dcv_code* code) { delete code; }

uint32_t dcv_code_q(const dcv_code* code) { return code ? code->code.F().q() : 0; }
uint32_t dcv_code_n(const dcv_code* code) { return code ? code->code.enc.n : 0; }
uint32_t dcv_code_k(const dcv_code* code) { return code ? code->code.enc.k : 0; }
uint32_t dcv_code_m(const dcv_code* code) { return code ? code->code.enc.m : 0; }
uint16_t dcv_code_alpha(const dcv_code* code) { return code ? code->code.F().alpha() : 0; }

uint32_t dcv_code_level_distance(const dcv_code* code, uint32_t level) {
    if (!code || level >= code->code.level_dist.size()) return 0;
    return code->code.level_dist[level];
}

uint32_t dcv_code_distance(const dcv_code* code) { return code ? code->code.d : 0; }
uint32_t dcv_code_dfree(const dcv_code* code) { return code ? code->code.dfree : 0; }

dcv_status dcv_stream_new(uint32_t width, size_t nblocks, const uint16_t* symbols,
                          dcv_stream** out) {
    if (dcv_status st = require(out != nullptr, "null out pointer")) return st;
    if (dcv_status st = require(symbols != nullptr || nblocks == 0, "null symbols pointer"))
        return st;
    if (dcv_status st = require(width > 0, "width must be positive")) return st;
    return guarded([&] {
        auto* handle = new dcv_stream;
        handle->s.width = width;
        for (size_t b = 0; b < nblocks; ++b)
            handle->s.blocks.emplace_back(symbols + b * width, symbols + (b + 1) * width);
        *out = handle;
    });
}

dcv_status dcv_stream_load(const char* path, const dcv_code* code, dcv_stream** out) {
    if (dcv_status st = require(path && out, "null argument")) return st;
    return guarded([&] {
        StreamFile f = stream_load(path);
        if (code && !(f.params == params_of(code->code)))
            raise(ErrKind::Data, "stream file describes a different code");
        *out = new dcv_stream{std::move(f.stream)};
    });
}

dcv_status dcv_stream_save(const dcv_code* code, const dcv_stream* stream, dcv_role role,
                           const char* path) {
    if (dcv_status st = require(code && stream && path, "null argument")) return st;
    return guarded([&] {
        StreamFile f;
        f.params = params_of(code->code);
        switch (role) {
            case DCV_ROLE_MESSAGE: f.role = StreamRole::Message; break;
            case DCV_ROLE_CODEWORD: f.role = StreamRole::Codeword; break;
            case DCV_ROLE_RECEIVED: f.role = StreamRole::Received; break;
            default: raise(ErrKind::Param, "unknown stream role");
        }
        std::uint32_t expect = f.role == StreamRole::Message ? code->code.enc.k : code->code.enc.n;
        if (stream->s.width != expect)
            raise(ErrKind::Data, "stream width does not match the role");
        f.stream = stream->s;
        stream_save(f, path);
    });
}

uint32_t dcv_stream_width(const dcv_stream* stream) { return stream ? stream->s.width : 0; }
size_t dcv_stream_blocks(const dcv_stream* stream) { return stream ? stream->s.size() : 0; }

dcv_status dcv_stream_copy_out(const dcv_stream* stream, uint16_t* buf, size_t buf_len) {
    if (dcv_status st = require(stream && buf, "null argument")) return st;
    size_t need = stream->s.size() * stream->s.width;
    if (dcv_status st = require(buf_len >= need, "buffer too small")) return st;
    size_t at = 0;
    for (const Vec& b : stream->s.blocks)
        for (Symbol v : b) buf[at++] = v;
    return DCV_OK;
}

void dcv_stream_free(dcv_stream* stream) { delete stream; }

dcv_status dcv_encode(const dcv_code* code, const dcv_stream* message, dcv_stream** out) {
    if (dcv_status st = require(code && message && out, "null argument")) return st;
    return guarded([&] { *out = new dcv_stream{encode(code->code.enc, message->s)}; });
}

dcv_status dcv_corrupt(const dcv_code* code, const dcv_stream* in, dcv_model model, double rate,
                       uint32_t burst_len, uint32_t cap, uint64_t seed, dcv_stream** out,
                       uint32_t* total_errors) {
    if (dcv_status st = require(code && in && out, "null argument")) return st;
    return guarded([&] {
        if (in->s.width != code->code.enc.n)
            raise(ErrKind::Data, "corrupt expects a codeword-width stream");
        CorruptConfig cc = corrupt_config(code, model, rate, burst_len, cap, seed);
        CorruptResult res = inject(code->code.F(), in->s, cc);
        if (total_errors) *total_errors = res.total_errors;
        *out = new dcv_stream{std::move(res.corrupted)};
    });
}

dcv_status dcv_decode(const dcv_code* code, const dcv_stream* received, uint32_t flags,
                      dcv_stream** decoded, dcv_stream** messages, char** report_json) {
    if (dcv_status st = require(code && received, "null argument")) return st;
    return guarded([&] {
        WindecConfig wc;
        wc.strict = flags & DCV_DECODE_STRICT;
        wc.step2_list = flags & DCV_DECODE_STEP2_LIST;
        DecodeReport rep = sliding_decode(code->code.enc, code->ctx, received->s,
                                          make_partial_decoder(code->code, wc));
        if (report_json)
            *report_json = dup_string(decode_report_json(code->code, code->ctx, rep,
                                                         flags & DCV_DECODE_VERBOSE));
        if (decoded) *decoded = new dcv_stream{std::move(rep.decoded)};
        if (messages) *messages = new dcv_stream{std::move(rep.messages)};
    });
}

dcv_status dcv_analyze(const dcv_code* code, int enumerate_d, uint32_t dfree_cap,
                       char** json_out) {
    if (dcv_status st = require(code && json_out, "null argument")) return st;
    return guarded([&] {
        AnalyzeOptions opts;
        opts.enumerate_d = enumerate_d != 0;
        opts.dfree_cap = dfree_cap;
        *json_out = dup_string(analyze_report_json(analyze_code(code->code, opts)));
    });
}

dcv_status dcv_simulate(const dcv_code* code, uint32_t trials, uint32_t msg_len, dcv_model model,
                        double rate, uint32_t burst_len, uint32_t cap, uint64_t seed,
                        char** json_out) {
    if (dcv_status st = require(code && json_out, "null argument")) return st;
    return guarded([&] {
        SimulateConfig sc;
        sc.trials = trials;
        sc.msg_len = msg_len;
        sc.corrupt = corrupt_config(code, model, rate, burst_len, cap, seed);
        SimulateReport rep = simulate(code->code, code->ctx, sc);
        *json_out = dup_string(simulate_report_json(sc, rep));
    });
}

void dcv_string_free(char* s) { delete[] s; }

const char* dcv_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
