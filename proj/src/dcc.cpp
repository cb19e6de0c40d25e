#include "dcc.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dcconv {
namespace {

// product of (x - alpha^i) for i = 0..count-1 in the cyclic ring
Vec ring_root_product(const Field& F, std::uint32_t count) {
    std::uint32_t n = F.n();
    Vec f(n, 0);
    f[0] = 1;
    for (std::uint32_t i = 0; i < count; ++i) {
        Vec term(n, 0);
        term[0] = F.neg(F.alpha_pow(i));
        term[1 % n] = F.add(term[1 % n], 1);
        f = ring_mul(F, f, term);
    }
    return f;
}

// the same product as a plain polynomial
Vec poly_root_product(const Field& F, std::uint32_t count) {
    Vec g{1};
    for (std::uint32_t i = 0; i < count; ++i)
        g = poly_mul(F, g, Vec{F.neg(F.alpha_pow(i)), 1});
    return g;
}

}  // namespace

DoublyCyclicCode make_code(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m) {
    if (!field) raise(ErrKind::Param, "null field");
    const Field& F = *field;
    const std::uint32_t n = F.n();
    if (k < 1 || 2 * k > n)
        raise(ErrKind::Param, "k must satisfy 1 <= k <= (q-1)/2");
    if ((static_cast<std::uint64_t>(m) + 1) * k > n)
        raise(ErrKind::Param, "m must satisfy (m+1)k <= q-1");

    DoublyCyclicCode code;
    code.f = ring_root_product(F, n - k);

    std::vector<Matrix> G;
    for (std::uint32_t j = 0; j <= m; ++j) {
        std::vector<Vec> rows;
        Vec xl(n, 0);
        xl[0] = 1;
        for (std::uint32_t l = 0; l < k; ++l) {
            rows.push_back(sigma_apply(F, ring_mul(F, xl, code.f), k, j));
            Vec x(n, 0);
            x[1 % n] = 1;
            xl = ring_mul(F, xl, x);
        }
        G.push_back(matrix_from_rows(rows));
    }
    code.enc = make_encoder(field, n, k, m, std::move(G));

    if (matrix_rank(F, code.enc.G[0]) != k)
        raise(ErrKind::Internal, "leading coefficient matrix is rank deficient");

    for (std::uint32_t l = 0; l <= m; ++l) {
        StackedCode s;
        s.level = l;
        std::vector<Vec> rows;
        for (std::uint32_t j = l + 1; j-- > 0;)
            for (std::uint32_t r = 0; r < k; ++r) rows.push_back(code.enc.G[j].row(r));
        s.gen = matrix_from_rows(rows);
        s.gen_poly = poly_root_product(F, n - (l + 1) * k);
        s.dist = n - (l + 1) * k + 1;
        s.t = (s.dist - 1) / 2;
        code.level_dist.push_back(s.dist);
        code.stacks.push_back(std::move(s));
    }
    std::uint32_t sum = 0;
    for (std::uint32_t dl : code.level_dist) sum += dl;
    code.d = sum - 1;
    code.dfree = (m + 1) * (n - k + 1);
    return code;
}

bool stack_membership(const Field& F, const StackedCode& s, const Vec& word) {
    if (word.size() != F.n()) raise(ErrKind::Param, "word length mismatch");
    if (poly_deg(s.gen_poly) <= 0) return true;  // the code is the whole space
    return poly_deg(poly_divmod(F, word, s.gen_poly).second) < 0;
}

CodeParams params_of(const DoublyCyclicCode& code) {
    CodeParams p;
    p.q = code.F().q();
    p.alpha = code.F().alpha();
    p.modulus = code.F().modulus();
    p.k = code.enc.k;
    p.m = code.enc.m;
    return p;
}

DoublyCyclicCode code_from_params(const CodeParams& params) {
    auto field = Field::make_q(params.q, params.modulus, params.alpha);
    return make_code(field, params.k, params.m);
}

std::string params_to_text(const CodeParams& params) {
    std::ostringstream out;
    out << "dcconv-code v1\n";
    out << "q " << params.q << "\n";
    if (!params.modulus.empty()) {
        out << "modulus";
        for (Symbol c : params.modulus) out << ' ' << c;
        out << "\n";
    }
    out << "alpha " << params.alpha << "\n";
    out << "k " << params.k << "\n";
    out << "m " << params.m << "\n";
    return out.str();
}

CodeParams params_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "dcconv-code v1")
        raise(ErrKind::Data, "bad code record header");
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) raise(ErrKind::Data, "malformed code record line: " + line);
        std::string key = line.substr(0, sp);
        if (kv.count(key)) raise(ErrKind::Data, "duplicate key in code record: " + key);
        kv[key] = line.substr(sp + 1);
    }
    auto get = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) raise(ErrKind::Data, "code record missing key: " + key);
        return it->second;
    };
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
    CodeParams p;
    p.q = parse_u32(get("q"), "q");
    std::uint32_t alpha = parse_u32(get("alpha"), "alpha");
    if (alpha >= p.q || alpha == 0) raise(ErrKind::Data, "alpha out of range");
    p.alpha = static_cast<Symbol>(alpha);
    p.k = parse_u32(get("k"), "k");
    p.m = parse_u32(get("m"), "m");
    if (kv.count("modulus")) {
        std::istringstream ms(kv["modulus"]);
        std::string tok;
        while (ms >> tok) {
            std::uint32_t c = parse_u32(tok, "modulus coefficient");
            if (c > UINT16_MAX) raise(ErrKind::Data, "modulus coefficient out of range");
            p.modulus.push_back(static_cast<Symbol>(c));
        }
        if (p.modulus.empty()) raise(ErrKind::Data, "empty modulus line");
    }
    std::vector<std::string> known = {"q", "alpha", "k", "m", "modulus"};
    for (const auto& [key, value] : kv) {
        (void)value;
        bool ok = false;
        for (const auto& kn : known) ok = ok || kn == key;
        if (!ok) raise(ErrKind::Data, "unknown key in code record: " + key);
    }
    return p;
}

void params_save(const CodeParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrKind::Io, "cannot open for writing: " + path);
    out << params_to_text(params);
    if (!out) raise(ErrKind::Io, "write failed: " + path);
}

CodeParams params_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrKind::Io, "cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return params_from_text(buf.str());
}

}  // namespace dcconv
