#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "dcc.hpp"
#include "harness.hpp"

using namespace dcconv;

namespace {

DoublyCyclicCode fixture_code() { return make_code(Field::make(5, 1), 1, 2); }

// walk all nonzero coordinate vectors of the level and find the lightest word
std::uint32_t min_weight(const Field& F, const Matrix& gen) {
    Vec u(gen.rows, 0);
    std::uint32_t best = UINT32_MAX;
    bool more = true;
    while (more) {
        more = false;
        for (std::size_t i = u.size(); i-- > 0;) {
            if (++u[i] < F.q()) {
                more = true;
                break;
            }
            u[i] = 0;
        }
        if (!more) break;
        best = std::min(best, hamming_weight(mul_vec_mat(F, u, gen)));
    }
    return best;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("code construction over GF(5)") {
    DoublyCyclicCode code = fixture_code();
    CHECK(code.enc.n == 4);
    CHECK(code.enc.k == 1);
    CHECK(code.enc.m == 2);
    CHECK(code.f == Vec{2, 4, 3, 1});
    CHECK(code.enc.G[0].row(0) == Vec{2, 4, 3, 1});
    CHECK(code.enc.G[1].row(0) == Vec{2, 3, 2, 3});
    CHECK(code.enc.G[2].row(0) == Vec{2, 1, 3, 4});
    CHECK(code.level_dist == std::vector<std::uint32_t>{4, 3, 2});
    CHECK(code.d == 8);
    CHECK(code.dfree == 12);
    CHECK(matrix_rank(code.F(), code.enc.G[0]) == 1);
}

TEST_CASE("level stack over GF(5)") {
    DoublyCyclicCode code = fixture_code();
    REQUIRE(code.stacks.size() == 3);

    const StackedCode& s0 = code.stacks[0];
    CHECK(s0.gen.rows == 1);
    CHECK(s0.gen.row(0) == Vec{2, 4, 3, 1});
    CHECK(s0.gen_poly == Vec{2, 4, 3, 1});
    CHECK(s0.dist == 4);
    CHECK(s0.t == 1);

    const StackedCode& s1 = code.stacks[1];
    CHECK(s1.gen.rows == 2);
    CHECK(s1.gen.row(0) == Vec{2, 3, 2, 3});  // deeper tap on top
    CHECK(s1.gen.row(1) == Vec{2, 4, 3, 1});
    CHECK(s1.gen_poly == Vec{2, 2, 1});
    CHECK(s1.dist == 3);
    CHECK(s1.t == 1);

    const StackedCode& s2 = code.stacks[2];
    CHECK(s2.gen.rows == 3);
    CHECK(s2.gen.row(0) == Vec{2, 1, 3, 4});
    CHECK(s2.gen.row(2) == Vec{2, 4, 3, 1});
    CHECK(s2.gen_poly == Vec{4, 1});
    CHECK(s2.dist == 2);
    CHECK(s2.t == 0);
}

TEST_CASE("each level generator matches its root polynomial") {
    for (auto code : {fixture_code(), make_code(Field::make(7, 1), 2, 2)}) {
        const Field& F = code.F();
        SplitMix64 rng(3);
        for (const StackedCode& s : code.stacks) {
            // every row-space word is a polynomial multiple of gen_poly
            for (int it = 0; it < 10; ++it) {
                Vec x(s.gen.rows);
                for (auto& c : x) c = static_cast<Symbol>(rng.below(F.q()));
                CHECK(stack_membership(F, s, mul_vec_mat(F, x, s.gen)));
            }
            // every short multiple of gen_poly lies in the row space
            int gd = poly_deg(s.gen_poly);
            REQUIRE(gd == static_cast<int>(F.n() - s.gen.rows));
            for (int it = 0; it < 10; ++it) {
                Vec c(s.gen.rows);
                for (auto& cc : c) cc = static_cast<Symbol>(rng.below(F.q()));
                Vec word = poly_mul(F, c, s.gen_poly);
                word.resize(F.n(), 0);
                CHECK(solve_right(F, s.gen, word).has_value());
            }
        }
    }
}

TEST_CASE("level distances are met with equality") {
    DoublyCyclicCode code = fixture_code();
    for (const StackedCode& s : code.stacks)
        CHECK(min_weight(code.F(), s.gen) == s.dist);

    DoublyCyclicCode code7 = make_code(Field::make(7, 1), 2, 2);
    CHECK(code7.level_dist == std::vector<std::uint32_t>{5, 3, 1});
    CHECK(code7.d == 8);
    CHECK(code7.dfree == 15);
    for (const StackedCode& s : code7.stacks)
        CHECK(min_weight(code7.F(), s.gen) == s.dist);
}

TEST_CASE("coefficient matrices are scaled copies of the base tap") {
    for (auto code : {fixture_code(), make_code(Field::make(7, 1), 2, 2),
                      make_code(Field::make_q(9, {1, 0, 1}), 2, 1)}) {
        const Field& F = code.F();
        const std::uint32_t k = code.enc.k;
        for (std::uint32_t j = 0; j <= code.enc.m; ++j)
            for (std::uint32_t r = 0; r < k; ++r)
                CHECK(code.enc.G[j].row(r) == sigma_apply(F, code.enc.G[0].row(r), k, j));
    }
}

TEST_CASE("memoryless construction") {
    DoublyCyclicCode code = make_code(Field::make(5, 1), 2, 0);
    CHECK(code.enc.m == 0);
    CHECK(code.level_dist == std::vector<std::uint32_t>{3});
    CHECK(code.d == 2);
    CHECK(code.dfree == 3);
    CHECK(code.stacks.size() == 1);
}

TEST_CASE("parameter validation") {
    auto F = Field::make(5, 1);
    CHECK_THROWS_AS(make_code(nullptr, 1, 2), Error);
    CHECK_THROWS_AS(make_code(F, 0, 0), Error);
    CHECK_THROWS_AS(make_code(F, 3, 0), Error);  // 2k > q-1
    CHECK_THROWS_AS(make_code(F, 1, 4), Error);  // (m+1)k > q-1
    CHECK_THROWS_AS(make_code(F, 2, 2), Error);
    CHECK(make_code(F, 2, 1).enc.m == 1);  // boundary (m+1)k = q-1 is fine
    CHECK_THROWS_AS(make_code(F, 1, UINT32_MAX), Error);  // (m+1)k must not wrap
}

TEST_CASE("membership by generator polynomial division") {
    DoublyCyclicCode code = fixture_code();
    const Field& F = code.F();
    CHECK(stack_membership(F, code.stacks[0], Vec{2, 4, 3, 1}));
    CHECK(stack_membership(F, code.stacks[0], Vec{0, 0, 0, 0}));
    CHECK(stack_membership(F, code.stacks[1], Vec{1, 1, 3, 0}));
    CHECK_FALSE(stack_membership(F, code.stacks[0], Vec{1, 1, 3, 0}));
    CHECK(stack_membership(F, code.stacks[2], Vec{1, 4, 0, 0}));  // root at 1
    CHECK_FALSE(stack_membership(F, code.stacks[2], Vec{1, 0, 0, 0}));
    CHECK_THROWS_AS(stack_membership(F, code.stacks[0], Vec{1, 2}), Error);

    // the degree-zero generator at the top of a fully stacked code accepts all
    DoublyCyclicCode code7 = make_code(Field::make(7, 1), 2, 2);
    CHECK(stack_membership(code7.F(), code7.stacks[2], Vec{1, 2, 3, 4, 5, 6}));
}

TEST_CASE("parameter records") {
    DoublyCyclicCode code = fixture_code();
    CodeParams p = params_of(code);
    CHECK(p.q == 5);
    CHECK(p.alpha == 2);
    CHECK(p.modulus.empty());
    CHECK(p.k == 1);
    CHECK(p.m == 2);

    CHECK(params_to_text(p) == "dcconv-code v1\nq 5\nalpha 2\nk 1\nm 2\n");
    CHECK(params_from_text(params_to_text(p)) == p);

    DoublyCyclicCode back = code_from_params(p);
    CHECK(back.enc.G[1].row(0) == code.enc.G[1].row(0));
    CHECK(back.d == code.d);
}

TEST_CASE("parameter records carry the field modulus") {
    DoublyCyclicCode code = make_code(Field::make_q(9, {1, 0, 1}), 2, 1);
    CodeParams p = params_of(code);
    CHECK(p.modulus == std::vector<Symbol>{1, 0, 1});
    CHECK(p.alpha == 4);
    CodeParams rt = params_from_text(params_to_text(p));
    CHECK(rt == p);
    CHECK(code_from_params(rt).level_dist == code.level_dist);
}

TEST_CASE("parameter text rejects malformed records") {
    CHECK_THROWS_AS(params_from_text(""), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v2\nq 5\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5\nalpha 2\nk 1\n"), Error);  // no m
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5\nq 5\nalpha 2\nk 1\nm 2\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5\nalpha 2\nk 1\nm 2\nz 9\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5\nalpha 7\nk 1\nm 2\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5\nalpha 0\nk 1\nm 2\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq five\nalpha 2\nk 1\nm 2\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq 5x\nalpha 2\nk 1\nm 2\n"), Error);
    CHECK_THROWS_AS(params_from_text("dcconv-code v1\nq\nalpha 2\nk 1\nm 2\n"), Error);
}

TEST_CASE("parameter files round trip on disk") {
    std::string path = temp_path("dcconv_test_params.txt");
    CodeParams p = params_of(fixture_code());
    params_save(p, path);
    CHECK(params_load(path) == p);
    std::remove(path.c_str());
    CHECK_THROWS_AS(params_load(path), Error);
    CHECK_THROWS_AS(params_save(p, temp_path("no_such_dir/params.txt")), Error);
}
