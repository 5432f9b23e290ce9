#include <doctest.h>

#include <cstdint>
#include <random>

#include "suzuki/gf2e.hpp"

using namespace suzuki;

// Reference multiplication: carry-less product then bitwise long division.
static uint64_t ref_mul(uint32_t e, uint64_t mod, uint64_t a, uint64_t b) {
    uint64_t acc = 0;
    for (uint32_t i = 0; i < e; ++i)
        if ((b >> i) & 1) acc ^= a << i;
    for (int i = int(2 * e - 2); i >= int(e); --i)
        if ((acc >> i) & 1) acc ^= mod << (i - e);
    return acc;
}

TEST_CASE("tables agree with reference multiplication") {
    for (uint32_t e : {3u, 12u}) {
        const auto F = FieldCtx::make(e, FieldCtx::default_modulus(e));
        std::mt19937_64 rng(17);
        const uint64_t mask = F->order() - 1;
        for (int i = 0; i < 20000; ++i) {
            const Fe a = rng() & mask, b = rng() & mask;
            const Fe want = ref_mul(e, F->modulus(), a, b);
            CHECK(F->mul(a, b) == want);
            CHECK(F->mul_schoolbook(a, b) == want);
        }
    }
}

TEST_CASE("field axioms and inverse") {
    const auto F = FieldCtx::make(12, FieldCtx::default_modulus(12));
    std::mt19937_64 rng(3);
    const uint64_t mask = F->order() - 1;
    for (int i = 0; i < 2000; ++i) {
        const Fe a = rng() & mask, b = rng() & mask, c = rng() & mask;
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
        CHECK(F->mul(a, b ^ c) == (F->mul(a, b) ^ F->mul(a, c)));
        if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
    CHECK_THROWS_AS((void)F->inv(0), std::domain_error);
    CHECK_THROWS_AS((void)F->check(uint64_t(1) << 12), std::invalid_argument);
}

TEST_CASE("pow and frobenius") {
    const auto F = FieldCtx::make(12, FieldCtx::default_modulus(12));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Fe a = rng() & 0xfff;
        CHECK(F->pow(a, 0) == 1);
        CHECK(F->pow(a, 1) == a);
        CHECK(F->pow(a, 5) == F->mul(a, F->mul(a, F->mul(a, F->mul(a, a)))));
        CHECK(F->frobenius(a, 1) == F->mul(a, a));
        CHECK(F->frobenius(a, 12) == a);  // x^(2^e) = x
        if (a) CHECK(F->pow(a, F->order() - 1) == 1);
    }
}

TEST_CASE("budget-free field agrees with tabulated field") {
    const auto Ft = FieldCtx::make(12, FieldCtx::default_modulus(12));
    const auto Fs = FieldCtx::make(12, FieldCtx::default_modulus(12), std::nullopt, 0);
    CHECK(Ft->has_tables());
    CHECK(!Fs->has_tables());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const Fe a = rng() & 0xfff, b = rng() & 0xfff;
        CHECK(Ft->mul(a, b) == Fs->mul(a, b));
        if (a) CHECK(Ft->inv(a) == Fs->inv(a));
    }
    CHECK_THROWS_AS((void)Fs->log_of(3), std::logic_error);
}

TEST_CASE("discrete log round trip") {
    const auto F = FieldCtx::make(12, FieldCtx::default_modulus(12));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const Fe a = (rng() & 0xfff) | 1;
        CHECK(F->exp_of(F->log_of(a)) == a);
    }
    CHECK_THROWS_AS((void)F->log_of(0), std::domain_error);
}

TEST_CASE("subfield embedding is a ring homomorphism of full order") {
    const auto F = FieldCtx::make(12, FieldCtx::default_modulus(12),
                                  SubfieldSpec{3, FieldCtx::default_modulus(3)});
    const FieldCtx& S = *F->subfield();
    // Homomorphism on all pairs.
    for (Fe a = 0; a < 8; ++a)
        for (Fe b = 0; b < 8; ++b) {
            CHECK(F->embed(S.mul(a, b)) == F->mul(F->embed(a), F->embed(b)));
            CHECK(F->embed(a ^ b) == (F->embed(a) ^ F->embed(b)));
        }
    // The image of a generator of GF(8)* has multiplicative order exactly 7.
    const Fe g = F->embed(S.generator());
    Fe p = 1;
    int ord = 0;
    for (int i = 1; i <= 7; ++i) {
        p = F->mul(p, g);
        if (p == 1) {
            ord = i;
            break;
        }
    }
    CHECK(ord == 7);
    // project inverts embed; non-members are rejected.
    int members = 0;
    for (Fe a = 0; a < 4096; ++a)
        if (F->in_subfield(a)) {
            ++members;
            CHECK(F->embed(F->project(a)) == a);
        }
    CHECK(members == 8);
}

TEST_CASE("trace and artin-schreier solver, exhaustive") {
    const auto F = FieldCtx::make(12, FieldCtx::default_modulus(12),
                                  SubfieldSpec{3, FieldCtx::default_modulus(3)});
    int zero_trace = 0;
    for (Fe c = 0; c < 4096; ++c) {
        // Trace to GF(8): sum of c^(8^i), i < 4, must land in the subfield.
        Fe t = 0, p = c;
        for (int i = 0; i < 4; ++i) {
            t ^= p;
            p = F->frobenius(p, 3);
        }
        CHECK(F->in_subfield(t));
        CHECK(F->embed(F->trace_to_subfield(c)) == t);
        CHECK(F->trace_is_zero(c) == (t == 0));
        const auto y = F->solve_artin_schreier(c);
        CHECK(y.has_value() == (t == 0));
        if (y) CHECK((F->frobenius(*y, 3) ^ *y) == c);
        zero_trace += (t == 0);
    }
    CHECK(zero_trace == 512);  // kernel of a surjective GF(8)-linear map
}

TEST_CASE("hex round trip and width") {
    const auto F3 = FieldCtx::make(3, FieldCtx::default_modulus(3));
    const auto F12 = FieldCtx::make(12, FieldCtx::default_modulus(12));
    CHECK(F3->hex_width() == 1);
    CHECK(F12->hex_width() == 3);
    CHECK(F3->to_hex(5) == "5");
    CHECK(F12->to_hex(0x0ab) == "0ab");
    CHECK(parse_hex("0ab") == 0x0ab);
    CHECK(parse_hex(F12->to_hex(0xfff)) == 0xfff);
    CHECK_THROWS_AS((void)parse_hex("xyz"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_hex(""), std::invalid_argument);
}

TEST_CASE("reducible or malformed moduli are rejected") {
    // x^12 (+ nothing): not irreducible, wrong form.
    CHECK_THROWS_AS((void)FieldCtx::make(12, uint64_t(1) << 12), std::invalid_argument);
    // x^12 + x^2 = x^2 (x^10 + 1): reducible.
    CHECK_THROWS_AS((void)FieldCtx::make(12, (uint64_t(1) << 12) | 4), std::invalid_argument);
    // degree out of range
    CHECK_THROWS_AS((void)FieldCtx::make(25, 0x2000001), std::invalid_argument);
    // subfield degree must divide
    CHECK_THROWS_AS((void)FieldCtx::make(12, FieldCtx::default_modulus(12),
                                         SubfieldSpec{5, FieldCtx::default_modulus(5)}),
                    std::invalid_argument);
}

TEST_CASE("fnv1a64 matches the reference constants") {
    // Published FNV-1a test vector: empty string hashes to the offset basis.
    CHECK(fnv1a64(nullptr, 0) == 0xcbf29ce484222325ull);
    const char a[] = "a";
    CHECK(fnv1a64(a, 1) == 0xaf63dc4c8601ec8cull);
}
