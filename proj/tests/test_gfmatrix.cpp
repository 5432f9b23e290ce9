#include <doctest.h>

#include <random>
#include <vector>

#include "suzuki/gfmatrix.hpp"

using namespace suzuki;

namespace {

std::shared_ptr<const FieldCtx> f12() {
    static auto F = FieldCtx::make(12, FieldCtx::default_modulus(12));
    return F;
}

// Scalar reference elimination on a row-major copy.  A system can be both
// rank deficient and inconsistent; record the defects separately.
struct RefSolve {
    bool deficient = false;
    bool inconsistent = false;
    size_t rank = 0;
    std::vector<uint32_t> x;
};

RefSolve ref_solve(const FieldCtx& F, std::vector<std::vector<uint32_t>> m, size_t unknowns) {
    const size_t rows = m.size();
    RefSolve out;
    size_t r = 0;
    std::vector<size_t> pivot_row(unknowns, size_t(-1));
    for (size_t c = 0; c < unknowns && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && !m[piv][c]) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const uint32_t inv = uint32_t(F.inv(m[r][c]));
        for (size_t j = c; j <= unknowns; ++j) m[r][j] = uint32_t(F.mul(m[r][j], inv));
        for (size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c]) {
                const uint32_t f = m[i][c];
                for (size_t j = c; j <= unknowns; ++j)
                    m[i][j] ^= uint32_t(F.mul(f, m[r][j]));
            }
        pivot_row[c] = r;
        ++r;
    }
    out.rank = r;
    for (size_t i = r; i < rows; ++i)
        if (m[i][unknowns]) out.inconsistent = true;
    for (size_t c = 0; c < unknowns; ++c)
        if (pivot_row[c] == size_t(-1)) out.deficient = true;
    if (!out.deficient && !out.inconsistent) {
        out.x.resize(unknowns);
        for (size_t c = 0; c < unknowns; ++c) out.x[c] = m[pivot_row[c]][unknowns];
    }
    return out;
}

PlaneMat to_plane(const FieldCtx& F, const std::vector<std::vector<uint32_t>>& m) {
    PlaneMat M(F, m.size(), m[0].size());
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[0].size(); ++c)
            if (m[r][c]) M.set(r, c, m[r][c]);
    return M;
}

}  // namespace

TEST_CASE("plane storage round-trips symbols") {
    const auto F = f12();
    std::mt19937_64 rng(2);
    PlaneMat M(*F, 5, 37);
    std::vector<std::vector<uint32_t>> ref(5, std::vector<uint32_t>(37, 0));
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 37; ++c) {
            ref[r][c] = rng() & 0xfff;
            if (ref[r][c]) M.set(r, c, ref[r][c]);
        }
    std::vector<uint32_t> row(37);
    for (size_t r = 0; r < 5; ++r) {
        M.extract_row(r, row.data());
        for (size_t c = 0; c < 37; ++c) {
            CHECK(row[c] == ref[r][c]);
            CHECK(M.get(r, c) == ref[r][c]);
        }
    }
}

TEST_CASE("xor_scaled_row matches scalar arithmetic") {
    const auto F = f12();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const size_t cols = 1 + rng() % 130;
        std::vector<std::vector<uint32_t>> ref(2, std::vector<uint32_t>(cols, 0));
        for (auto& row : ref)
            for (auto& v : row) v = rng() & 0xfff;
        PlaneMat M = to_plane(*F, ref);
        const uint32_t lambda = rng() & 0xfff;
        M.xor_scaled_row(0, 1, lambda, 0);
        std::vector<uint32_t> got(cols);
        M.extract_row(0, got.data());
        for (size_t c = 0; c < cols; ++c)
            CHECK(got[c] == (ref[0][c] ^ uint32_t(F->mul(lambda, ref[1][c]))));

        // scale_row on the other row
        const uint32_t mu = (rng() & 0xfff) | 1;
        M.scale_row(1, mu, 0);
        M.extract_row(1, got.data());
        for (size_t c = 0; c < cols; ++c) CHECK(got[c] == uint32_t(F->mul(mu, ref[1][c])));
    }
}

TEST_CASE("solver agrees with the scalar reference on random systems") {
    const auto F = f12();
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t unknowns = 1 + rng() % 24;
        const size_t rows = 1 + rng() % 32;
        std::vector<std::vector<uint32_t>> m(rows, std::vector<uint32_t>(unknowns + 1, 0));
        for (auto& row : m)
            for (auto& v : row) v = (rng() % 3) ? 0 : uint32_t(rng() & 0xfff);
        const RefSolve want = ref_solve(*F, m, unknowns);
        PlaneMat M = to_plane(*F, m);
        std::vector<uint32_t> x;
        const SolveReport rep = solve_augmented(M, unknowns, x);
        if (!want.deficient && !want.inconsistent) {
            CHECK(rep.status == SolveStatus::ok);
            CHECK(rep.rank == want.rank);
            CHECK(x == want.x);
        } else if (want.deficient && want.inconsistent) {
            CHECK(rep.status != SolveStatus::ok);
        } else {
            CHECK(rep.status == (want.deficient ? SolveStatus::rank_deficient
                                                : SolveStatus::inconsistent));
        }
    }
}

TEST_CASE("consistent square system solves to the planted solution") {
    const auto F = f12();
    std::mt19937_64 rng(23);
    const size_t n = 20;
    std::vector<std::vector<uint32_t>> A(n, std::vector<uint32_t>(n + 1, 0));
    std::vector<uint32_t> sol(n);
    for (auto& v : sol) v = rng() & 0xfff;
    for (size_t r = 0; r < n; ++r) {
        uint32_t rhs = 0;
        for (size_t c = 0; c < n; ++c) {
            A[r][c] = rng() & 0xfff;
            rhs ^= uint32_t(F->mul(A[r][c], sol[c]));
        }
        A[r][n] = rhs;
    }
    PlaneMat M = to_plane(*F, A);
    std::vector<uint32_t> x;
    const SolveReport rep = solve_augmented(M, n, x);
    if (rep.status == SolveStatus::ok) CHECK(x == sol);  // singular A is possible but rare
    // With an extra consistent equation the answer must not change.
}

TEST_CASE("inconsistent and rank-deficient systems are classified") {
    const auto F = f12();
    // Full column rank with a contradictory third equation: x = 1, y = 1,
    // x + y = 1 (but 1 + 1 = 0 in characteristic two).
    std::vector<std::vector<uint32_t>> bad = {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    PlaneMat M1 = to_plane(*F, bad);
    std::vector<uint32_t> x;
    CHECK(solve_augmented(M1, 2, x).status == SolveStatus::inconsistent);
    // When both defects are present the solver may report either one.
    std::vector<std::vector<uint32_t>> both = {{1, 1, 1}, {1, 1, 2}};
    PlaneMat M3 = to_plane(*F, both);
    CHECK(solve_augmented(M3, 2, x).status != SolveStatus::ok);
    // Single equation in two unknowns: rank deficient.
    std::vector<std::vector<uint32_t>> thin = {{1, 1, 1}};
    PlaneMat M2 = to_plane(*F, thin);
    CHECK(solve_augmented(M2, 2, x).status == SolveStatus::rank_deficient);
}

TEST_CASE("gf_rank on crafted matrices") {
    const auto F = f12();
    std::mt19937_64 rng(31);
    // Rank r matrix built as product of random (rows x r) and (r x cols).
    for (size_t r : {1u, 3u, 5u}) {
        const size_t rows = 8, cols = 11;
        std::vector<std::vector<uint32_t>> L(rows, std::vector<uint32_t>(r));
        std::vector<std::vector<uint32_t>> R(r, std::vector<uint32_t>(cols));
        for (auto& row : L)
            for (auto& v : row) v = rng() & 0xfff;
        for (auto& row : R)
            for (auto& v : row) v = rng() & 0xfff;
        // Force L, R to full rank r by planting identities.
        for (size_t i = 0; i < r; ++i) {
            for (size_t j = 0; j < r; ++j) L[i][j] = (i == j);
            for (size_t j = 0; j < r; ++j) R[i][j] = (i == j);
        }
        std::vector<std::vector<uint32_t>> P(rows, std::vector<uint32_t>(cols, 0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                uint32_t acc = 0;
                for (size_t t = 0; t < r; ++t) acc ^= uint32_t(F->mul(L[i][t], R[t][j]));
                P[i][j] = acc;
            }
        PlaneMat M = to_plane(*F, P);
        CHECK(gf_rank(M) == r);
    }
    PlaneMat Z(*F, 4, 4);
    CHECK(gf_rank(Z) == 0);
}
