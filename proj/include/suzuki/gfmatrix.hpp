#pragma once
// Dense matrices over GF(2^e) and the elimination kernel used by the decoder.
//
// Matrix stores symbols row-major (plain uint32_t values).  PlaneMat stores
// each row as e bit-planes packed in 64-bit words, so the hot row operation
// dst ^= lambda * src becomes at most e^2 word-XOR passes per row instead of
// per-symbol table multiplications: lambda * v is GF(2)-linear in v, and the
// images lambda * u^i tell which source plane feeds which target plane.

#include <cstdint>
#include <vector>

#include "suzuki/gf2e.hpp"

namespace suzuki {

class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

class PlaneMat {
  public:
    PlaneMat(const FieldCtx& F, size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldCtx& field() const { return *F_; }

    uint32_t get(size_t r, size_t c) const;
    void set(size_t r, size_t c, uint32_t v);  // assumes the slot is currently 0
    void swap_rows(size_t r1, size_t r2);
    // row[dst] += lambda * row[src], starting at word index from_word.
    void xor_scaled_row(size_t dst, size_t src, uint32_t lambda, size_t from_word);
    // row[r] *= lambda, starting at word index from_word.
    void scale_row(size_t r, uint32_t lambda, size_t from_word);
    // Decodes one full row back to symbol values (out has cols() entries).
    void extract_row(size_t r, uint32_t* out) const;

    size_t words_per_plane() const { return wpr_; }

  private:
    uint64_t* plane(size_t r, size_t p) { return w_.data() + (r * e_ + p) * wpr_; }
    const uint64_t* plane(size_t r, size_t p) const { return w_.data() + (r * e_ + p) * wpr_; }

    const FieldCtx* F_;
    uint32_t e_;
    size_t rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

enum class SolveStatus { ok, rank_deficient, inconsistent };

struct SolveReport {
    SolveStatus status = SolveStatus::ok;
    size_t rank = 0;
};

// Gaussian elimination on an augmented system: M has `unknowns` coefficient
// columns plus one right-hand-side column.  On success x holds the unique
// solution.  Destroys M.  rank_deficient means some unknown never got a
// pivot; inconsistent means a surplus equation contradicts the rest.
SolveReport solve_augmented(PlaneMat& M, size_t unknowns, std::vector<uint32_t>& x);

// Row rank via the same elimination.  Destroys M.
size_t gf_rank(PlaneMat& M);

}  // namespace suzuki
