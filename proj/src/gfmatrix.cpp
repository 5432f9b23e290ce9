#include "suzuki/gfmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace suzuki {

PlaneMat::PlaneMat(const FieldCtx& F, size_t rows, size_t cols)
    : F_(&F), e_(F.degree()), rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      w_(rows * e_ * wpr_, 0) {}

uint32_t PlaneMat::get(size_t r, size_t c) const {
    const size_t wi = c >> 6;
    const uint32_t sh = uint32_t(c & 63);
    uint32_t v = 0;
    for (uint32_t p = 0; p < e_; ++p) v |= uint32_t((plane(r, p)[wi] >> sh) & 1) << p;
    return v;
}

void PlaneMat::set(size_t r, size_t c, uint32_t v) {
    const size_t wi = c >> 6;
    const uint64_t bit = uint64_t(1) << (c & 63);
    for (uint32_t p = 0; p < e_; ++p)
        if ((v >> p) & 1) plane(r, p)[wi] |= bit;
}

void PlaneMat::swap_rows(size_t r1, size_t r2) {
    if (r1 == r2) return;
    std::swap_ranges(plane(r1, 0), plane(r1, 0) + e_ * wpr_, plane(r2, 0));
}

void PlaneMat::xor_scaled_row(size_t dst, size_t src, uint32_t lambda, size_t from_word) {
    if (!lambda) return;
    for (uint32_t p = 0; p < e_; ++p) {
        uint64_t img = F_->mul(lambda, Fe(1) << p);
        const uint64_t* s = plane(src, p);
        while (img) {
            const uint32_t t = uint32_t(std::countr_zero(img));
            img &= img - 1;
            uint64_t* d = plane(dst, t);
            for (size_t wi = from_word; wi < wpr_; ++wi) d[wi] ^= s[wi];
        }
    }
}

void PlaneMat::scale_row(size_t r, uint32_t lambda, size_t from_word) {
    F_->check(lambda);
    if (lambda == 1) return;
    const size_t n = wpr_ - from_word;
    if (lambda == 0) {
        for (uint32_t p = 0; p < e_; ++p)
            std::fill(plane(r, p) + from_word, plane(r, p) + wpr_, uint64_t(0));
        return;
    }
    std::vector<uint64_t> buf(n * e_);
    for (uint32_t p = 0; p < e_; ++p) {
        std::copy(plane(r, p) + from_word, plane(r, p) + wpr_, buf.begin() + p * n);
        std::fill(plane(r, p) + from_word, plane(r, p) + wpr_, uint64_t(0));
    }
    for (uint32_t p = 0; p < e_; ++p) {
        uint64_t img = F_->mul(lambda, Fe(1) << p);
        const uint64_t* s = buf.data() + p * n;
        while (img) {
            const uint32_t t = uint32_t(std::countr_zero(img));
            img &= img - 1;
            uint64_t* d = plane(r, t) + from_word;
            for (size_t wi = 0; wi < n; ++wi) d[wi] ^= s[wi];
        }
    }
}

void PlaneMat::extract_row(size_t r, uint32_t* out) const {
    std::fill(out, out + cols_, 0u);
    for (uint32_t p = 0; p < e_; ++p) {
        const uint64_t* s = plane(r, p);
        for (size_t wi = 0; wi < wpr_; ++wi) {
            uint64_t word = s[wi];
            while (word) {
                const uint32_t bit = uint32_t(std::countr_zero(word));
                word &= word - 1;
                out[(wi << 6) + bit] |= 1u << p;
            }
        }
    }
}

SolveReport solve_augmented(PlaneMat& M, size_t unknowns, std::vector<uint32_t>& x) {
    if (M.cols() != unknowns + 1)
        throw std::invalid_argument("augmented matrix must have unknowns + 1 columns");
    const FieldCtx& F = M.field();
    const size_t rows = M.rows();
    size_t rank = 0;
    for (size_t col = 0; col < unknowns; ++col) {
        size_t piv = rank;
        while (piv < rows && M.get(piv, col) == 0) ++piv;
        if (piv == rows) return {SolveStatus::rank_deficient, rank};
        M.swap_rows(rank, piv);
        const uint32_t pv = M.get(rank, col);
        if (pv != 1) M.scale_row(rank, uint32_t(F.inv(pv)), col >> 6);
        for (size_t r2 = rank + 1; r2 < rows; ++r2) {
            const uint32_t lam = M.get(r2, col);
            if (lam) M.xor_scaled_row(r2, rank, lam, col >> 6);
        }
        ++rank;
    }
    for (size_t r2 = rank; r2 < rows; ++r2)
        if (M.get(r2, unknowns) != 0) return {SolveStatus::inconsistent, rank};
    x.assign(unknowns, 0);
    std::vector<uint32_t> rowbuf(unknowns + 1);
    for (size_t i = unknowns; i-- > 0;) {
        M.extract_row(i, rowbuf.data());
        uint64_t acc = rowbuf[unknowns];
        for (size_t j = i + 1; j < unknowns; ++j)
            if (rowbuf[j] && x[j]) acc ^= F.mul(rowbuf[j], x[j]);
        x[i] = uint32_t(acc);
    }
    return {SolveStatus::ok, rank};
}

size_t gf_rank(PlaneMat& M) {
    const FieldCtx& F = M.field();
    const size_t rows = M.rows(), cols = M.cols();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M.get(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        M.swap_rows(rank, piv);
        const Fe pvinv = F.inv(M.get(rank, col));
        for (size_t r2 = rank + 1; r2 < rows; ++r2) {
            const uint32_t lam = M.get(r2, col);
            if (lam) M.xor_scaled_row(r2, rank, uint32_t(F.mul(lam, pvinv)), col >> 6);
        }
        ++rank;
    }
    return rank;
}

}  // namespace suzuki
