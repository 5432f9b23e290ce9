#pragma once
// The Suzuki curve y^q + y = x^q0 (x^q + x) over GF(2), with q0 = 2^m and
// q = 2q0^2, together with its rational-point counts and point enumeration
// over F_q and F_{q^4}.
//
// Parameter formulas work for any m up to 7; point enumeration materializes
// actual field elements and is supported for m in {1, 2}.

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "suzuki/gf2e.hpp"

namespace suzuki {

// Raised when a request is well-formed but outside what this build can
// materialize (e.g. explicit point enumeration for m > 2).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuzukiParams {
    uint32_t m = 0;
    uint64_t q0 = 0;     // 2^m
    uint64_t q = 0;      // 2^(2m+1)
    uint64_t genus = 0;  // q0 (q - 1)
    // Pole orders at the point at infinity of the coordinate functions
    // x, y, z = x^(2q0+1) + y^(2q0), w = x y^(2q0) + z^(2q0).
    uint64_t pole_orders[4] = {0, 0, 0, 0};  // q, q+q0, q+2q0, q+2q0+1
    uint64_t n1 = 0;     // rational points over F_q
    uint64_t n4 = 0;     // rational points over F_{q^4}
    uint64_t deg_e = 0;  // n4 - n1: degree of the evaluation divisor

    static SuzukiParams for_m(uint32_t m);  // throws std::invalid_argument if m == 0 or m > 7

    // Number of F_{q^j}-rational points for 1 <= j <= 4, from the zeta
    // function: the numerator is (1 + 2 q0 t + q t^2)^genus, so the point
    // counts follow the integer recurrence s_j = -2 q0 s_{j-1} - q s_{j-2}.
    uint64_t rational_points(uint32_t j) const;

    // Number of x in F_{q^4} over which the fibre splits: q^3 + 2 genus q.
    uint64_t splitting_count() const;

    uint64_t ell_max() const { return q * q - 1; }

    // Pole order at infinity of x^a y^b z^c w^d (x^q + x)^r.
    uint64_t pole_order(uint64_t a, uint64_t b, uint64_t c, uint64_t d, uint64_t r) const;
};

struct CurvePoint {
    bool at_infinity = false;
    Fe x = 0;
    Fe y = 0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

class SuzukiCurve {
  public:
    // m in {1, 2}.  Builds GF(2^(2m+1)) and GF(2^(8m+4)) with the fixed
    // conventional moduli; table_budget caps the degree that gets log tables.
    explicit SuzukiCurve(uint32_t m, uint32_t table_budget = FieldCtx::kDefaultTableBudget);

    const SuzukiParams& params() const { return p_; }
    const FieldCtx& fq() const { return *fq_; }
    const FieldCtx& fq4() const { return *fq4_; }
    std::shared_ptr<const FieldCtx> fq_ptr() const { return fq_; }
    std::shared_ptr<const FieldCtx> fq4_ptr() const { return fq4_; }

    // Does (x, y) satisfy y^q + y = x^q0 (x^q + x) over F_q (j=1) or F_{q^4} (j=4)?
    bool on_curve(uint32_t j, Fe x, Fe y) const;

    // All rational points over F_q (j=1) or F_{q^4} (j=4): the point at
    // infinity first, then affine points ordered by (x, y) value, which
    // matches lexicographic order of the fixed-width hex serialization.
    // Computed once, cached; counts are checked against the zeta formulas.
    const std::vector<CurvePoint>& points(uint32_t j) const;

    // Affine F_{q^4}-points that are not F_q-rational, in (x, y) order.
    // This is the support of the evaluation divisor; its size is deg_e.
    const std::vector<CurvePoint>& supp_e() const;

    // x values in F_{q^4} whose fibre splits (trace condition), ascending.
    const std::vector<Fe>& splitting_x() const;

    // Exponents (ascending) of the formal derivative of the splitting
    // polynomial t(X) = prod over splitting x of (X - x).  Both t and t'
    // lie in F_2[X] — t is the gcd of X^{q^4} + X with the 8-term trace
    // composite sum_{i<4} (X^{(q+q0) q^i} + X^{(q0+1) q^i}), and a gcd of
    // binary polynomials is binary — so the exponent list determines t'.
    // t is squarefree, hence t'(x) != 0 at every splitting x.
    const std::vector<uint64_t>& splitting_poly_derivative() const;

    // Values of the coordinate functions x, y, z, w at an affine point over
    // the given field (fq or fq4).  Throws std::invalid_argument at infinity.
    void eval_xyzw(const FieldCtx& F, const CurvePoint& p, Fe out[4]) const;

  private:
    void ensure_points4_() const;

    SuzukiParams p_;
    std::shared_ptr<const FieldCtx> fq_;
    std::shared_ptr<const FieldCtx> fq4_;

    mutable std::once_flag once1_, once4_, once_tp_;
    mutable std::vector<CurvePoint> pts1_, pts4_, supp_;
    mutable std::vector<Fe> split_;
    mutable std::vector<uint64_t> split_deriv_;
};

// Index of p in a vector sorted the way SuzukiCurve orders points
// (infinity, if present, must be at position 0).  Returns -1 when absent.
int64_t point_index(const std::vector<CurvePoint>& pts, const CurvePoint& p);

}  // namespace suzuki
