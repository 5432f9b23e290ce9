#pragma once
// Explicit bases of the Riemann-Roch spaces attached to the Suzuki curve.
//
// D is the sum of the F_q-rational points, deg D = q^2 + 1.  For a level
// 1 <= ell <= q^2 - 1, L(ell D) has the monomial basis
//
//     x^a y^b z^c w^d / (x^q + x)^r        ("S form", r <= ell)
//
// and multiplying through by (x^q + x)^ell turns it into the basis
//
//     x^a y^b z^c w^d (x^q + x)^r'         ("S' form", r' = ell - r)
//
// of L(ell (q^2+1) P_inf), whose elements have pairwise distinct pole orders
// at infinity.  Those pole orders fill exactly the non-gaps of the Weierstrass
// semigroup generated by the pole orders of x, y, z, w, which is what the
// decompose() cascade inverts.

#include <cstdint>
#include <optional>
#include <vector>

#include "suzuki/curve.hpp"

namespace suzuki {

// Exponent tuple.  Ranges: a <= q-1, b <= 1, c <= q0-1, d <= q0-1, r <= ell.
// Whether r counts denominator powers (S form) or numerator powers (S' form)
// is part of each function's contract.
struct Monomial {
    uint32_t a = 0, b = 0, c = 0, d = 0, r = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Numerical semigroup generated by the four pole orders, tabulated up to a
// bound by dynamic programming.
class Semigroup {
  public:
    Semigroup(const SuzukiParams& p, uint64_t bound);

    uint64_t bound() const { return bound_; }
    bool contains(uint64_t n) const;
    // Number of semigroup members <= n (n <= bound).
    uint64_t count_upto(uint64_t n) const;
    // All gaps; there are exactly genus of them and the largest is
    // 2 q0 (q - 1) - 1, both of which the constructor asserts.
    const std::vector<uint64_t>& gaps() const { return gaps_; }

  private:
    uint64_t bound_;
    std::vector<uint8_t> member_;
    std::vector<uint32_t> prefix_;
    std::vector<uint64_t> gaps_;
};

// Writes n as a' q + b' (q+q0) + c' (q+2q0) + d' (q+2q0+1) + r q^2 with the
// basis exponent ranges and r <= ell, by peeling residues smallest-weight
// first (mod q0, mod 2, mod q0, mod q).  Returns the S'-form tuple, or empty
// when n is a semigroup gap or needs r > ell.  Succeeds for every semigroup
// member n <= ell (q^2 + 1); the result re-substitutes to n exactly.
// Preconditions: 1 <= ell <= q^2 - 1 and n <= ell (q^2 + 1).
std::optional<Monomial> decompose(const SuzukiParams& p, uint64_t n, uint64_t ell);

// dim L(ell D) = ell (q^2 + 1) - genus + 1  (valid for 2g - 2 < deg).
uint64_t rr_dimension(const SuzukiParams& p, uint64_t ell);

struct BasisElement {
    uint64_t pole = 0;  // pole order of the S'-form partner at infinity
    Monomial mono;      // S form (r = denominator exponent)
};

struct RRBasis {
    uint64_t ell = 0;
    std::vector<BasisElement> elems;  // ascending by pole
};

// Basis of L(ell D), one element per semigroup member n <= ell (q^2 + 1),
// ordered by ascending S'-form pole order.  Size is checked against both
// rr_dimension and the semigroup count.
RRBasis make_basis(const SuzukiParams& p, uint64_t ell);

// Value of an S-form monomial at an affine F_{q^4}-point whose x lies outside
// F_q (so the denominator x^q + x cannot vanish).  Throws
// std::invalid_argument otherwise.
Fe eval_monomial(const SuzukiCurve& curve, const Monomial& s_form, const CurvePoint& p);

}  // namespace suzuki
