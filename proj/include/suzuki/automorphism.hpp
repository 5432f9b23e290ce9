#pragma once
// The affine automorphisms of the Suzuki curve that fix the point at
// infinity: with a, b, c in F_q, c != 0,
//
//     (x, y) -> (c (x + a), c^(q0+1) (y + a^q0 x + b)).
//
// They form a group of order q^2 (q - 1), permute the F_q-rational points
// among themselves and the F_{q^4}-points that are not F_q-rational among
// themselves, hence permute codeword coordinates of every C(m, ell).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "suzuki/code.hpp"
#include "suzuki/curve.hpp"

namespace suzuki {

struct AffineAut {
    Fe a = 0, b = 0, c = 1;  // F_q values, c nonzero

    friend bool operator==(const AffineAut&, const AffineAut&) = default;
};

// Uniform a, b and uniform nonzero c, drawn from rng.
AffineAut random_aut(const FieldCtx& fq, std::mt19937_64& rng);

// Group law: compose(outer, inner) applies inner first.
AffineAut compose(const SuzukiCurve& curve, const AffineAut& outer, const AffineAut& inner);
AffineAut inverse_aut(const SuzukiCurve& curve, const AffineAut& s);

// Image of a point; j selects the field (1 for F_q, 4 for F_{q^4}, where the
// parameters act through the subfield embedding).  Infinity is fixed.
CurvePoint apply_aut(const SuzukiCurve& curve, const AffineAut& s, const CurvePoint& p, uint32_t j);

// Samples random points of supp(E) and verifies their images stay on the
// curve and outside the F_q-rational locus.
bool certify_on_curve(const SuzukiCurve& curve, const AffineAut& s, std::mt19937_64& rng,
                      size_t trials);

// perm[i] = index of the image of pts[i] within pts.  Throws
// std::runtime_error if some image is missing (the set is not stabilized).
std::vector<uint32_t> point_permutation(const SuzukiCurve& curve, const AffineAut& s,
                                        const std::vector<CurvePoint>& pts, uint32_t j);

struct AutReport {
    uint64_t auts = 0;
    uint64_t words = 0;
    uint64_t failures = 0;
    std::string first_failure;
    bool pass = false;
};

// For `auts` random automorphisms: checks the F_q-points and supp(E) are both
// stabilized, then checks `words_per_aut` random codewords still pass the
// parity checks after coordinate permutation.
AutReport invariance_check(const Code& code, uint64_t auts, uint64_t words_per_aut,
                           uint64_t seed);

}  // namespace suzuki
