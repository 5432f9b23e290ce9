#include "suzuki/automorphism.hpp"

#include <stdexcept>

namespace suzuki {
namespace {

void validate_aut(const FieldCtx& fq, const AffineAut& s) {
    fq.check(s.a);
    fq.check(s.b);
    fq.check(s.c);
    if (!s.c) throw std::invalid_argument("automorphism scaling must be nonzero");
}

}  // namespace

AffineAut random_aut(const FieldCtx& fq, std::mt19937_64& rng) {
    const uint64_t mask = fq.order() - 1;
    AffineAut s;
    s.a = rng() & mask;
    s.b = rng() & mask;
    do s.c = rng() & mask;
    while (!s.c);
    return s;
}

AffineAut compose(const SuzukiCurve& curve, const AffineAut& outer, const AffineAut& inner) {
    const FieldCtx& F = curve.fq();
    validate_aut(F, outer);
    validate_aut(F, inner);
    const uint64_t q0 = curve.params().q0;
    const Fe c1inv = F.inv(inner.c);
    const Fe c1invq0 = F.pow(c1inv, q0);
    AffineAut r;
    r.c = F.mul(inner.c, outer.c);
    r.a = inner.a ^ F.mul(outer.a, c1inv);
    r.b = inner.b ^ F.mul(F.mul(F.pow(outer.a, q0), inner.a), c1invq0) ^
          F.mul(outer.b, F.mul(c1invq0, c1inv));
    return r;
}

AffineAut inverse_aut(const SuzukiCurve& curve, const AffineAut& s) {
    const FieldCtx& F = curve.fq();
    validate_aut(F, s);
    const uint64_t q0 = curve.params().q0;
    AffineAut r;
    r.c = F.inv(s.c);
    r.a = F.mul(s.c, s.a);
    r.b = F.mul(F.pow(s.c, q0 + 1), s.b ^ F.pow(s.a, q0 + 1));
    return r;
}

CurvePoint apply_aut(const SuzukiCurve& curve, const AffineAut& s, const CurvePoint& p,
                     uint32_t j) {
    validate_aut(curve.fq(), s);
    if (p.at_infinity) return p;
    const SuzukiParams& pr = curve.params();
    Fe a, b, c;
    const FieldCtx* field;
    if (j == 1) {
        field = &curve.fq();
        a = s.a;
        b = s.b;
        c = s.c;
    } else if (j == 4) {
        field = &curve.fq4();
        a = field->embed(s.a);
        b = field->embed(s.b);
        c = field->embed(s.c);
    } else {
        throw std::invalid_argument("j must be 1 or 4");
    }
    const FieldCtx& F = *field;
    F.check(p.x);
    F.check(p.y);
    const Fe x2 = F.mul(c, p.x ^ a);
    const Fe y2 = F.mul(F.pow(c, pr.q0 + 1), p.y ^ F.mul(F.pow(a, pr.q0), p.x) ^ b);
    return CurvePoint{false, x2, y2};
}

bool certify_on_curve(const SuzukiCurve& curve, const AffineAut& s, std::mt19937_64& rng,
                      size_t trials) {
    const auto& supp = curve.supp_e();
    const FieldCtx& F = curve.fq4();
    const uint32_t e1 = 2 * curve.params().m + 1;
    for (size_t t = 0; t < trials; ++t) {
        const CurvePoint& p = supp[size_t(rng() % supp.size())];
        const CurvePoint img = apply_aut(curve, s, p, 4);
        if (!curve.on_curve(4, img.x, img.y)) return false;
        if (F.frobenius(img.x, e1) == img.x) return false;
    }
    return true;
}

std::vector<uint32_t> point_permutation(const SuzukiCurve& curve, const AffineAut& s,
                                        const std::vector<CurvePoint>& pts, uint32_t j) {
    std::vector<uint32_t> perm(pts.size());
    std::vector<uint8_t> seen(pts.size(), 0);
    for (size_t i = 0; i < pts.size(); ++i) {
        const int64_t idx = point_index(pts, apply_aut(curve, s, pts[i], j));
        if (idx < 0) throw std::runtime_error("automorphism image leaves the point set");
        if (seen[idx]) throw std::runtime_error("automorphism images collide");
        seen[idx] = 1;
        perm[i] = uint32_t(idx);
    }
    return perm;
}

AutReport invariance_check(const Code& code, uint64_t auts, uint64_t words_per_aut,
                           uint64_t seed) {
    AutReport rep;
    const SuzukiCurve& cv = code.curve();
    const FieldCtx& fq = cv.fq();
    const uint64_t mask = cv.fq4().order() - 1;
    std::mt19937_64 rng(seed);
    const auto& rat = cv.points(1);
    const size_t n = code.params().n, k = code.params().k;
    std::vector<Fe> msg(k), permuted(n);
    const auto note = [&](const std::string& what) {
        ++rep.failures;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };
    for (uint64_t t = 0; t < auts; ++t) {
        const AffineAut s = random_aut(fq, rng);
        const std::string tag =
            "aut a=" + fq.to_hex(s.a) + " b=" + fq.to_hex(s.b) + " c=" + fq.to_hex(s.c);
        ++rep.auts;
        std::vector<uint32_t> perm;
        try {
            (void)point_permutation(cv, s, rat, 1);
            perm = point_permutation(cv, s, code.points(), 4);
        } catch (const std::exception& ex) {
            note(tag + ": " + ex.what());
            continue;
        }
        for (uint64_t w = 0; w < words_per_aut; ++w) {
            for (Fe& v : msg) v = rng() & mask;
            const std::vector<Fe> word = code.encode(msg);
            for (size_t i = 0; i < n; ++i) permuted[perm[i]] = word[i];
            ++rep.words;
            if (!code.contains(permuted))
                note(tag + ": permuted codeword fails the parity checks");
        }
    }
    rep.pass = rep.failures == 0;
    return rep;
}

}  // namespace suzuki
