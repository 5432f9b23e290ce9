#include "suzuki/curve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace suzuki {

SuzukiParams SuzukiParams::for_m(uint32_t m) {
    if (m == 0 || m > 7) throw std::invalid_argument("m must be in [1, 7]");
    SuzukiParams p;
    p.m = m;
    p.q0 = uint64_t(1) << m;
    p.q = uint64_t(1) << (2 * m + 1);
    p.genus = p.q0 * (p.q - 1);
    p.pole_orders[0] = p.q;
    p.pole_orders[1] = p.q + p.q0;
    p.pole_orders[2] = p.q + 2 * p.q0;
    p.pole_orders[3] = p.q + 2 * p.q0 + 1;
    p.n1 = p.q * p.q + 1;
    p.n4 = p.rational_points(4);
    p.deg_e = p.n4 - p.n1;
    return p;
}

uint64_t SuzukiParams::rational_points(uint32_t j) const {
    if (j == 0 || j > 4) throw std::invalid_argument("j must be in [1, 4]");
    int64_t s_prev = 2, s_cur = -2 * int64_t(q0);
    for (uint32_t i = 1; i < j; ++i) {
        const int64_t s_next = -2 * int64_t(q0) * s_cur - int64_t(q) * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    uint64_t qj = 1;
    for (uint32_t i = 0; i < j; ++i) qj *= q;
    return uint64_t(int64_t(qj) + 1 - int64_t(genus) * s_cur);
}

uint64_t SuzukiParams::splitting_count() const { return q * q * q + 2 * genus * q; }

uint64_t SuzukiParams::pole_order(uint64_t a, uint64_t b, uint64_t c, uint64_t d,
                                  uint64_t r) const {
    return a * pole_orders[0] + b * pole_orders[1] + c * pole_orders[2] + d * pole_orders[3] +
           r * q * q;
}

namespace {

const FieldCtx& field_of(const SuzukiCurve& cv, uint32_t j) {
    if (j == 1) return cv.fq();
    if (j == 4) return cv.fq4();
    throw std::invalid_argument("explicit point operations support j=1 and j=4 only");
}

bool point_less(const CurvePoint& a, const CurvePoint& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Dense polynomials over F_2, bit i of word i/64 holding the coefficient
// of X^i.  Enough for the Euclidean gcd below; nothing else needs them.
using BitPoly = std::vector<uint64_t>;

int64_t bp_degree(const BitPoly& p) {
    for (size_t w = p.size(); w-- > 0;)
        if (p[w]) return int64_t(w) * 64 + (63 - std::countl_zero(p[w]));
    return -1;
}

void bp_set(BitPoly& p, uint64_t e) {
    const size_t w = size_t(e / 64);
    if (w >= p.size()) p.resize(w + 1, 0);
    p[w] ^= uint64_t(1) << (e % 64);
}

// a ^= b << s
void bp_xor_shifted(BitPoly& a, const BitPoly& b, uint64_t s) {
    const size_t wq = size_t(s / 64), r = size_t(s % 64);
    const int64_t db = bp_degree(b);
    const size_t need = size_t((uint64_t(db) + s) / 64) + 1;
    if (a.size() < need) a.resize(need, 0);
    const size_t nb = size_t(db / 64) + 1;
    if (r == 0) {
        for (size_t w = 0; w < nb; ++w) a[w + wq] ^= b[w];
    } else {
        for (size_t w = 0; w < nb; ++w) {
            a[w + wq] ^= b[w] << r;
            a[w + wq + 1] ^= b[w] >> (64 - r);
        }
    }
}

BitPoly bp_gcd(BitPoly a, BitPoly b) {
    while (true) {
        const int64_t db = bp_degree(b);
        if (db < 0) return a;
        for (int64_t da = bp_degree(a); da >= db; da = bp_degree(a))
            bp_xor_shifted(a, b, uint64_t(da - db));
        std::swap(a, b);
    }
}

}  // namespace

SuzukiCurve::SuzukiCurve(uint32_t m, uint32_t table_budget) : p_(SuzukiParams::for_m(m)) {
    const uint32_t e1 = 2 * m + 1;
    const uint32_t e4 = 4 * e1;
    if (e4 > FieldCtx::kMaxDegree)
        throw UnsupportedError("explicit curve construction supports m in {1, 2}");
    fq_ = FieldCtx::make(e1, FieldCtx::default_modulus(e1), std::nullopt, table_budget);
    fq4_ = FieldCtx::make(e4, FieldCtx::default_modulus(e4),
                          SubfieldSpec{e1, FieldCtx::default_modulus(e1)}, table_budget);
}

bool SuzukiCurve::on_curve(uint32_t j, Fe x, Fe y) const {
    const FieldCtx& F = field_of(*this, j);
    F.check(x);
    F.check(y);
    const uint32_t e1 = 2 * p_.m + 1;
    const Fe lhs = F.frobenius(y, e1) ^ y;
    const Fe rhs = F.mul(F.pow(x, p_.q0), F.frobenius(x, e1) ^ x);
    return lhs == rhs;
}

const std::vector<CurvePoint>& SuzukiCurve::points(uint32_t j) const {
    if (j == 1) {
        std::call_once(once1_, [&] {
            std::vector<CurvePoint> pts;
            pts.reserve(p_.n1);
            pts.push_back(CurvePoint{true, 0, 0});
            // Over F_q the right-hand side vanishes for every x, so the affine
            // points are exactly the q^2 pairs; still check each one.
            for (Fe x = 0; x < p_.q; ++x)
                for (Fe y = 0; y < p_.q; ++y) {
                    if (!on_curve(1, x, y))
                        throw std::runtime_error("rational point enumeration is inconsistent");
                    pts.push_back(CurvePoint{false, x, y});
                }
            if (pts.size() != p_.n1) throw std::runtime_error("point count mismatch over F_q");
            pts1_ = std::move(pts);
        });
        return pts1_;
    }
    if (j == 4) {
        ensure_points4_();
        return pts4_;
    }
    throw std::invalid_argument("explicit point enumeration supports j=1 and j=4 only");
}

void SuzukiCurve::ensure_points4_() const {
    std::call_once(once4_, [&] {
        const FieldCtx& F = *fq4_;
        const uint32_t e1 = 2 * p_.m + 1;
        std::vector<CurvePoint> pts;
        pts.reserve(p_.n4);
        pts.push_back(CurvePoint{true, 0, 0});
        std::vector<Fe> split;
        split.reserve(p_.splitting_count());
        std::vector<Fe> ys;
        ys.reserve(p_.q);
        for (Fe x = 0; x < F.order(); ++x) {
            const Fe c = F.mul(F.pow(x, p_.q0), F.frobenius(x, e1) ^ x);
            const auto y0 = F.solve_artin_schreier(c);
            if (!y0) continue;
            split.push_back(x);
            ys.clear();
            for (Fe t = 0; t < p_.q; ++t) ys.push_back(*y0 ^ F.embed(t));
            std::sort(ys.begin(), ys.end());
            for (Fe y : ys) {
                if (!on_curve(4, x, y))
                    throw std::runtime_error("fibre solution fails the curve equation");
                pts.push_back(CurvePoint{false, x, y});
            }
        }
        if (pts.size() != p_.n4) throw std::runtime_error("point count mismatch over F_{q^4}");
        if (split.size() != p_.splitting_count())
            throw std::runtime_error("splitting locus count mismatch");
        supp_.reserve(p_.deg_e);
        for (const CurvePoint& pt : pts) {
            if (pt.at_infinity) continue;
            if (F.frobenius(pt.x, e1) != pt.x) supp_.push_back(pt);
        }
        if (supp_.size() != p_.deg_e)
            throw std::runtime_error("evaluation support count mismatch");
        pts4_ = std::move(pts);
        split_ = std::move(split);
    });
}

const std::vector<CurvePoint>& SuzukiCurve::supp_e() const {
    ensure_points4_();
    return supp_;
}

const std::vector<Fe>& SuzukiCurve::splitting_x() const {
    ensure_points4_();
    return split_;
}

const std::vector<uint64_t>& SuzukiCurve::splitting_poly_derivative() const {
    std::call_once(once_tp_, [&] {
        // t(X) = gcd(X^{q^4} + X, sum_{i<4} F(X)^{q^i}) with F(X) =
        // X^{q+q0} + X^{q0+1}: the second operand vanishes exactly where
        // the fibre-splitting trace condition holds, the first is the
        // squarefree product over all of F_{q^4}, so the gcd is the monic
        // squarefree product over the splitting x.  Both operands have
        // coefficients in F_2, hence so does t.
        BitPoly a, b;
        uint64_t qi = 1;
        for (uint32_t i = 0; i < 4; ++i) {
            bp_set(b, (p_.q + p_.q0) * qi);
            bp_set(b, (p_.q0 + 1) * qi);
            qi *= p_.q;
        }
        bp_set(a, qi);  // qi = q^4 after the loop
        bp_set(a, 1);
        const BitPoly t = bp_gcd(std::move(a), std::move(b));
        // Formal derivative in characteristic 2: odd-degree terms survive.
        for (size_t w = 0; w < t.size(); ++w)
            for (uint64_t bits = t[w]; bits; bits &= bits - 1) {
                const uint64_t e = w * 64 + uint64_t(std::countr_zero(bits));
                if (e % 2 == 1) split_deriv_.push_back(e - 1);
            }
    });
    return split_deriv_;
}

void SuzukiCurve::eval_xyzw(const FieldCtx& F, const CurvePoint& p, Fe out[4]) const {
    if (p.at_infinity)
        throw std::invalid_argument("coordinate functions have a pole at infinity");
    const Fe x = F.check(p.x), y = F.check(p.y);
    const uint64_t tq0 = 2 * p_.q0;
    const Fe y2q0 = F.pow(y, tq0);
    const Fe z = F.pow(x, tq0 + 1) ^ y2q0;
    const Fe w = F.mul(x, y2q0) ^ F.pow(z, tq0);
    out[0] = x;
    out[1] = y;
    out[2] = z;
    out[3] = w;
}

int64_t point_index(const std::vector<CurvePoint>& pts, const CurvePoint& p) {
    const auto it = std::lower_bound(pts.begin(), pts.end(), p, point_less);
    if (it == pts.end() || !(*it == p)) return -1;
    return it - pts.begin();
}

}  // namespace suzuki
