#include "suzuki/riemann_roch.hpp"

#include <stdexcept>

namespace suzuki {

Semigroup::Semigroup(const SuzukiParams& p, uint64_t bound) : bound_(bound) {
    member_.assign(bound + 1, 0);
    member_[0] = 1;
    for (uint64_t gen : p.pole_orders)
        for (uint64_t n = gen; n <= bound; ++n)
            if (member_[n - gen]) member_[n] = 1;
    prefix_.assign(bound + 2, 0);
    uint32_t acc = 0;
    for (uint64_t n = 0; n <= bound; ++n) {
        acc += member_[n];
        prefix_[n + 1] = acc;
        if (!member_[n]) gaps_.push_back(n);
    }
    const uint64_t largest_gap = 2 * p.q0 * (p.q - 1) - 1;
    if (bound >= largest_gap) {
        if (gaps_.size() != p.genus)
            throw std::runtime_error("semigroup gap count does not match the genus");
        if (gaps_.back() != largest_gap)
            throw std::runtime_error("largest semigroup gap mismatch");
    }
}

bool Semigroup::contains(uint64_t n) const {
    if (n > bound_) throw std::out_of_range("semigroup query beyond the tabulated bound");
    return member_[n] != 0;
}

uint64_t Semigroup::count_upto(uint64_t n) const {
    if (n > bound_) throw std::out_of_range("semigroup query beyond the tabulated bound");
    return prefix_[n + 1];
}

std::optional<Monomial> decompose(const SuzukiParams& p, uint64_t n, uint64_t ell) {
    if (ell < 1 || ell > p.ell_max()) throw std::invalid_argument("level out of range");
    if (n > ell * (p.q * p.q + 1))
        throw std::invalid_argument("pole order exceeds the level bound");
    const uint64_t q0 = p.q0, q = p.q;
    const uint64_t d = n % q0;
    if (n < d * (q + 2 * q0 + 1)) return std::nullopt;
    const uint64_t nd = (n - d * (q + 2 * q0 + 1)) / q0;
    const uint64_t b = nd % 2;
    if (nd < b * (2 * q0 + 1)) return std::nullopt;
    const uint64_t nb = (nd - b * (2 * q0 + 1)) / 2;
    const uint64_t c = nb % q0;
    if (nb < c * (q0 + 1)) return std::nullopt;
    const uint64_t nc = (nb - c * (q0 + 1)) / q0;
    const uint64_t a = nc % q;
    const uint64_t r = nc / q;
    if (r > ell) return std::nullopt;
    if (p.pole_order(a, b, c, d, r) != n)
        throw std::runtime_error("exponent recovery does not re-substitute to its input");
    return Monomial{uint32_t(a), uint32_t(b), uint32_t(c), uint32_t(d), uint32_t(r)};
}

uint64_t rr_dimension(const SuzukiParams& p, uint64_t ell) {
    if (ell < 1 || ell > p.ell_max()) throw std::invalid_argument("level out of range");
    return ell * (p.q * p.q + 1) - p.genus + 1;
}

RRBasis make_basis(const SuzukiParams& p, uint64_t ell) {
    const uint64_t want = rr_dimension(p, ell);
    const uint64_t bound = ell * (p.q * p.q + 1);
    RRBasis basis;
    basis.ell = ell;
    basis.elems.reserve(want);
    for (uint64_t n = 0; n <= bound; ++n) {
        const auto sprime = decompose(p, n, ell);
        if (!sprime) continue;
        Monomial s = *sprime;
        s.r = uint32_t(ell - s.r);  // numerator power of x^q+x -> denominator power
        basis.elems.push_back(BasisElement{n, s});
    }
    if (basis.elems.size() != want)
        throw std::runtime_error("basis size disagrees with the dimension formula");
    const Semigroup sg(p, bound);
    if (sg.count_upto(bound) != want)
        throw std::runtime_error("basis size disagrees with the semigroup count");
    return basis;
}

Fe eval_monomial(const SuzukiCurve& curve, const Monomial& s_form, const CurvePoint& p) {
    if (p.at_infinity) throw std::invalid_argument("monomials have a pole at infinity");
    const FieldCtx& F = curve.fq4();
    const uint32_t e1 = 2 * curve.params().m + 1;
    const Fe xq = F.frobenius(F.check(p.x), e1);
    if (xq == p.x) throw std::invalid_argument("monomial evaluation requires x outside F_q");
    Fe xyzw[4];
    curve.eval_xyzw(F, p, xyzw);
    Fe v = F.pow(xyzw[0], s_form.a);
    v = F.mul(v, F.pow(xyzw[1], s_form.b));
    v = F.mul(v, F.pow(xyzw[2], s_form.c));
    v = F.mul(v, F.pow(xyzw[3], s_form.d));
    return F.mul(v, F.pow(F.inv(xq ^ p.x), s_form.r));
}

}  // namespace suzuki
