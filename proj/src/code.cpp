#include "suzuki/code.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>

namespace suzuki {

CodeParams compute_params(uint32_t m, uint64_t ell) {
    const SuzukiParams p = SuzukiParams::for_m(m);
    if (ell < 1 || ell > p.ell_max())
        throw std::invalid_argument("level must be in [1, q^2 - 1]");
    CodeParams cp;
    cp.m = m;
    cp.ell = ell;
    cp.n = p.deg_e;
    cp.k = rr_dimension(p, ell);
    cp.dstar = cp.n - ell * (p.q * p.q + 1);
    cp.t = (cp.dstar - 1) / 2;
    cp.rate = double(cp.k) / double(cp.n);
    return cp;
}

std::optional<uint64_t> dual_level(const SuzukiParams& p, uint64_t ell) {
    if (ell < 1 || ell > p.ell_max()) throw std::invalid_argument("level out of range");
    const uint64_t lp = p.q * p.q + 2 * p.genus - 2 - ell;
    if (lp > p.ell_max()) return std::nullopt;  // i.e. ell < 2g - 1
    return lp;
}

uint64_t isodual_level(const SuzukiParams& p) { return p.q * p.q / 2 + p.genus - 1; }

bool iso_orthogonal(const SuzukiParams& p, uint64_t ell) {
    if (ell < 1 || ell > p.ell_max()) throw std::invalid_argument("level out of range");
    return ell <= isodual_level(p);
}

std::string format_rate(double rate) {
    const auto scaled = int64_t(rate * 10000.0 + 1e-9);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%lld.%04lld", (long long)(scaled / 10000),
                  (long long)(scaled % 10000));
    return buf;
}

namespace {

// Per-point discrete logs of the coordinate functions and of 1/(x^q+x);
// kNone marks a zero value (only z and w can vanish on the support).
struct PointLogs {
    static constexpr uint64_t kNone = ~uint64_t(0);
    uint64_t x, y, z, w, uinv;
};

std::vector<PointLogs> point_logs(const SuzukiCurve& cv) {
    const FieldCtx& F = cv.fq4();
    const uint32_t e1 = 2 * cv.params().m + 1;
    const auto& pts = cv.supp_e();
    std::vector<PointLogs> lg(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        Fe xyzw[4];
        cv.eval_xyzw(F, pts[i], xyzw);
        const Fe u = F.frobenius(xyzw[0], e1) ^ xyzw[0];
        lg[i].x = F.log_of(xyzw[0]);  // x != 0 off the rational locus
        lg[i].y = F.log_of(xyzw[1]);  // y = 0 would force x^q + x = 0
        lg[i].z = xyzw[2] ? F.log_of(xyzw[2]) : PointLogs::kNone;
        lg[i].w = xyzw[3] ? F.log_of(xyzw[3]) : PointLogs::kNone;
        lg[i].uinv = F.log_of(F.inv(u));
    }
    return lg;
}

Matrix eval_matrix(const SuzukiCurve& cv, const RRBasis& basis) {
    const FieldCtx& F = cv.fq4();
    const auto& pts = cv.supp_e();
    const size_t n = pts.size(), k = basis.elems.size();
    Matrix g(k, n);
    if (F.has_tables()) {
        const auto lg = point_logs(cv);
        for (size_t j = 0; j < k; ++j) {
            const Monomial& mo = basis.elems[j].mono;
            uint32_t* row = g.row(j);
            for (size_t i = 0; i < n; ++i) {
                const PointLogs& L = lg[i];
                if ((mo.c && L.z == PointLogs::kNone) || (mo.d && L.w == PointLogs::kNone)) {
                    row[i] = 0;
                    continue;
                }
                uint64_t ex = mo.a * L.x + mo.b * L.y + mo.r * L.uinv;
                if (mo.c) ex += mo.c * L.z;
                if (mo.d) ex += mo.d * L.w;
                row[i] = uint32_t(F.exp_of(ex));
            }
        }
    } else {
        for (size_t j = 0; j < k; ++j) {
            const Monomial& mo = basis.elems[j].mono;
            uint32_t* row = g.row(j);
            for (size_t i = 0; i < n; ++i) row[i] = uint32_t(eval_monomial(cv, mo, pts[i]));
        }
    }
    return g;
}

}  // namespace

Code::Code(std::shared_ptr<const SuzukiCurve> curve, uint64_t ell)
    : Code(std::move(curve), ell, Options{}) {}

Code::Code(std::shared_ptr<const SuzukiCurve> curve, uint64_t ell, Options opt)
    : curve_(std::move(curve)) {
    if (!curve_) throw std::invalid_argument("curve must not be null");
    params_ = compute_params(curve_->params().m, ell);
    basis_ = make_basis(curve_->params(), ell);
    if (opt.with_matrix) {
        if (params_.k * params_.n > opt.max_matrix_entries)
            throw BudgetError(
                "generator matrix exceeds the entry budget; build basis-only instead");
        build_matrix_();
        has_matrix_ = true;
    }
}

void Code::build_matrix_() { g_ = eval_matrix(*curve_, basis_); }

const std::vector<CurvePoint>& Code::points() const { return curve_->supp_e(); }

uint64_t Code::points_hash() const {
    const FieldCtx& F = curve_->fq4();
    uint64_t h = 0xcbf29ce484222325ull;
    std::string line;
    for (const CurvePoint& pt : points()) {
        line = F.to_hex(pt.x);
        line += ',';
        line += F.to_hex(pt.y);
        line += '\n';
        h = fnv1a64(line.data(), line.size(), h);
    }
    return h;
}

const Matrix& Code::generator() const {
    if (!has_matrix_) throw std::logic_error("code was built without its generator matrix");
    return g_;
}

std::vector<Fe> Code::encode(std::span<const Fe> message) const {
    const Matrix& G = generator();
    if (message.size() != params_.k) throw std::invalid_argument("message must have k symbols");
    const FieldCtx& F = curve_->fq4();
    for (Fe s : message) F.check(s);
    std::vector<Fe> out(params_.n, 0);
    for (size_t j = 0; j < params_.k; ++j) {
        const Fe mj = message[j];
        if (!mj) continue;
        const uint32_t* row = G.row(j);
        if (mj == 1) {
            for (size_t i = 0; i < params_.n; ++i) out[i] ^= row[i];
        } else {
            for (size_t i = 0; i < params_.n; ++i)
                if (row[i]) out[i] ^= F.mul(mj, row[i]);
        }
    }
    return out;
}

DecodeResult Code::decode_erasures(std::span<const Fe> received,
                                   std::span<const uint8_t> erased) const {
    const Matrix& G = generator();
    if (received.size() != params_.n || erased.size() != params_.n)
        throw std::invalid_argument("received word and erasure mask must have n entries");
    const FieldCtx& F = curve_->fq4();
    const size_t k = params_.k;
    size_t kept = 0;
    for (size_t i = 0; i < params_.n; ++i)
        if (!erased[i]) ++kept;
    PlaneMat M(F, kept, k + 1);
    size_t r = 0;
    for (size_t i = 0; i < params_.n; ++i) {
        if (erased[i]) continue;
        F.check(received[i]);
        for (size_t j = 0; j < k; ++j) {
            const uint32_t v = G.at(j, i);
            if (v) M.set(r, j, v);
        }
        if (received[i]) M.set(r, k, uint32_t(received[i]));
        ++r;
    }
    std::vector<uint32_t> x;
    const SolveReport rep = solve_augmented(M, k, x);
    DecodeResult res;
    res.rank = rep.rank;
    switch (rep.status) {
        case SolveStatus::ok: res.status = DecodeStatus::ok; break;
        case SolveStatus::rank_deficient: res.status = DecodeStatus::rank_deficient; break;
        case SolveStatus::inconsistent: res.status = DecodeStatus::inconsistent; break;
    }
    if (rep.status == SolveStatus::ok) res.message.assign(x.begin(), x.end());
    return res;
}

uint64_t Code::rank() const {
    const Matrix& G = generator();
    PlaneMat M(curve_->fq4(), params_.k, params_.n);
    for (size_t j = 0; j < params_.k; ++j) {
        const uint32_t* row = G.row(j);
        for (size_t i = 0; i < params_.n; ++i)
            if (row[i]) M.set(j, i, row[i]);
    }
    return gf_rank(M);
}

void Code::ensure_dual_() const {
    std::call_once(dual_once_, [&] {
        const SuzukiParams& p = curve_->params();
        const auto lp = dual_level(p, params_.ell);
        if (!lp) throw std::domain_error("dual pairing requires level >= 2g - 1");
        auto d = std::make_unique<Dual>();
        d->ell = *lp;
        d->basis = make_basis(p, *lp);
        const FieldCtx& F = curve_->fq4();
        const uint32_t e1 = 2 * p.m + 1;
        const uint64_t hexp = p.q * p.q + 2 * p.genus - 1;
        const auto& tde = curve_->splitting_poly_derivative();
        const auto& pts = curve_->supp_e();
        d->h.reserve(pts.size());
        // Points are grouped by fibre, so t'(x) repeats q times in a row.
        Fe last_x = 0, last_c = 0;
        bool have_last = false;
        for (const CurvePoint& pt : pts) {
            const Fe u = F.frobenius(pt.x, e1) ^ pt.x;
            if (!have_last || pt.x != last_x) {
                Fe tp = 0;
                for (uint64_t e : tde) tp ^= F.pow(pt.x, e);
                last_x = pt.x;
                last_c = F.inv(tp);  // nonzero: t is squarefree
                have_last = true;
            }
            d->h.push_back(F.mul(F.pow(u, hexp), last_c));
        }
        if (has_matrix_) {
            d->checks = eval_matrix(*curve_, d->basis);
            for (size_t j = 0; j < d->checks.rows(); ++j) {
                uint32_t* row = d->checks.row(j);
                for (size_t i = 0; i < pts.size(); ++i)
                    row[i] = uint32_t(F.mul(row[i], d->h[i]));
            }
        }
        dual_ = std::move(d);
    });
}

uint64_t Code::dual_ell() const {
    ensure_dual_();
    return dual_->ell;
}

const std::vector<Fe>& Code::dual_scaling() const {
    ensure_dual_();
    return dual_->h;
}

const RRBasis& Code::dual_basis() const {
    ensure_dual_();
    return dual_->basis;
}

const Matrix& Code::dual_checks() const {
    ensure_dual_();
    if (dual_->checks.rows() == 0)
        throw std::logic_error("code was built without its generator matrix");
    return dual_->checks;
}

bool Code::contains(std::span<const Fe> word) const {
    const Matrix& H = dual_checks();
    if (word.size() != params_.n) throw std::invalid_argument("word must have n symbols");
    const FieldCtx& F = curve_->fq4();
    for (Fe s : word) F.check(s);
    for (size_t j = 0; j < H.rows(); ++j) {
        const uint32_t* row = H.row(j);
        uint64_t acc = 0;
        for (size_t i = 0; i < params_.n; ++i)
            if (row[i] && word[i]) acc ^= F.mul(row[i], word[i]);
        if (acc) return false;
    }
    return true;
}

DualVerifyReport verify_duality(const Code& code, uint64_t samples, uint64_t seed, bool full) {
    DualVerifyReport rep;
    const FieldCtx& F = code.curve().fq4();
    const Matrix& G = code.generator();
    const Matrix& H = code.dual_checks();
    rep.k = G.rows();
    rep.kprime = H.rows();
    rep.n = code.params().n;
    rep.dims_ok = rep.k + rep.kprime == rep.n;
    rep.full = full;
    const auto pair_ok = [&](size_t j1, size_t j2) {
        const uint32_t* f = G.row(j1);
        const uint32_t* g = H.row(j2);
        uint64_t acc = 0;
        for (size_t i = 0; i < rep.n; ++i)
            if (f[i] && g[i]) acc ^= F.mul(f[i], g[i]);
        return acc == 0;
    };
    if (full) {
        for (size_t j1 = 0; j1 < rep.k; ++j1)
            for (size_t j2 = 0; j2 < rep.kprime; ++j2) {
                ++rep.pairs_checked;
                if (!pair_ok(j1, j2)) ++rep.failures;
            }
    } else {
        std::mt19937_64 rng(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            const size_t j1 = size_t(rng() % rep.k);
            const size_t j2 = size_t(rng() % rep.kprime);
            ++rep.pairs_checked;
            if (!pair_ok(j1, j2)) ++rep.failures;
        }
    }
    rep.pass = rep.dims_ok && rep.failures == 0;
    return rep;
}

}  // namespace suzuki
