#include "suzuki.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "suzuki/automorphism.hpp"
#include "suzuki/code.hpp"
#include "suzuki/curve.hpp"
#include "suzuki/gf2e.hpp"
#include "suzuki/riemann_roch.hpp"
#include "suzuki/selftest.hpp"

struct sz_curve {
    std::shared_ptr<const suzuki::SuzukiCurve> cv;
};

struct sz_code {
    std::shared_ptr<const suzuki::Code> code;
};

namespace {

thread_local std::string g_err;

int fail(int code, const char* what) {
    g_err = what ? what : "";
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(SZ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SZ_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(SZ_ERR_DOMAIN, e.what());
    } catch (const std::logic_error& e) {
        return fail(SZ_ERR_UNSUPPORTED, e.what());
    } catch (const suzuki::BudgetError& e) {
        return fail(SZ_ERR_BUDGET, e.what());
    } catch (const suzuki::UnsupportedError& e) {
        return fail(SZ_ERR_UNSUPPORTED, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(SZ_ERR_NOMEM, e.what());
    } catch (const std::exception& e) {
        return fail(SZ_ERR_INTERNAL, e.what());
    }
}

int need(const void* p) {
    return p ? SZ_OK : SZ_ERR_INVALID_ARGUMENT;
}

void fill_code_info(const suzuki::SuzukiParams& p, const suzuki::CodeParams& cp,
                    sz_code_info* out) {
    out->m = cp.m;
    out->ell = cp.ell;
    out->n = cp.n;
    out->k = cp.k;
    out->dstar = cp.dstar;
    out->t = cp.t;
    out->rate = cp.rate;
    const auto dl = suzuki::dual_level(p, cp.ell);
    out->dual_level = dl ? int64_t(*dl) : -1;
    out->isodual_level = suzuki::isodual_level(p);
    out->is_isodual = cp.ell == out->isodual_level;
    out->iso_orthogonal = suzuki::iso_orthogonal(p, cp.ell);
}

}  // namespace

extern "C" {

const char* sz_version(void) { return "1.0.0"; }

const char* sz_status_name(int status) {
    switch (status) {
        case SZ_OK: return "SZ_OK";
        case SZ_ERR_INVALID_ARGUMENT: return "SZ_ERR_INVALID_ARGUMENT";
        case SZ_ERR_OUT_OF_RANGE: return "SZ_ERR_OUT_OF_RANGE";
        case SZ_ERR_DOMAIN: return "SZ_ERR_DOMAIN";
        case SZ_ERR_UNSUPPORTED: return "SZ_ERR_UNSUPPORTED";
        case SZ_ERR_BUDGET: return "SZ_ERR_BUDGET";
        case SZ_ERR_RANK_DEFICIENT: return "SZ_ERR_RANK_DEFICIENT";
        case SZ_ERR_INCONSISTENT: return "SZ_ERR_INCONSISTENT";
        case SZ_ERR_SELFTEST_FAILED: return "SZ_ERR_SELFTEST_FAILED";
        case SZ_ERR_NOMEM: return "SZ_ERR_NOMEM";
        case SZ_ERR_INTERNAL: return "SZ_ERR_INTERNAL";
        default: return "SZ_ERR_UNKNOWN";
    }
}

const char* sz_last_error_message(void) { return g_err.c_str(); }

int sz_params(uint32_t m, sz_params_info* out) {
    if (need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "out must not be null");
    return guarded([&]() -> int {
        const suzuki::SuzukiParams p = suzuki::SuzukiParams::for_m(m);
        out->m = p.m;
        out->q0 = p.q0;
        out->q = p.q;
        out->genus = p.genus;
        for (int i = 0; i < 4; ++i) out->pole_orders[i] = p.pole_orders[i];
        out->points[0] = 0;
        for (uint32_t j = 1; j <= 4; ++j) out->points[j] = p.rational_points(j);
        out->deg_e = p.deg_e;
        out->splitting_count = p.splitting_count();
        out->ell_max = p.ell_max();
        out->isodual_level = suzuki::isodual_level(p);
        return SZ_OK;
    });
}

int sz_code_params(uint32_t m, uint64_t ell, sz_code_info* out) {
    if (need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "out must not be null");
    return guarded([&]() -> int {
        const suzuki::SuzukiParams p = suzuki::SuzukiParams::for_m(m);
        fill_code_info(p, suzuki::compute_params(m, ell), out);
        return SZ_OK;
    });
}

int sz_curve_create(uint32_t m, uint32_t table_budget_bits, sz_curve** out) {
    if (need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "out must not be null");
    *out = nullptr;
    return guarded([&]() -> int {
        const uint32_t budget =
            table_budget_bits ? table_budget_bits : suzuki::FieldCtx::kDefaultTableBudget;
        auto h = new sz_curve{std::make_shared<const suzuki::SuzukiCurve>(m, budget)};
        *out = h;
        return SZ_OK;
    });
}

void sz_curve_destroy(sz_curve* c) { delete c; }

int sz_curve_field_info(const sz_curve* c, uint32_t which, uint32_t* degree,
                        uint64_t* modulus, uint32_t* subfield_degree) {
    if (need(c)) return fail(SZ_ERR_INVALID_ARGUMENT, "curve handle must not be null");
    return guarded([&]() -> int {
        const suzuki::FieldCtx* F;
        if (which == 1) F = &c->cv->fq();
        else if (which == 4) F = &c->cv->fq4();
        else return fail(SZ_ERR_INVALID_ARGUMENT, "which must be 1 or 4");
        if (degree) *degree = F->degree();
        if (modulus) *modulus = F->modulus();
        if (subfield_degree) *subfield_degree = F->subfield_degree();
        return SZ_OK;
    });
}

int sz_curve_on_curve(const sz_curve* c, uint32_t j, uint64_t x, uint64_t y, int* on) {
    if (need(c) || need(on)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *on = c->cv->on_curve(j, x, y) ? 1 : 0;
        return SZ_OK;
    });
}

int sz_curve_point_count(sz_curve* c, uint32_t j, uint64_t* count) {
    if (need(c) || need(count)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *count = c->cv->points(j).size();
        return SZ_OK;
    });
}

int sz_curve_point(sz_curve* c, uint32_t j, uint64_t index, int* at_infinity, uint64_t* x,
                   uint64_t* y) {
    if (need(c)) return fail(SZ_ERR_INVALID_ARGUMENT, "curve handle must not be null");
    return guarded([&]() -> int {
        const auto& pts = c->cv->points(j);
        if (index >= pts.size()) throw std::out_of_range("point index beyond the point count");
        const suzuki::CurvePoint& p = pts[index];
        if (at_infinity) *at_infinity = p.at_infinity ? 1 : 0;
        if (x) *x = p.x;
        if (y) *y = p.y;
        return SZ_OK;
    });
}

int sz_curve_splitting_count(sz_curve* c, uint64_t* count) {
    if (need(c) || need(count)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *count = c->cv->splitting_x().size();
        return SZ_OK;
    });
}

int sz_code_create(sz_curve* c, uint64_t ell, uint32_t flags, sz_code** out) {
    if (need(c) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&]() -> int {
        suzuki::Code::Options opt;
        opt.with_matrix = !(flags & SZ_CODE_BASIS_ONLY);
        auto h = new sz_code{std::make_shared<const suzuki::Code>(c->cv, ell, opt)};
        *out = h;
        return SZ_OK;
    });
}

void sz_code_destroy(sz_code* k) { delete k; }

int sz_code_info_get(const sz_code* k, sz_code_info* out) {
    if (need(k) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        fill_code_info(k->code->curve().params(), k->code->params(), out);
        return SZ_OK;
    });
}

int sz_code_basis_monomial(const sz_code* k, uint64_t j, uint64_t* pole, uint32_t* a,
                           uint32_t* b, uint32_t* c, uint32_t* d, uint32_t* r) {
    if (need(k)) return fail(SZ_ERR_INVALID_ARGUMENT, "code handle must not be null");
    return guarded([&]() -> int {
        const auto& els = k->code->basis().elems;
        if (j >= els.size()) throw std::out_of_range("basis index beyond the dimension");
        const suzuki::BasisElement& el = els[j];
        if (pole) *pole = el.pole;
        if (a) *a = el.mono.a;
        if (b) *b = el.mono.b;
        if (c) *c = el.mono.c;
        if (d) *d = el.mono.d;
        if (r) *r = el.mono.r;
        return SZ_OK;
    });
}

int sz_code_point(const sz_code* k, uint64_t i, uint64_t* x, uint64_t* y) {
    if (need(k)) return fail(SZ_ERR_INVALID_ARGUMENT, "code handle must not be null");
    return guarded([&]() -> int {
        const auto& pts = k->code->points();
        if (i >= pts.size()) throw std::out_of_range("point index beyond the length");
        if (x) *x = pts[i].x;
        if (y) *y = pts[i].y;
        return SZ_OK;
    });
}

int sz_code_points_hash(const sz_code* k, uint64_t* hash) {
    if (need(k) || need(hash)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *hash = k->code->points_hash();
        return SZ_OK;
    });
}

int sz_code_generator_row(const sz_code* k, uint64_t j, uint64_t* out) {
    if (need(k) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const suzuki::Matrix& g = k->code->generator();
        if (j >= g.rows()) throw std::out_of_range("row index beyond the dimension");
        const uint32_t* row = g.row(j);
        for (size_t i = 0; i < g.cols(); ++i) out[i] = row[i];
        return SZ_OK;
    });
}

int sz_code_encode(const sz_code* k, const uint64_t* msg, uint64_t* out) {
    if (need(k) || need(msg) || need(out))
        return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const auto word =
            k->code->encode(std::span<const suzuki::Fe>(msg, k->code->params().k));
        for (size_t i = 0; i < word.size(); ++i) out[i] = word[i];
        return SZ_OK;
    });
}

int sz_code_decode_erasures(const sz_code* k, const uint64_t* received,
                            const uint8_t* erased, uint64_t* msg_out) {
    if (need(k) || need(received) || need(erased) || need(msg_out))
        return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const uint64_t n = k->code->params().n;
        const suzuki::DecodeResult res = k->code->decode_erasures(
            std::span<const suzuki::Fe>(received, n), std::span<const uint8_t>(erased, n));
        switch (res.status) {
            case suzuki::DecodeStatus::rank_deficient:
                return fail(SZ_ERR_RANK_DEFICIENT,
                            "erasure pattern leaves the system underdetermined");
            case suzuki::DecodeStatus::inconsistent:
                return fail(SZ_ERR_INCONSISTENT, "received word matches no codeword");
            case suzuki::DecodeStatus::ok: break;
        }
        for (size_t i = 0; i < res.message.size(); ++i) msg_out[i] = res.message[i];
        return SZ_OK;
    });
}

int sz_code_rank(const sz_code* k, uint64_t* rank) {
    if (need(k) || need(rank)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *rank = k->code->rank();
        return SZ_OK;
    });
}

int sz_code_dual_scaling(sz_code* k, uint64_t* out) {
    if (need(k) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const auto& h = k->code->dual_scaling();
        for (size_t i = 0; i < h.size(); ++i) out[i] = h[i];
        return SZ_OK;
    });
}

int sz_code_contains(sz_code* k, const uint64_t* word, int* contained) {
    if (need(k) || need(word) || need(contained))
        return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        *contained = k->code->contains(
                         std::span<const suzuki::Fe>(word, k->code->params().n))
                         ? 1
                         : 0;
        return SZ_OK;
    });
}

int sz_code_verify_duality(sz_code* k, uint64_t samples, uint64_t seed, int full,
                           sz_dual_report* out) {
    if (need(k) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const suzuki::DualVerifyReport rep =
            suzuki::verify_duality(*k->code, samples, seed, full != 0);
        out->k = rep.k;
        out->kprime = rep.kprime;
        out->n = rep.n;
        out->dims_ok = rep.dims_ok;
        out->pairs_checked = rep.pairs_checked;
        out->failures = rep.failures;
        out->full = rep.full;
        out->pass = rep.pass;
        return SZ_OK;
    });
}

int sz_code_aut_check(sz_code* k, uint64_t auts, uint64_t words_per_aut, uint64_t seed,
                      sz_aut_report* out) {
    if (need(k) || need(out)) return fail(SZ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> int {
        const suzuki::AutReport rep =
            suzuki::invariance_check(*k->code, auts, words_per_aut, seed);
        out->auts = rep.auts;
        out->words = rep.words;
        out->failures = rep.failures;
        out->pass = rep.pass;
        std::strncpy(out->first_failure, rep.first_failure.c_str(),
                     sizeof out->first_failure - 1);
        out->first_failure[sizeof out->first_failure - 1] = '\0';
        return SZ_OK;
    });
}

int sz_selftest(uint32_t m, uint64_t seed, uint32_t flags, sz_line_fn emit, void* user) {
    return guarded([&]() -> int {
        suzuki::SelftestOptions opt;
        opt.m = m;
        opt.seed = seed;
        opt.quick = (flags & SZ_SELFTEST_QUICK) != 0;
        opt.corrupt_field_hook = (flags & SZ_SELFTEST_CORRUPT_FIELD) != 0;
        opt.full_gram = (flags & SZ_SELFTEST_FULL_GRAM) != 0;
        bool aborted = false;
        if (emit)
            opt.on_check = [&](const suzuki::Check& c) {
                if (emit(suzuki::format_check(c).c_str(), user)) {
                    aborted = true;
                    return false;
                }
                return true;
            };
        const auto checks = suzuki::run_selftest(opt);
        if (aborted) return fail(SZ_ERR_SELFTEST_FAILED, "selftest aborted by the caller");
        if (!suzuki::all_pass(checks)) {
            for (const auto& c : checks)
                if (!c.pass) return fail(SZ_ERR_SELFTEST_FAILED, suzuki::format_check(c).c_str());
        }
        return SZ_OK;
    });
}

}  // extern "C"
