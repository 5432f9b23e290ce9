#pragma once
// The evaluation codes C(m, ell): functions of L(ell D) evaluated at the
// F_{q^4}-points that are not F_q-rational.
//
// Parameters: n = deg E = q^4 + 2 q0 q^2 (q-1) - q^2, k = ell (q^2+1) - g + 1,
// designed distance dstar = n - ell (q^2+1).
//
// Duality: on this curve div(x^q + x) = D - (q^2+1) P_inf, and the residue
// construction for the dual of an evaluation code (differential dt/t for
// t = the splitting polynomial, whose simple roots are exactly the x-coords
// of E) gives
//
//   dual(C(m, ell)) = diag(h) . C(m, ell')   with  ell' = q^2 + 2g - 2 - ell
//   and h_i = (x_i^q + x_i)^(q^2 + 2g - 1) / t'(x_i),
//
// valid once ell >= 2g - 1 so that ell' is again in range.  The t' factor
// comes from div(dt) = div(t') + (2g-2) P_inf; t' is a nonzero constant for
// a generic root set but not here (it has 13 terms at m=1), and dropping it
// leaves sampled basis pairs with nonzero pairing sums.  The code with
// ell = q^2/2 + g - 1 is its own scaled dual ("isodual").

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suzuki/curve.hpp"
#include "suzuki/gfmatrix.hpp"
#include "suzuki/riemann_roch.hpp"

namespace suzuki {

// Thrown when materializing a matrix would exceed Code::Options::max_matrix_entries.
struct BudgetError : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct CodeParams {
    uint32_t m = 0;
    uint64_t ell = 0;
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t dstar = 0;  // designed minimum distance
    uint64_t t = 0;      // floor((dstar - 1) / 2)
    double rate = 0.0;   // k / n
};

// Closed-form parameters; no enumeration, any m accepted by SuzukiParams.
CodeParams compute_params(uint32_t m, uint64_t ell);

// Level of the scaled dual, q^2 + 2g - 2 - ell, when it lands in
// [1, q^2 - 1]; empty below ell = 2g - 1.
std::optional<uint64_t> dual_level(const SuzukiParams& p, uint64_t ell);

// The self-dual-up-to-scaling level q^2/2 + g - 1.
uint64_t isodual_level(const SuzukiParams& p);

// True when every pair drawn from the same code is orthogonal under the dual
// pairing, i.e. ell <= isodual level.
bool iso_orthogonal(const SuzukiParams& p, uint64_t ell);

// Rate formatted with four decimals, truncated toward zero (0.70089 -> "0.7008").
std::string format_rate(double rate);

enum class DecodeStatus { ok, rank_deficient, inconsistent };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    std::vector<Fe> message;  // k symbols when status == ok
    size_t rank = 0;
};

class Code {
  public:
    struct Options {
        bool with_matrix = true;
        // Guard against accidentally materializing giant matrices (any m=2
        // generator matrix blows this budget; basis-only mode still works).
        uint64_t max_matrix_entries = uint64_t(1) << 28;
    };

    Code(std::shared_ptr<const SuzukiCurve> curve, uint64_t ell);
    Code(std::shared_ptr<const SuzukiCurve> curve, uint64_t ell, Options opt);

    const SuzukiCurve& curve() const { return *curve_; }
    const CodeParams& params() const { return params_; }
    uint64_t ell() const { return params_.ell; }
    const RRBasis& basis() const { return basis_; }
    bool has_matrix() const { return has_matrix_; }

    // Evaluation points (support of E) in canonical order.
    const std::vector<CurvePoint>& points() const;
    // FNV-1a digest of the canonical point serialization; pins coordinate order.
    uint64_t points_hash() const;

    // k x n matrix G[j][i] = f_j(P_i), rows in basis order.  The row of the
    // constant function (the S-form monomial with all exponents zero) is
    // all-ones.
    const Matrix& generator() const;

    std::vector<Fe> encode(std::span<const Fe> message) const;

    // Recovers the message from a received word with erased coordinates by
    // eliminating on the column-restricted generator matrix.  Any pattern of
    // at most dstar - 1 erasures is guaranteed to succeed; beyond that the
    // result is either the unique consistent message or a rank-deficiency /
    // inconsistency report, never a silently wrong message.
    DecodeResult decode_erasures(std::span<const Fe> received,
                                 std::span<const uint8_t> erased) const;

    // Exact rank of G by elimination.
    uint64_t rank() const;

    // --- dual pairing (requires ell >= 2g - 1; throws std::domain_error below) ---
    uint64_t dual_ell() const;
    const std::vector<Fe>& dual_scaling() const;  // h_i as in the header comment
    const RRBasis& dual_basis() const;
    // Parity-check matrix H[j][i] = g_j(P_i) h_i for g_j in the dual basis.
    const Matrix& dual_checks() const;
    // Membership test: word is in the code iff all k' = n - k checks vanish.
    bool contains(std::span<const Fe> word) const;

  private:
    void build_matrix_();
    void ensure_dual_() const;

    std::shared_ptr<const SuzukiCurve> curve_;
    CodeParams params_;
    RRBasis basis_;
    bool has_matrix_ = false;
    Matrix g_;

    struct Dual {
        uint64_t ell = 0;
        std::vector<Fe> h;
        RRBasis basis;
        Matrix checks;
    };
    mutable std::once_flag dual_once_;
    mutable std::unique_ptr<Dual> dual_;
};

struct DualVerifyReport {
    uint64_t k = 0, kprime = 0, n = 0;
    bool dims_ok = false;
    uint64_t pairs_checked = 0;
    uint64_t failures = 0;
    bool full = false;
    bool pass = false;
};

// Checks k + k' = n and that sampled (or, with full=true, all) pairs
// (f, g) in basis(ell) x basis(ell') satisfy sum_i f(P_i) g(P_i) h_i = 0.
DualVerifyReport verify_duality(const Code& code, uint64_t samples, uint64_t seed, bool full);

}  // namespace suzuki
