#pragma once
// Arithmetic in binary extension fields GF(2^e) for 2 <= e <= 24.
//
// Elements are uint64_t bitmasks: bit i is the coefficient of u^i, where u is a
// root of the defining modulus.  A FieldCtx owns log/antilog tables (when the
// degree fits the table budget), an optional designated subfield with an
// explicit embedding, and a precomputed GF(2) solver for Artin-Schreier
// equations y^(2^d) + y = c against that subfield.
//
// A FieldCtx is immutable after construction and safe to share across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace suzuki {

// Field element.  Valid values have no bits at positions >= degree().
using Fe = std::uint64_t;

struct SubfieldSpec {
    uint32_t degree;
    uint64_t modulus;
};

class FieldCtx {
  public:
    static constexpr uint32_t kMaxDegree = 24;
    // Degrees above the budget fall back to schoolbook polynomial arithmetic.
    static constexpr uint32_t kDefaultTableBudget = 20;
    static constexpr uint32_t kNoLog = 0xffffffffu;

    // Validates the modulus (degree, irreducibility) and builds all tables.
    // Throws std::invalid_argument on a bad modulus or subfield spec.
    static std::shared_ptr<const FieldCtx> make(uint32_t degree, uint64_t modulus,
                                                std::optional<SubfieldSpec> subfield = std::nullopt,
                                                uint32_t table_budget = kDefaultTableBudget);

    // Fixed conventional modulus for each supported degree.
    static uint64_t default_modulus(uint32_t degree);

    uint32_t degree() const { return e_; }
    uint64_t modulus() const { return mod_; }
    uint64_t order() const { return uint64_t(1) << e_; }  // number of elements
    bool has_tables() const { return !alog_.empty(); }
    Fe generator() const { return gen_; }  // multiplicative generator used for the tables

    uint32_t subfield_degree() const { return sub_ ? sub_->degree() : 0; }
    const FieldCtx* subfield() const { return sub_.get(); }

    // Throws std::invalid_argument if a has bits at positions >= degree().
    Fe check(Fe a) const;

    Fe add(Fe a, Fe b) const { return check(a) ^ check(b); }
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws std::domain_error on 0
    Fe pow(Fe a, uint64_t n) const;
    Fe frobenius(Fe a, uint32_t k) const;  // a^(2^k)

    // Table-free multiplication (shift-and-xor, then reduce).  Always available;
    // doubles as an independent cross-check of the table path.
    Fe mul_schoolbook(Fe a, Fe b) const;

    // Discrete log base generator(); requires tables, throws std::domain_error
    // on 0 and std::logic_error without tables.
    uint32_t log_of(Fe a) const;
    // generator()^i (i reduced mod order()-1); requires tables like log_of.
    Fe exp_of(uint64_t i) const;

    // --- designated subfield (present only when constructed with one) ---
    Fe embed(Fe a_sub) const;        // ring homomorphism GF(2^d) -> GF(2^e)
    bool in_subfield(Fe a) const;    // is a in the image of embed?
    Fe project(Fe a) const;          // inverse of embed; std::domain_error if absent
    Fe trace_to_subfield(Fe a) const;  // sum of a^(q^i), q = 2^d, as a subfield value
    bool trace_is_zero(Fe a) const;
    // Solves y^(2^d) + y = c via a precomputed GF(2) linear system; the full
    // solution set is the returned value plus any embedded subfield element.
    // Empty when the subfield trace of c is nonzero.
    std::optional<Fe> solve_artin_schreier(Fe c) const;

    // Lowercase hex, most significant nibble first, ceil(e/4) digits.
    std::string to_hex(Fe a) const;
    uint32_t hex_width() const { return (e_ + 3) / 4; }

  private:
    FieldCtx() = default;
    void build_tables_();
    void build_subfield_(const SubfieldSpec& spec, uint32_t table_budget);
    void build_artin_schreier_();

    uint32_t e_ = 0;
    uint64_t mod_ = 0;
    Fe gen_ = 0;
    std::vector<uint32_t> alog_;  // gen^i for i in [0, 2^e-1)
    std::vector<uint32_t> log_;   // inverse table; log_[0] = kNoLog

    std::shared_ptr<const FieldCtx> sub_;
    std::vector<Fe> embed_basis_;           // beta^i for i < subfield degree
    std::vector<Fe> embed_tab_;             // full forward table (subfield is small)
    std::unordered_map<uint64_t, Fe> proj_; // reverse lookup

    // Artin-Schreier solver state: RREF of [M | I] where column j of M holds
    // the bits of (u^j)^(2^d) + u^j.  Each row packs the reduced matrix part in
    // the low e_ bits and the transform part in the next e_ bits.
    std::vector<uint64_t> as_rows_;
    std::vector<Fe> as_cols_;
    std::vector<int32_t> as_pivcol_;
    uint32_t as_rank_ = 0;
};

// Parses the hex format produced by FieldCtx::to_hex.  Throws
// std::invalid_argument on junk.
Fe parse_hex(const std::string& s);

// FNV-1a 64-bit over a byte string; used for order-sensitive digests.
uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace suzuki
