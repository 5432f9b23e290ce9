#include "suzuki/gf2e.hpp"

#include <bit>
#include <stdexcept>

namespace suzuki {
namespace {

// --- GF(2)[x] helpers on uint64_t bitmasks (bit i = coefficient of x^i) ---

int pdeg(uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

// a * b mod `mod`; requires deg(a) < deg(mod) <= 32.
uint64_t pmulmod(uint64_t a, uint64_t b, uint64_t mod) {
    const int dm = pdeg(mod);
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) a ^= mod;
    }
    return r;
}

uint64_t pmod(uint64_t a, uint64_t b) {
    const int db = pdeg(b);
    for (int da = pdeg(a); da >= db; da = pdeg(a)) a ^= b << (da - db);
    return a;
}

uint64_t pgcd(uint64_t a, uint64_t b) {
    while (b) {
        a = pmod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin's test: p of degree e is irreducible iff x^(2^e) = x mod p and
// gcd(x^(2^(e/r)) - x, p) = 1 for every prime r dividing e.
bool irreducible(uint64_t mod) {
    const int e = pdeg(mod);
    if (e < 1 || !(mod & 1)) return false;
    const uint64_t x = 2;
    uint64_t t = x;
    for (int i = 0; i < e; ++i) t = pmulmod(t, t, mod);
    if (t != x) return false;
    for (uint64_t r : prime_factors(uint64_t(e))) {
        uint64_t s = x;
        for (uint64_t i = 0; i < uint64_t(e) / r; ++i) s = pmulmod(s, s, mod);
        if (pgcd(s ^ x, mod) != 1) return false;
    }
    return true;
}

}  // namespace

uint64_t FieldCtx::default_modulus(uint32_t degree) {
    // Conventional irreducible (in fact primitive) polynomials per degree.
    static const uint64_t tab[kMaxDegree + 1] = {
        0,        0,        0x7,      0xb,      0x13,      0x25,      0x43,
        0x89,     0x11d,    0x211,    0x409,    0x805,     0x1053,    0x201b,
        0x402b,   0x8003,   0x1100b,  0x20009,  0x40081,   0x80027,   0x100009,
        0x200005, 0x400003, 0x800021, 0x100001b};
    if (degree < 2 || degree > kMaxDegree)
        throw std::invalid_argument("field degree must be in [2, 24]");
    return tab[degree];
}

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t degree, uint64_t modulus,
                                               std::optional<SubfieldSpec> subfield,
                                               uint32_t table_budget) {
    if (degree < 2 || degree > kMaxDegree)
        throw std::invalid_argument("field degree must be in [2, 24]");
    if (pdeg(modulus) != int(degree))
        throw std::invalid_argument("modulus does not have the declared degree");
    if (!irreducible(modulus)) throw std::invalid_argument("modulus is reducible over GF(2)");
    std::shared_ptr<FieldCtx> F(new FieldCtx());
    F->e_ = degree;
    F->mod_ = modulus;
    if (degree <= table_budget) F->build_tables_();
    if (subfield) F->build_subfield_(*subfield, table_budget);
    return F;
}

Fe FieldCtx::check(Fe a) const {
    if (a >> e_) throw std::invalid_argument("element has bits outside the field");
    return a;
}

Fe FieldCtx::mul_schoolbook(Fe a, Fe b) const {
    check(a);
    check(b);
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> e_) & 1) a ^= mod_;
    }
    return r;
}

Fe FieldCtx::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    if (!a || !b) return 0;
    if (has_tables()) {
        const uint64_t n = order() - 1;
        uint64_t s = uint64_t(log_[a]) + log_[b];
        if (s >= n) s -= n;
        return alog_[s];
    }
    return mul_schoolbook(a, b);
}

Fe FieldCtx::inv(Fe a) const {
    check(a);
    if (!a) throw std::domain_error("inverse of zero");
    const uint64_t n = order() - 1;
    if (has_tables()) return alog_[(n - log_[a]) % n];
    return pow(a, order() - 2);
}

Fe FieldCtx::pow(Fe a, uint64_t n) const {
    check(a);
    if (a == 0) return n == 0 ? 1 : 0;
    const uint64_t ord = order() - 1;
    uint64_t r = n % ord;
    if (has_tables()) return alog_[(uint64_t(log_[a]) * r) % ord];
    Fe acc = 1, base = a;
    while (r) {
        if (r & 1) acc = mul_schoolbook(acc, base);
        base = mul_schoolbook(base, base);
        r >>= 1;
    }
    return acc;
}

uint32_t FieldCtx::log_of(Fe a) const {
    check(a);
    if (!has_tables()) throw std::logic_error("discrete log requires log tables");
    if (!a) throw std::domain_error("discrete log of zero");
    return log_[a];
}

Fe FieldCtx::exp_of(uint64_t i) const {
    if (!has_tables()) throw std::logic_error("generator powers require log tables");
    return alog_[i % (order() - 1)];
}

Fe FieldCtx::frobenius(Fe a, uint32_t k) const {
    check(a);
    k %= e_;
    if (a == 0 || k == 0) return a;
    const uint64_t ord = order() - 1;
    if (has_tables()) return alog_[(uint64_t(log_[a]) << k) % ord];
    Fe r = a;
    for (uint32_t i = 0; i < k; ++i) r = mul_schoolbook(r, r);
    return r;
}

void FieldCtx::build_tables_() {
    const uint64_t Q = order(), n = Q - 1;
    const auto primes = prime_factors(n);
    auto pw = [&](Fe base, uint64_t ex) {  // tables are not ready yet
        Fe acc = 1;
        while (ex) {
            if (ex & 1) acc = mul_schoolbook(acc, base);
            base = mul_schoolbook(base, base);
            ex >>= 1;
        }
        return acc;
    };
    gen_ = 0;
    for (Fe cand = 2; cand < Q; ++cand) {
        bool primitive = true;
        for (uint64_t p : primes)
            if (pw(cand, n / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen_ = cand;
            break;
        }
    }
    if (!gen_) throw std::runtime_error("no multiplicative generator found");
    alog_.resize(n);
    log_.assign(Q, kNoLog);
    Fe v = 1;
    for (uint64_t i = 0; i < n; ++i) {
        alog_[i] = uint32_t(v);
        log_[v] = uint32_t(i);
        v = mul_schoolbook(v, gen_);
    }
    if (v != 1) throw std::runtime_error("generator order check failed");
}

void FieldCtx::build_subfield_(const SubfieldSpec& spec, uint32_t table_budget) {
    if (spec.degree == 0 || spec.degree >= e_ || e_ % spec.degree != 0)
        throw std::invalid_argument("subfield degree must properly divide the field degree");
    sub_ = make(spec.degree, spec.modulus, std::nullopt, table_budget);
    const uint32_t d = spec.degree;
    const uint64_t qs = uint64_t(1) << d;

    // The subfield modulus splits in GF(2^e) because d divides e; its roots
    // live in the unique subfield of size qs.  Pick the smallest root so the
    // embedding is canonical.
    std::vector<Fe> candidates;
    candidates.push_back(0);
    if (has_tables()) {
        const uint64_t step = (order() - 1) / (qs - 1);
        for (uint64_t i = 0; i < qs - 1; ++i) candidates.push_back(alog_[i * step]);
    } else {
        for (Fe v = 1; v < order(); ++v)
            if (frobenius(v, d) == v) candidates.push_back(v);
    }
    Fe beta = 0;
    bool found = false;
    for (Fe cand : candidates) {
        Fe acc = 0;  // Horner evaluation of the subfield modulus at cand
        for (int i = int(d); i >= 0; --i) acc = mul(acc, cand) ^ ((spec.modulus >> i) & 1);
        if (acc == 0 && (!found || cand < beta)) {
            beta = cand;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("subfield modulus has no root in the field");

    embed_basis_.resize(d);
    for (uint32_t i = 0; i < d; ++i) embed_basis_[i] = pow(beta, i);
    embed_tab_.resize(qs);
    proj_.reserve(2 * qs);
    for (uint64_t a = 0; a < qs; ++a) {
        Fe v = 0;
        for (uint32_t i = 0; i < d; ++i)
            if ((a >> i) & 1) v ^= embed_basis_[i];
        embed_tab_[a] = v;
        proj_.emplace(v, Fe(a));
    }
    if (proj_.size() != qs) throw std::runtime_error("subfield embedding is not injective");
    if (qs <= 256) {  // full multiplicativity check while it is cheap
        for (uint64_t a = 0; a < qs; ++a)
            for (uint64_t b = 0; b < qs; ++b)
                if (embed_tab_[sub_->mul(a, b)] != mul(embed_tab_[a], embed_tab_[b]))
                    throw std::runtime_error("subfield embedding is not multiplicative");
    }
    build_artin_schreier_();
}

void FieldCtx::build_artin_schreier_() {
    const uint32_t d = sub_->degree();
    as_cols_.resize(e_);
    for (uint32_t j = 0; j < e_; ++j) {
        const Fe uj = Fe(1) << j;
        as_cols_[j] = frobenius(uj, d) ^ uj;
    }
    // RREF of [M | I]; row i packs M in bits [0, e) and the transform in
    // bits [e, 2e).
    std::vector<uint64_t> rows(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        uint64_t r = 0;
        for (uint32_t j = 0; j < e_; ++j) r |= ((as_cols_[j] >> i) & 1) << j;
        rows[i] = r | (uint64_t(1) << (e_ + i));
    }
    as_pivcol_.assign(e_, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < e_ && rank < e_; ++col) {
        uint32_t piv = rank;
        while (piv < e_ && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == e_) continue;
        std::swap(rows[rank], rows[piv]);
        for (uint32_t r2 = 0; r2 < e_; ++r2)
            if (r2 != rank && ((rows[r2] >> col) & 1)) rows[r2] ^= rows[rank];
        as_pivcol_[rank] = int32_t(col);
        ++rank;
    }
    as_rank_ = rank;
    as_rows_ = std::move(rows);
    // The kernel of y -> y^(2^d) + y is exactly the subfield.
    if (as_rank_ != e_ - d) throw std::runtime_error("artin-schreier map has unexpected rank");
}

Fe FieldCtx::embed(Fe a_sub) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    sub_->check(a_sub);
    return embed_tab_[a_sub];
}

bool FieldCtx::in_subfield(Fe a) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    check(a);
    return proj_.count(a) != 0;
}

Fe FieldCtx::project(Fe a) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    check(a);
    auto it = proj_.find(a);
    if (it == proj_.end()) throw std::domain_error("element is not in the designated subfield");
    return it->second;
}

Fe FieldCtx::trace_to_subfield(Fe a) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    check(a);
    const uint32_t d = sub_->degree();
    Fe t = 0, v = a;
    for (uint32_t i = 0; i < e_ / d; ++i) {
        t ^= v;
        v = frobenius(v, d);
    }
    return project(t);
}

bool FieldCtx::trace_is_zero(Fe a) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    check(a);
    const uint32_t d = sub_->degree();
    Fe t = 0, v = a;
    for (uint32_t i = 0; i < e_ / d; ++i) {
        t ^= v;
        v = frobenius(v, d);
    }
    return t == 0;
}

std::optional<Fe> FieldCtx::solve_artin_schreier(Fe c) const {
    if (!sub_) throw std::logic_error("field has no designated subfield");
    check(c);
    Fe y = 0;
    for (uint32_t i = 0; i < e_; ++i) {
        const uint64_t trow = as_rows_[i] >> e_;
        if (std::popcount(trow & c) & 1) {
            if (i < as_rank_) y |= Fe(1) << uint32_t(as_pivcol_[i]);
            else return std::nullopt;  // c is outside the image
        }
    }
    Fe back = 0;
    for (uint32_t j = 0; j < e_; ++j)
        if ((y >> j) & 1) back ^= as_cols_[j];
    if (back != c) throw std::runtime_error("artin-schreier verification failed");
    return y;
}

std::string FieldCtx::to_hex(Fe a) const {
    check(a);
    const uint32_t w = hex_width();
    std::string s(w, '0');
    for (uint32_t i = 0; i < w; ++i) s[w - 1 - i] = "0123456789abcdef"[(a >> (4 * i)) & 15];
    return s;
}

Fe parse_hex(const std::string& s) {
    if (s.empty() || s.size() > 16) throw std::invalid_argument("bad hex field element: '" + s + "'");
    Fe v = 0;
    for (char ch : s) {
        int dig;
        if (ch >= '0' && ch <= '9') dig = ch - '0';
        else if (ch >= 'a' && ch <= 'f') dig = ch - 'a' + 10;
        else throw std::invalid_argument("bad hex field element: '" + s + "'");
        v = (v << 4) | Fe(dig);
    }
    return v;
}

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace suzuki
