// suzuki-cli: command-line front end over the C API in suzuki.h.
//
// Subcommands: params, points, basis, genmat, encode, decode-erasures,
// dual-verify, aut-check, selftest.  Identical (command, options, seed)
// invocations produce byte-identical output.

#include <suzuki.h>

#include <cerrno>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

int g_exit = 0;

[[noreturn]] void die(int rc) {
    std::fprintf(stderr, "error: %s: %s\n", sz_status_name(rc), sz_last_error_message());
    std::exit(1);
}

[[noreturn]] void die_msg(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(1);
}

void check(int rc) {
    if (rc != SZ_OK) die(rc);
}

struct Common {
    uint32_t m = 1;
    uint64_t seed = 1;
    bool json = false;
    std::string out_path;
    uint32_t table_budget = 0;  // 0 = library default
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--m", c.m, "Curve parameter m (q0 = 2^m, q = 2 q0^2)")
        ->check(CLI::Range(1, 7));
    cmd->add_option("--seed", c.seed, "Seed for every randomized step");
    cmd->add_flag("--json", c.json, "Emit JSON (schema 1) instead of text");
    cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--table-budget", c.table_budget,
                    "Max field degree built with log tables (0 = library default)")
        ->envname("SUZUKI_TABLE_BUDGET");
}

void write_output(const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) die_msg("cannot open " + c.out_path + " for writing");
    f.write(text.data(), std::streamsize(text.size()));
    if (!f) die_msg("short write to " + c.out_path);
}

// Rate with four decimals, truncated toward zero; matches the library rendering.
std::string rate4(double rate) {
    const long long v = (long long)(rate * 10000.0 + 1e-9);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%04lld", v / 10000, v % 10000);
    return buf;
}

std::string fe_hex(uint64_t v, uint32_t degree) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*llx", int((degree + 3) / 4), (unsigned long long)v);
    return buf;
}

uint64_t parse_sym(const std::string& s, uint32_t degree) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 16);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE)
        die_msg("bad hex symbol: '" + s + "'");
    if (degree < 64 && (v >> degree) != 0)
        die_msg("symbol '" + s + "' has bits beyond the field degree");
    return v;
}

// Non-empty, non-comment lines of the file (or stdin when path is empty),
// with surrounding whitespace stripped.
std::vector<std::string> read_symbol_lines(const std::string& path) {
    std::ifstream f;
    std::istream* in = &std::cin;
    if (!path.empty()) {
        f.open(path);
        if (!f) die_msg("cannot open " + path);
        in = &f;
    }
    std::vector<std::string> lines;
    std::string s;
    while (std::getline(*in, s)) {
        const size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const size_t e = s.find_last_not_of(" \t\r");
        s = s.substr(b, e - b + 1);
        if (s.empty() || s[0] == '#') continue;
        lines.push_back(s);
    }
    return lines;
}

struct Curve {
    sz_curve* h = nullptr;
    explicit Curve(const Common& c) { check(sz_curve_create(c.m, c.table_budget, &h)); }
    ~Curve() { sz_curve_destroy(h); }
    Curve(const Curve&) = delete;
    Curve& operator=(const Curve&) = delete;
};

struct CodeH {
    sz_code* h = nullptr;
    CodeH(Curve& cv, uint64_t ell, uint32_t flags) {
        check(sz_code_create(cv.h, ell, flags, &h));
    }
    ~CodeH() { sz_code_destroy(h); }
    CodeH(const CodeH&) = delete;
    CodeH& operator=(const CodeH&) = delete;
};

uint32_t field_degree(Curve& cv, uint32_t which) {
    uint32_t deg = 0;
    check(sz_curve_field_info(cv.h, which, &deg, nullptr, nullptr));
    return deg;
}

uint64_t field_modulus(Curve& cv, uint32_t which) {
    uint64_t mod = 0;
    check(sz_curve_field_info(cv.h, which, nullptr, &mod, nullptr));
    return mod;
}

// ------------------------------------------------------------------ params

void cmd_params(const Common& c, uint64_t ell) {
    sz_params_info pi;
    check(sz_params(c.m, &pi));
    sz_code_info ci;
    check(sz_code_params(c.m, ell, &ci));

    std::string out;
    if (c.json) {
        json j{{"schema", 1},
               {"m", c.m},
               {"q0", pi.q0},
               {"q", pi.q},
               {"genus", pi.genus},
               {"n1", pi.points[1]},
               {"n4", pi.points[4]},
               {"ell", ell},
               {"n", ci.n},
               {"k", ci.k},
               {"dstar", ci.dstar},
               {"t", ci.t},
               {"rate", ci.rate},
               {"rate_str", rate4(ci.rate)},
               {"dual_level", ci.dual_level < 0 ? json(nullptr) : json(ci.dual_level)},
               {"isodual_level", ci.isodual_level},
               {"is_isodual", ci.is_isodual != 0},
               {"iso_orthogonal", ci.iso_orthogonal != 0}};
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        auto row = [&os](const char* key, const std::string& val) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%-15s %s\n", key, val.c_str());
            os << buf;
        };
        row("m", std::to_string(c.m));
        row("q0", std::to_string(pi.q0));
        row("q", std::to_string(pi.q));
        row("genus", std::to_string(pi.genus));
        row("n1", std::to_string(pi.points[1]));
        row("n4", std::to_string(pi.points[4]));
        row("ell", std::to_string(ell));
        row("n", std::to_string(ci.n));
        row("k", std::to_string(ci.k));
        row("dstar", std::to_string(ci.dstar));
        row("t", std::to_string(ci.t));
        row("rate", rate4(ci.rate));
        row("dual_level", ci.dual_level < 0 ? "-" : std::to_string(ci.dual_level));
        row("isodual_level", std::to_string(ci.isodual_level));
        row("is_isodual", ci.is_isodual ? "yes" : "no");
        row("iso_orthogonal", ci.iso_orthogonal ? "yes" : "no");
        out = os.str();
    }
    write_output(c, out);
}

// ------------------------------------------------------------------ points

void cmd_points(const Common& c, uint32_t jsel) {
    sz_params_info pi;
    check(sz_params(c.m, &pi));
    Curve cv(c);
    const uint32_t deg = field_degree(cv, jsel);
    const uint64_t mod = field_modulus(cv, jsel);
    uint64_t count = 0;
    check(sz_curve_point_count(cv.h, jsel, &count));

    std::string out;
    if (c.json) {
        json pts = json::array();
        for (uint64_t i = 0; i < count; ++i) {
            int inf = 0;
            uint64_t x = 0, y = 0;
            check(sz_curve_point(cv.h, jsel, i, &inf, &x, &y));
            if (inf) pts.push_back(json{{"inf", true}});
            else pts.push_back(json{{"x", fe_hex(x, deg)}, {"y", fe_hex(y, deg)}});
        }
        char modbuf[32];
        std::snprintf(modbuf, sizeof modbuf, "0x%llx", (unsigned long long)mod);
        json j{{"schema", 1}, {"m", c.m},     {"q", pi.q},        {"j", jsel},
               {"modulus", modbuf}, {"count", count}, {"points", pts}};
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        char buf[128];
        std::snprintf(buf, sizeof buf, "# m=%u q=%llu j=%u modulus=0x%llx count=%llu\n",
                      c.m, (unsigned long long)pi.q, jsel, (unsigned long long)mod,
                      (unsigned long long)count);
        os << buf;
        for (uint64_t i = 0; i < count; ++i) {
            int inf = 0;
            uint64_t x = 0, y = 0;
            check(sz_curve_point(cv.h, jsel, i, &inf, &x, &y));
            if (inf) {
                std::snprintf(buf, sizeof buf, "j=%u inf\n", jsel);
            } else {
                std::snprintf(buf, sizeof buf, "j=%u x=%s y=%s\n", jsel,
                              fe_hex(x, deg).c_str(), fe_hex(y, deg).c_str());
            }
            os << buf;
        }
        out = os.str();
    }
    write_output(c, out);
}

// ------------------------------------------------------------------ basis

void cmd_basis(const Common& c, uint64_t ell) {
    Curve cv(c);
    CodeH code(cv, ell, SZ_CODE_BASIS_ONLY);
    sz_code_info ci;
    check(sz_code_info_get(code.h, &ci));

    std::string out;
    if (c.json) {
        json monos = json::array();
        for (uint64_t j = 0; j < ci.k; ++j) {
            uint64_t pole = 0;
            uint32_t a = 0, b = 0, cc = 0, d = 0, r = 0;
            check(sz_code_basis_monomial(code.h, j, &pole, &a, &b, &cc, &d, &r));
            monos.push_back(json{{"n", pole}, {"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"r", r}});
        }
        json j{{"schema", 1}, {"m", c.m}, {"ell", ell}, {"k", ci.k}, {"monomials", monos}};
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        char buf[128];
        for (uint64_t j = 0; j < ci.k; ++j) {
            uint64_t pole = 0;
            uint32_t a = 0, b = 0, cc = 0, d = 0, r = 0;
            check(sz_code_basis_monomial(code.h, j, &pole, &a, &b, &cc, &d, &r));
            std::snprintf(buf, sizeof buf, "n=%llu a=%u b=%u c=%u d=%u r=%u\n",
                          (unsigned long long)pole, a, b, cc, d, r);
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "# k=%llu dim=%llu\n", (unsigned long long)ci.k,
                      (unsigned long long)ci.k);
        os << buf;
        out = os.str();
    }
    write_output(c, out);
}

// ------------------------------------------------------------------ genmat

void cmd_genmat(const Common& c, uint64_t ell) {
    Curve cv(c);
    CodeH code(cv, ell, 0);
    sz_code_info ci;
    check(sz_code_info_get(code.h, &ci));
    const uint32_t deg = field_degree(cv, 4);
    const uint64_t mod = field_modulus(cv, 4);
    uint64_t hash = 0;
    check(sz_code_points_hash(code.h, &hash));

    std::vector<uint64_t> row(ci.n);
    std::string out;
    if (c.json) {
        json rows = json::array();
        for (uint64_t j = 0; j < ci.k; ++j) {
            check(sz_code_generator_row(code.h, j, row.data()));
            json r = json::array();
            for (uint64_t i = 0; i < ci.n; ++i) r.push_back(fe_hex(row[i], deg));
            rows.push_back(std::move(r));
        }
        char modbuf[32], hashbuf[32];
        std::snprintf(modbuf, sizeof modbuf, "0x%llx", (unsigned long long)mod);
        std::snprintf(hashbuf, sizeof hashbuf, "%016llx", (unsigned long long)hash);
        json j{{"schema", 1}, {"m", c.m},          {"ell", ell},
               {"n", ci.n},   {"k", ci.k},         {"modulus", modbuf},
               {"points_hash", hashbuf}, {"rows", rows}};
        out = j.dump(2) + "\n";
    } else {
        std::string text;
        const size_t w = (deg + 3) / 4;
        text.reserve(128 + size_t(ci.k) * size_t(ci.n) * (w + 1));
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "# m=%u ell=%llu n=%llu k=%llu modulus=0x%llx points=%016llx\n", c.m,
                      (unsigned long long)ell, (unsigned long long)ci.n,
                      (unsigned long long)ci.k, (unsigned long long)mod,
                      (unsigned long long)hash);
        text += buf;
        for (uint64_t j = 0; j < ci.k; ++j) {
            check(sz_code_generator_row(code.h, j, row.data()));
            for (uint64_t i = 0; i < ci.n; ++i) {
                if (i) text += ' ';
                text += fe_hex(row[i], deg);
            }
            text += '\n';
        }
        out = std::move(text);
    }
    write_output(c, out);
}

// ------------------------------------------------------------------ encode

void cmd_encode(const Common& c, uint64_t ell, const std::string& in_path, bool random_msg) {
    Curve cv(c);
    CodeH code(cv, ell, 0);
    sz_code_info ci;
    check(sz_code_info_get(code.h, &ci));
    const uint32_t deg = field_degree(cv, 4);

    std::vector<uint64_t> msg(ci.k, 0);
    if (random_msg) {
        std::mt19937_64 rng(c.seed);
        const uint64_t mask = (deg >= 64) ? ~uint64_t(0) : ((uint64_t(1) << deg) - 1);
        for (auto& v : msg) v = rng() & mask;
    } else {
        const auto lines = read_symbol_lines(in_path);
        if (lines.size() != ci.k)
            die_msg("expected " + std::to_string(ci.k) + " message symbols, got " +
                    std::to_string(lines.size()));
        for (size_t i = 0; i < lines.size(); ++i) msg[i] = parse_sym(lines[i], deg);
    }

    std::vector<uint64_t> word(ci.n, 0);
    check(sz_code_encode(code.h, msg.data(), word.data()));

    std::string out;
    if (c.json) {
        json jm = json::array(), jw = json::array();
        for (auto v : msg) jm.push_back(fe_hex(v, deg));
        for (auto v : word) jw.push_back(fe_hex(v, deg));
        json j{{"schema", 1}, {"m", c.m},      {"ell", ell},
               {"k", ci.k},   {"n", ci.n},     {"message", jm},
               {"codeword", jw}};
        out = j.dump(2) + "\n";
    } else {
        std::string text;
        text.reserve(size_t(ci.n) * ((deg + 3) / 4 + 1));
        for (auto v : word) {
            text += fe_hex(v, deg);
            text += '\n';
        }
        out = std::move(text);
    }
    write_output(c, out);
}

// --------------------------------------------------------- decode-erasures

void cmd_decode(const Common& c, uint64_t ell, const std::string& in_path) {
    Curve cv(c);
    CodeH code(cv, ell, 0);
    sz_code_info ci;
    check(sz_code_info_get(code.h, &ci));
    const uint32_t deg = field_degree(cv, 4);

    const auto lines = read_symbol_lines(in_path);
    if (lines.size() != ci.n)
        die_msg("expected " + std::to_string(ci.n) + " received symbols, got " +
                std::to_string(lines.size()));
    std::vector<uint64_t> received(ci.n, 0);
    std::vector<uint8_t> erased(ci.n, 0);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i] == "?") erased[i] = 1;
        else received[i] = parse_sym(lines[i], deg);
    }

    std::vector<uint64_t> msg(ci.k, 0);
    const int rc = sz_code_decode_erasures(code.h, received.data(), erased.data(), msg.data());
    if (rc == SZ_ERR_RANK_DEFICIENT || rc == SZ_ERR_INCONSISTENT) {
        const char* status = rc == SZ_ERR_RANK_DEFICIENT ? "rank_deficient" : "inconsistent";
        std::string out;
        if (c.json) {
            json j{{"schema", 1}, {"status", status}, {"detail", sz_last_error_message()}};
            out = j.dump(2) + "\n";
        } else {
            out = std::string("status ") + status + "\n";
        }
        write_output(c, out);
        g_exit = 1;
        return;
    }
    check(rc);

    std::string out;
    if (c.json) {
        json jm = json::array();
        for (auto v : msg) jm.push_back(fe_hex(v, deg));
        json j{{"schema", 1}, {"status", "ok"}, {"message", jm}};
        out = j.dump(2) + "\n";
    } else {
        std::string text;
        for (auto v : msg) {
            text += fe_hex(v, deg);
            text += '\n';
        }
        out = std::move(text);
    }
    write_output(c, out);
}

// -------------------------------------------------------------- dual-verify

void cmd_dual_verify(const Common& c, uint64_t ell, uint64_t samples, bool full) {
    Curve cv(c);
    CodeH code(cv, ell, 0);
    sz_dual_report r;
    check(sz_code_verify_duality(code.h, samples, c.seed, full ? 1 : 0, &r));

    std::string out;
    if (c.json) {
        json j{{"schema", 1},
               {"m", c.m},
               {"ell", ell},
               {"k", r.k},
               {"kprime", r.kprime},
               {"n", r.n},
               {"dims_ok", r.dims_ok != 0},
               {"pairs_checked", r.pairs_checked},
               {"failures", r.failures},
               {"full", r.full != 0},
               {"pass", r.pass != 0}};
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "k=" << r.k << " kprime=" << r.kprime << " n=" << r.n
           << " dims_ok=" << (r.dims_ok ? "yes" : "no") << "\n"
           << "pairs_checked=" << r.pairs_checked << " failures=" << r.failures
           << " full=" << (r.full ? "yes" : "no") << "\n"
           << (r.pass ? "PASS" : "FAIL") << "\n";
        out = os.str();
    }
    write_output(c, out);
    if (!r.pass) g_exit = 1;
}

// ---------------------------------------------------------------- aut-check

void cmd_aut_check(const Common& c, uint64_t ell, uint64_t trials, uint64_t words) {
    Curve cv(c);
    CodeH code(cv, ell, 0);
    sz_aut_report r;
    check(sz_code_aut_check(code.h, trials, words, c.seed, &r));

    std::string out;
    if (c.json) {
        json j{{"schema", 1},
               {"m", c.m},
               {"ell", ell},
               {"seed", c.seed},
               {"auts", r.auts},
               {"words", r.words},
               {"failures", r.failures},
               {"first_failure", r.first_failure},
               {"pass", r.pass != 0}};
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "auts=" << r.auts << " words=" << r.words << " failures=" << r.failures << "\n";
        if (r.failures) os << "first_failure: " << r.first_failure << "\n";
        os << (r.pass ? "PASS" : "FAIL") << "\n";
        out = os.str();
    }
    write_output(c, out);
    if (!r.pass) g_exit = 1;
}

// ----------------------------------------------------------------- selftest

struct SelftestSink {
    std::vector<std::string> lines;
    bool stream = false;
};

int selftest_emit(const char* line, void* user) {
    auto* s = static_cast<SelftestSink*>(user);
    s->lines.emplace_back(line);
    if (s->stream) {
        std::fputs(line, stdout);
        std::fputc('\n', stdout);
        std::fflush(stdout);
    }
    return 0;
}

void cmd_selftest(const Common& c, bool quick, bool full_gram, bool corrupt_field) {
    SelftestSink sink;
    sink.stream = !c.json && c.out_path.empty();

    uint32_t flags = 0;
    if (quick) flags |= SZ_SELFTEST_QUICK;
    if (corrupt_field) flags |= SZ_SELFTEST_CORRUPT_FIELD;
    if (full_gram) flags |= SZ_SELFTEST_FULL_GRAM;

    const int rc = sz_selftest(c.m, c.seed, flags, selftest_emit, &sink);
    if (rc != SZ_OK && rc != SZ_ERR_SELFTEST_FAILED) die(rc);
    const bool pass = rc == SZ_OK;

    if (c.json) {
        json j{{"schema", 1},      {"m", c.m},   {"seed", c.seed},
               {"quick", quick},   {"full_gram", full_gram},
               {"lines", sink.lines}, {"pass", pass}};
        write_output(c, j.dump(2) + "\n");
    } else if (sink.stream) {
        std::printf("selftest: %s\n", pass ? "PASS" : "FAIL");
    } else {
        std::string text;
        for (const auto& l : sink.lines) {
            text += l;
            text += '\n';
        }
        text += std::string("selftest: ") + (pass ? "PASS" : "FAIL") + "\n";
        write_output(c, text);
    }
    if (!pass) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic-geometry codes on the Suzuki curve"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sz_version());

    // params
    auto common_params = std::make_shared<Common>();
    auto ell_params = std::make_shared<uint64_t>(0);
    auto* sc = app.add_subcommand("params", "Curve and code parameters in closed form");
    add_common(sc, *common_params);
    sc->add_option("--ell", *ell_params, "Code level (1 <= ell <= q^2 - 1)")->required();
    sc->callback([common_params, ell_params] { cmd_params(*common_params, *ell_params); });

    // points
    auto common_points = std::make_shared<Common>();
    auto jsel = std::make_shared<uint32_t>(4);
    sc = app.add_subcommand("points", "Enumerate rational points of the curve");
    add_common(sc, *common_points);
    sc->add_option("--j", *jsel, "Field selector: 1 = F_q, 4 = F_{q^4}")
        ->check(CLI::IsMember({1, 4}));
    sc->callback([common_points, jsel] { cmd_points(*common_points, *jsel); });

    // basis
    auto common_basis = std::make_shared<Common>();
    auto ell_basis = std::make_shared<uint64_t>(0);
    sc = app.add_subcommand("basis", "Monomial basis of the function space at a level");
    add_common(sc, *common_basis);
    sc->add_option("--ell", *ell_basis, "Code level (1 <= ell <= q^2 - 1)")->required();
    sc->callback([common_basis, ell_basis] { cmd_basis(*common_basis, *ell_basis); });

    // genmat
    auto common_genmat = std::make_shared<Common>();
    auto ell_genmat = std::make_shared<uint64_t>(0);
    sc = app.add_subcommand("genmat", "Generator matrix as hex symbols");
    add_common(sc, *common_genmat);
    sc->add_option("--ell", *ell_genmat, "Code level (1 <= ell <= q^2 - 1)")->required();
    sc->callback([common_genmat, ell_genmat] { cmd_genmat(*common_genmat, *ell_genmat); });

    // encode
    auto common_encode = std::make_shared<Common>();
    auto ell_encode = std::make_shared<uint64_t>(0);
    auto in_encode = std::make_shared<std::string>();
    auto random_msg = std::make_shared<bool>(false);
    sc = app.add_subcommand("encode", "Encode k message symbols into a codeword");
    add_common(sc, *common_encode);
    sc->add_option("--ell", *ell_encode, "Code level (1 <= ell <= q^2 - 1)")->required();
    sc->add_option("--in", *in_encode, "Message file: k hex lines (default stdin)");
    sc->add_flag("--random", *random_msg, "Encode a seeded random message instead of reading one");
    sc->callback([common_encode, ell_encode, in_encode, random_msg] {
        cmd_encode(*common_encode, *ell_encode, *in_encode, *random_msg);
    });

    // decode-erasures
    auto common_decode = std::make_shared<Common>();
    auto ell_decode = std::make_shared<uint64_t>(0);
    auto in_decode = std::make_shared<std::string>();
    sc = app.add_subcommand("decode-erasures",
                            "Recover the message from a codeword with '?' erasures");
    add_common(sc, *common_decode);
    sc->add_option("--ell", *ell_decode, "Code level (1 <= ell <= q^2 - 1)")->required();
    sc->add_option("--in", *in_decode, "Received word: n lines, hex symbol or '?' (default stdin)");
    sc->callback([common_decode, ell_decode, in_decode] {
        cmd_decode(*common_decode, *ell_decode, *in_decode);
    });

    // dual-verify
    auto common_dual = std::make_shared<Common>();
    auto ell_dual = std::make_shared<uint64_t>(0);
    auto samples = std::make_shared<uint64_t>(1000);
    auto full = std::make_shared<bool>(false);
    sc = app.add_subcommand("dual-verify",
                            "Check the scaled dual pairing on sampled basis pairs");
    add_common(sc, *common_dual);
    sc->add_option("--ell", *ell_dual, "Code level (2g - 1 <= ell <= q^2 - 1)")->required();
    sc->add_option("--samples", *samples, "Number of random basis pairs");
    sc->add_flag("--full", *full, "Check every basis pair instead of sampling");
    sc->callback([common_dual, ell_dual, samples, full] {
        cmd_dual_verify(*common_dual, *ell_dual, *samples, *full);
    });

    // aut-check
    auto common_aut = std::make_shared<Common>();
    auto ell_aut = std::make_shared<uint64_t>(0);
    auto trials = std::make_shared<uint64_t>(10);
    auto words = std::make_shared<uint64_t>(5);
    sc = app.add_subcommand("aut-check",
                            "Verify codewords stay codewords under curve automorphisms");
    add_common(sc, *common_aut);
    sc->add_option("--ell", *ell_aut, "Code level (2g - 1 <= ell <= q^2 - 1)")->required();
    sc->add_option("--trials", *trials, "Number of random automorphisms");
    sc->add_option("--words", *words, "Random codewords per automorphism");
    sc->callback([common_aut, ell_aut, trials, words] {
        cmd_aut_check(*common_aut, *ell_aut, *trials, *words);
    });

    // selftest
    auto common_self = std::make_shared<Common>();
    auto quick = std::make_shared<bool>(false);
    auto full_gram = std::make_shared<bool>(false);
    auto corrupt = std::make_shared<bool>(false);
    sc = app.add_subcommand("selftest", "Run the built-in verification suite");
    add_common(sc, *common_self);
    sc->add_flag("--quick", *quick, "Light variants of the heavy matrix checks");
    sc->add_flag("--full-gram", *full_gram, "Upgrade duality checks to the full pairwise product");
    sc->add_flag("--corrupt-field", *corrupt,
                 "Negative control: sabotage field construction to prove the suite notices");
    sc->callback([common_self, quick, full_gram, corrupt] {
        cmd_selftest(*common_self, *quick, *full_gram, *corrupt);
    });

    CLI11_PARSE(app, argc, argv);
    return g_exit;
}
