#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <suzuki.h>

TEST_CASE("version and status names") {
    CHECK(sz_version() != nullptr);
    CHECK(std::string(sz_status_name(SZ_OK)) == "SZ_OK");
    CHECK(std::string(sz_status_name(SZ_ERR_INVALID_ARGUMENT)) == "SZ_ERR_INVALID_ARGUMENT");
    CHECK(std::string(sz_status_name(SZ_ERR_RANK_DEFICIENT)) == "SZ_ERR_RANK_DEFICIENT");
    CHECK(sz_status_name(999) != nullptr);
}

TEST_CASE("parameter formulas through the C layer") {
    sz_params_info info;
    REQUIRE(sz_params(1, &info) == SZ_OK);
    CHECK(info.q0 == 2);
    CHECK(info.q == 8);
    CHECK(info.genus == 14);
    CHECK(info.points[1] == 65);
    CHECK(info.points[4] == 5889);
    CHECK(info.deg_e == 5824);
    CHECK(info.splitting_count == 736);
    CHECK(info.ell_max == 63);
    CHECK(info.isodual_level == 45);

    REQUIRE(sz_params(7, &info) == SZ_OK);  // formulas only, no enumeration
    CHECK(info.q == 32768);

    CHECK(sz_params(0, &info) == SZ_ERR_INVALID_ARGUMENT);
    CHECK(sz_params(8, &info) == SZ_ERR_INVALID_ARGUMENT);
    CHECK(sz_params(1, nullptr) == SZ_ERR_INVALID_ARGUMENT);
    CHECK(sz_last_error_message() != nullptr);
}

TEST_CASE("code parameter formulas and dual levels") {
    sz_code_info ci;
    REQUIRE(sz_code_params(1, 63, &ci) == SZ_OK);
    CHECK(ci.n == 5824);
    CHECK(ci.k == 4082);
    CHECK(ci.dstar == 1729);
    CHECK(ci.t == 864);
    CHECK(ci.dual_level == 27);
    CHECK(ci.is_isodual == 0);
    CHECK(ci.iso_orthogonal == 0);

    REQUIRE(sz_code_params(1, 45, &ci) == SZ_OK);
    CHECK(ci.is_isodual == 1);
    CHECK(ci.iso_orthogonal == 1);
    CHECK(ci.dual_level == 45);

    REQUIRE(sz_code_params(1, 3, &ci) == SZ_OK);
    CHECK(ci.dual_level == -1);

    REQUIRE(sz_code_params(2, 1023, &ci) == SZ_OK);
    CHECK(ci.n == 1301504);
    CHECK(ci.k == 1048452);

    CHECK(sz_code_params(1, 0, &ci) == SZ_ERR_INVALID_ARGUMENT);
    CHECK(sz_code_params(1, 64, &ci) == SZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("curve handle lifecycle and point access") {
    sz_curve* cv = nullptr;
    REQUIRE(sz_curve_create(1, 0, &cv) == SZ_OK);
    REQUIRE(cv != nullptr);

    uint32_t deg = 0, sub = 0;
    uint64_t mod = 0;
    REQUIRE(sz_curve_field_info(cv, 1, &deg, &mod, &sub) == SZ_OK);
    CHECK(deg == 3);
    CHECK(mod == 0xb);
    CHECK(sub == 0);
    REQUIRE(sz_curve_field_info(cv, 4, &deg, &mod, &sub) == SZ_OK);
    CHECK(deg == 12);
    CHECK(mod == 0x1053);
    CHECK(sub == 3);

    uint64_t count = 0;
    REQUIRE(sz_curve_point_count(cv, 1, &count) == SZ_OK);
    CHECK(count == 65);
    REQUIRE(sz_curve_point_count(cv, 4, &count) == SZ_OK);
    CHECK(count == 5889);
    REQUIRE(sz_curve_splitting_count(cv, &count) == SZ_OK);
    CHECK(count == 736);

    int inf = 0;
    uint64_t x = 1, y = 1;
    REQUIRE(sz_curve_point(cv, 4, 0, &inf, &x, &y) == SZ_OK);
    CHECK(inf == 1);
    REQUIRE(sz_curve_point(cv, 4, 5888, &inf, &x, &y) == SZ_OK);
    CHECK(inf == 0);
    int on = 0;
    REQUIRE(sz_curve_on_curve(cv, 4, x, y, &on) == SZ_OK);
    CHECK(on == 1);
    CHECK(sz_curve_point(cv, 4, 5889, &inf, &x, &y) == SZ_ERR_OUT_OF_RANGE);
    CHECK(sz_curve_point(cv, 2, 0, &inf, &x, &y) == SZ_ERR_INVALID_ARGUMENT);

    sz_curve_destroy(cv);
    sz_curve_destroy(nullptr);  // must be a no-op
}

TEST_CASE("unsupported m is mapped to its status") {
    sz_curve* cv = nullptr;
    CHECK(sz_curve_create(3, 0, &cv) == SZ_ERR_UNSUPPORTED);
    CHECK(cv == nullptr);
    CHECK(sz_curve_create(0, 0, &cv) == SZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("code handle: encode, decode, duality, membership") {
    sz_curve* cv = nullptr;
    REQUIRE(sz_curve_create(1, 0, &cv) == SZ_OK);
    sz_code* cd = nullptr;
    REQUIRE(sz_code_create(cv, 45, 0, &cd) == SZ_OK);

    sz_code_info ci;
    REQUIRE(sz_code_info_get(cd, &ci) == SZ_OK);
    CHECK(ci.k == 2912);
    CHECK(ci.n == 5824);

    uint64_t pole = 0;
    uint32_t a, b, c, d, r;
    REQUIRE(sz_code_basis_monomial(cd, 0, &pole, &a, &b, &c, &d, &r) == SZ_OK);
    CHECK(pole == 0);
    CHECK(a == 0);
    CHECK(b == 0);
    CHECK(c == 0);
    CHECK(d == 0);
    CHECK(sz_code_basis_monomial(cd, ci.k, &pole, &a, &b, &c, &d, &r) ==
          SZ_ERR_OUT_OF_RANGE);

    uint64_t hash1 = 0;
    REQUIRE(sz_code_points_hash(cd, &hash1) == SZ_OK);
    CHECK(hash1 != 0);

    std::vector<uint64_t> msg(ci.k), word(ci.n), row(ci.n), back(ci.k);
    for (size_t i = 0; i < msg.size(); ++i) msg[i] = (i * 2654435761u) & 0xfff;
    REQUIRE(sz_code_encode(cd, msg.data(), word.data()) == SZ_OK);

    // Row 0 of the generator matrix is reachable and consistent with a
    // one-hot encoding.
    REQUIRE(sz_code_generator_row(cd, 0, row.data()) == SZ_OK);
    std::vector<uint64_t> onehot(ci.k, 0), wrow(ci.n);
    onehot[0] = 1;
    REQUIRE(sz_code_encode(cd, onehot.data(), wrow.data()) == SZ_OK);
    CHECK(wrow == row);

    int contained = 0;
    REQUIRE(sz_code_contains(cd, word.data(), &contained) == SZ_OK);
    CHECK(contained == 1);
    word[7] ^= 5;
    REQUIRE(sz_code_contains(cd, word.data(), &contained) == SZ_OK);
    CHECK(contained == 0);
    word[7] ^= 5;

    // Erase a prefix and decode.
    std::vector<uint8_t> erased(ci.n, 0);
    std::vector<uint64_t> rcv = word;
    for (size_t i = 0; i < 2000; ++i) {
        erased[i] = 1;
        rcv[i] = 0;
    }
    REQUIRE(sz_code_decode_erasures(cd, rcv.data(), erased.data(), back.data()) == SZ_OK);
    CHECK(back == msg);

    // Too many erasures: rank deficiency, and the message buffer is not
    // trusted.
    std::vector<uint8_t> all_erased(ci.n, 1);
    for (size_t i = 0; i < ci.k - 1; ++i) all_erased[i] = 0;
    CHECK(sz_code_decode_erasures(cd, rcv.data(), all_erased.data(), back.data()) ==
          SZ_ERR_RANK_DEFICIENT);

    sz_dual_report rep;
    REQUIRE(sz_code_verify_duality(cd, 200, 5, 0, &rep) == SZ_OK);
    CHECK(rep.pass == 1);
    CHECK(rep.failures == 0);
    CHECK(rep.k + rep.kprime == rep.n);

    std::vector<uint64_t> h(ci.n, 0);
    REQUIRE(sz_code_dual_scaling(cd, h.data()) == SZ_OK);
    for (uint64_t v : h) CHECK(v != 0);

    sz_aut_report ar;
    REQUIRE(sz_code_aut_check(cd, 2, 1, 99, &ar) == SZ_OK);
    CHECK(ar.pass == 1);
    CHECK(ar.failures == 0);

    sz_code_destroy(cd);
    sz_curve_destroy(cv);
}

TEST_CASE("basis-only code refuses matrix operations") {
    sz_curve* cv = nullptr;
    REQUIRE(sz_curve_create(1, 0, &cv) == SZ_OK);
    sz_code* cd = nullptr;
    REQUIRE(sz_code_create(cv, 63, SZ_CODE_BASIS_ONLY, &cd) == SZ_OK);
    sz_code_info ci;
    REQUIRE(sz_code_info_get(cd, &ci) == SZ_OK);
    CHECK(ci.k == 4082);
    std::vector<uint64_t> row(ci.n);
    CHECK(sz_code_generator_row(cd, 0, row.data()) == SZ_ERR_UNSUPPORTED);
    CHECK(sz_last_error_message()[0] != '\0');
    sz_code_destroy(cd);

    CHECK(sz_code_create(cv, 0, 0, &cd) == SZ_ERR_INVALID_ARGUMENT);
    CHECK(sz_code_create(nullptr, 1, 0, &cd) == SZ_ERR_INVALID_ARGUMENT);
    sz_curve_destroy(cv);
}

TEST_CASE("dual operations below the threshold level report domain errors") {
    sz_curve* cv = nullptr;
    REQUIRE(sz_curve_create(1, 0, &cv) == SZ_OK);
    sz_code* cd = nullptr;
    REQUIRE(sz_code_create(cv, 3, 0, &cd) == SZ_OK);
    std::vector<uint64_t> h(5824);
    CHECK(sz_code_dual_scaling(cd, h.data()) == SZ_ERR_DOMAIN);
    sz_dual_report rep;
    CHECK(sz_code_verify_duality(cd, 10, 1, 0, &rep) == SZ_ERR_DOMAIN);
    sz_code_destroy(cd);
    sz_curve_destroy(cv);
}

TEST_CASE("selftest streams lines and honors the abort hook") {
    int lines = 0;
    const auto counter = [](const char* line, void* user) -> int {
        CHECK(line != nullptr);
        ++*static_cast<int*>(user);
        return 0;
    };
    const int rc = sz_selftest(1, 1, SZ_SELFTEST_QUICK, counter, &lines);
    CHECK(rc == SZ_ERR_SELFTEST_FAILED);  // one pinned reference row disagrees
    CHECK(lines == 13);

    // Abort after the first line.
    int seen = 0;
    const auto abort_fn = [](const char*, void* user) -> int {
        ++*static_cast<int*>(user);
        return 1;
    };
    CHECK(sz_selftest(1, 1, SZ_SELFTEST_QUICK, abort_fn, &seen) == SZ_ERR_SELFTEST_FAILED);
    CHECK(seen == 1);

    // The negative control must flip the field check to a failure.
    int n2 = 0;
    CHECK(sz_selftest(1, 1, SZ_SELFTEST_QUICK | SZ_SELFTEST_CORRUPT_FIELD, counter, &n2) ==
          SZ_ERR_SELFTEST_FAILED);
}
