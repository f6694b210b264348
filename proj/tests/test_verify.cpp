#include <doctest.h>

#include "eqlc/errors.hpp"
#include "eqlc/verify.hpp"

using namespace eqlc;

TEST_CASE("enumerate_quadruples: small cases and brute-force agreement") {
    CHECK(enumerate_quadruples(2).empty());
    CHECK(enumerate_quadruples(3).empty());

    auto q4 = enumerate_quadruples(4);
    REQUIRE(q4.size() == 1);
    CHECK(q4[0].text() == "(1,2,2,3)");

    auto q5 = enumerate_quadruples(5);
    REQUIRE(q5.size() == 1);
    CHECK(q5[0].text() == "(1,2,3,4)");

    auto q6 = enumerate_quadruples(6);
    REQUIRE(q6.size() == 3);
    CHECK(q6[0].text() == "(1,2,4,5)");
    CHECK(q6[1].text() == "(1,3,3,5)");
    CHECK(q6[2].text() == "(2,3,3,4)");

    for (int m = 2; m <= 12; ++m) {
        // exhaustive loop oracle
        std::vector<Quadruple> brute;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                for (int k = 1; k <= m; ++k)
                    for (int l = 1; l <= m; ++l)
                        if (i < j && j <= k && k < l && i + l == m && j + k == m)
                            brute.push_back({i, j, k, l});
        auto got = enumerate_quadruples(m);
        REQUIRE(got.size() == brute.size());
        for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t].text() == brute[t].text());
        for (const auto& q : got) {
            CHECK(q.i < q.j);
            CHECK(q.j <= q.k);
            CHECK(q.k < q.l);
            CHECK(q.i + q.l == m);
            CHECK(q.j + q.k == m);
        }
    }
}

TEST_CASE("verify_degree at m=4, family A: contained, window checked") {
    GeneratorStore gens;
    VerificationReport rep = verify_degree(family_A(), 4, gens);
    REQUIRE(rep.results.size() == 1);
    const auto& r = rep.results[0];
    CHECK(r.verdict == Verdict::contained);
    CHECK(r.bound == 8);
    CHECK(r.window_ok);
    CHECK(r.spot_check_ok);
    CHECK(r.tier == "oracle");
    CHECK(rep.all_contained());
}

TEST_CASE("diagnostic swap at m=4 is violated with a degree-3 witness") {
    GeneratorStore gens;
    int top = 8 + 1;
    FBModule a1 = factor_module(family_A(), 1, top, gens);
    FBModule a2 = factor_module(family_A(), 2, top, gens);
    FBModule a3 = factor_module(family_A(), 3, top, gens);
    FBModule x = fb_tensor(a1, a3, top);
    FBModule y = fb_tensor(a2, a2, top);
    FiSharpResult swapped = fisharp_contains(y, x, 8, 1);
    REQUIRE(!swapped.contained);
    REQUIRE(swapped.witness.has_value());
    CHECK(swapped.witness->degree == 3);
}

TEST_CASE("check_graded_selc at m=4") {
    GeneratorStore gens;
    auto at3 = check_graded_selc(family_A(), 4, 3, gens);
    REQUIRE(at3.size() == 1);
    CHECK(at3[0].contained);
    CHECK(at3[0].left_zero);  // A^3_3 = 0

    auto at4 = check_graded_selc(family_A(), 4, 4, gens);
    REQUIRE(at4.size() == 1);
    CHECK(at4[0].contained);
    CHECK(!at4[0].left_zero);

    CHECK(check_graded_selc(family_A(), 3, 5, gens).empty());  // vacuous
}

TEST_CASE("verdicts are independent of the tier policy") {
    ConfOptions oracle_only;
    oracle_only.tier = TierPolicy::oracle;
    ConfOptions plethysm_only;
    plethysm_only.tier = TierPolicy::plethysm;
    GeneratorStore g1(oracle_only), g2(plethysm_only);
    VerificationReport r1 = verify_degree(family_A(), 4, g1);
    VerificationReport r2 = verify_degree(family_A(), 4, g2);
    REQUIRE(r1.results.size() == r2.results.size());
    // the in-process conf memo may serve either run, so only the verdicts
    // and witnesses are comparable
    CHECK(r1.results[0].verdict == r2.results[0].verdict);
    CHECK(r1.results[0].verdict == Verdict::contained);
}

TEST_CASE("reproduce: a1-table") {
    ReproduceResult r = reproduce("a1-table");
    CHECK(r.pass);
    CHECK(r.mismatches.empty());
}

TEST_CASE("reproduce: h0-a1a1 carries the degree-3 annotation") {
    ReproduceResult r = reproduce("h0-a1a1");
    CHECK(r.pass);
    CHECK(r.mismatches.empty());
    REQUIRE(!r.flags.empty());
    CHECK(r.flags[0].find("degree-3") != std::string::npos);
}

TEST_CASE("reproduce: h0-degree4-pair") {
    ReproduceResult r = reproduce("h0-degree4-pair");
    for (const auto& m : r.mismatches) MESSAGE(m);
    CHECK(r.pass);
}

TEST_CASE("reproduce: fb-containment-yz") {
    ReproduceResult r = reproduce("fb-containment-yz");
    for (const auto& m : r.mismatches) MESSAGE(m);
    CHECK(r.pass);
    REQUIRE(!r.flags.empty());
}

TEST_CASE("reproduce rejects unknown ids") {
    CHECK_THROWS_AS(reproduce("nope"), Error);
}
