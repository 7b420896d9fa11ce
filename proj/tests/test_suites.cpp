#include <doctest.h>

#include "core/suites.hpp"

using namespace fibmap::suites;
using fibmap::report::CheckKind;

TEST_CASE("tm suite passes at reduced bounds") {
    TmBounds b;
    b.odd_dmax = 255;
    b.pow2_nmax = 8;
    b.doubling_nmax = 4;
    b.equivalence_terms = 20000;
    auto rep = run_suite_tm(b);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.observed);
        CHECK(c.pass);
    }
    CHECK(rep.core_passed());
    CHECK(!rep.conjecture_failed());
}

TEST_CASE("rs suite passes at reduced bounds") {
    RsBounds b;
    b.pow2_nmax = 6;
    auto rep = run_suite_rs(b);
    REQUIRE(rep.checks.size() == 1);
    INFO(rep.checks[0].observed);
    CHECK(rep.core_passed());
}

TEST_CASE("fib suite passes at reduced bounds") {
    FibBounds b;
    b.levelset_dmax = 2000;
    b.density_dmax = 20000;
    b.families_dmax = 1000;
    b.equivalence_terms = 20000;
    b.formula_nmax = 20;
    b.identity_nmax = 87;
    auto rep = run_suite_fib(b);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.observed);
        // densities at this d_max are not expected to have converged
        if (c.id.rfind("fib.density", 0) == 0) continue;
        CHECK(c.pass);
    }
}

TEST_CASE("conjecture checks are labeled and non-blocking") {
    ConjBounds b;
    b.slope_dmax = 5000;
    b.scan_cap = 300000;
    auto rep = run_suite_conjectures(b);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.observed);
        CHECK(c.kind == CheckKind::conjecture);
        CHECK(c.pass);
    }
    CHECK(rep.core_passed());  // conjecture rows never affect the core verdict
}

TEST_CASE("verify cross-validates the closed form") {
    auto rep = run_verify(120, 100000, 2);
    REQUIRE(rep.checks.size() == 120);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.observed, " / ", c.expected);
        CHECK(c.pass);
    }
    CHECK(run_verify(0, 0, 1).checks.empty());
}

TEST_CASE("report rendering") {
    auto rep = run_suite_rs(RsBounds{1u << 16, 3});
    auto text = rep.render("text");
    CHECK(text.find("suite rs") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    auto csv = rep.render("csv");
    CHECK(csv.rfind("suite,id,kind,pass", 0) == 0);
    auto json = rep.render("json");
    CHECK(json.find("\"core_passed\": true") != std::string::npos);
    CHECK_THROWS(rep.render("yaml"));
}
