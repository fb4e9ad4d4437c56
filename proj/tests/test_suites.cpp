#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordeform/suites.hpp"

#include <algorithm>

using namespace jordeform;

TEST_CASE("bad configurations are rejected") {
    RunConfig c;
    c.order = -1;
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
    c = RunConfig{};
    c.algebra = "su(2)";
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
    c = RunConfig{};
    c.suites = {"classical", "nope"};
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
    c = RunConfig{};
    c.fock_dim = 0;
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
    c = RunConfig{};
    c.fb_degree = 0;
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
}

TEST_CASE("records come back grouped in canonical suite order") {
    RunConfig c;
    c.order = 1;
    c.suites = {"bialgebra", "classical"}; // request order must not matter
    Report rep = run_suites(c);
    CHECK(all_pass(rep));
    REQUIRE(!rep.empty());
    size_t split = 0;
    while (split < rep.size() && rep[split].suite == "classical") ++split;
    CHECK(split > 0);
    for (size_t i = split; i < rep.size(); ++i) CHECK(rep[i].suite == "bialgebra");
}

TEST_CASE("the algebra filter narrows every suite except the isomorphism one") {
    RunConfig c;
    c.order = 1;
    c.algebra = "schrodinger";
    c.suites = {"classical", "hopf", "iso"};
    Report rep = run_suites(c);
    CHECK(all_pass(rep));
    bool saw_iso = false;
    for (const auto& rec : rep) {
        if (rec.suite == "iso") saw_iso = true;
        else CHECK(rec.identity.find("h6_jordanian") == std::string::npos);
    }
    CHECK(saw_iso);
    // the dual-side filter keeps its fb realization reachable too
    RunConfig d;
    d.order = 1;
    d.algebra = "h6-dual";
    d.suites = {"fb"};
    Report rd = run_suites(d);
    CHECK(all_pass(rd));
    CHECK(!rd.empty());
}

TEST_CASE("suite names are stable") {
    const auto& names = suite_names();
    CHECK(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), "rmatrix") != names.end());
    CHECK(names.front() == "classical");
}

TEST_CASE("a full default run is green") {
    RunConfig c;
    c.order = 2;
    Report rep = run_suites(c);
    CHECK(all_pass(rep));
    CHECK(rep.size() > 100); // the full matrix at one order is a few hundred records
}
