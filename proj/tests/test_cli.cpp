#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

// the tool under test; cmake points this at the built binary
std::string cli() {
    const char* p = std::getenv("JORDEFORM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "JORDEFORM_CLI is not set");
    return p;
}

struct Run {
    int rc;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + cli() + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

} // namespace

TEST_CASE("verify passes and reports a summary") {
    Run r = run("verify -M 1 --suites classical,bialgebra");
    CHECK(r.rc == 0);
    CHECK(r.out.find(", 0 failed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("Jacobi identity") != std::string::npos);
}

TEST_CASE("json output carries exactly the report fields") {
    Run r = run("verify -M 1 -s classical -f json");
    CHECK(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    for (const auto& rec : doc) {
        CHECK(rec.size() == 6);
        CHECK(rec.contains("suite"));
        CHECK(rec.contains("identity"));
        CHECK(rec.contains("anchor"));
        CHECK(rec.at("status") == "pass");
        CHECK(rec.at("residual_terms") == 0);
        CHECK(rec.contains("millis"));
    }
}

TEST_CASE("suite and algebra filters narrow the run") {
    Run r = run("verify -M 1 -s hopf -a schrodinger -f json");
    CHECK(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    for (const auto& rec : doc) {
        CHECK(rec.at("suite") == "hopf");
        std::string id = rec.at("identity");
        CHECK(id.find("h6") == std::string::npos);
    }
}

TEST_CASE("tables pin the deformed commutators") {
    Run r = run("tables -M 2");
    CHECK(r.rc == 0);
    CHECK(r.out.find("[A-,B-] = -z*A-^2") != std::string::npos);
    CHECK(r.out.find("Delta(") != std::string::npos);
    CHECK(r.out.find("gamma(") != std::string::npos);
    CHECK(r.out.find("eps(") != std::string::npos);

    Run s = run("tables -M 2 --algebra schrodinger");
    CHECK(s.rc == 0);
    CHECK(s.out.find("[K,C] = -(z/2)*K^2") != std::string::npos);
}

TEST_CASE("matrices print the normalized corner entries") {
    Run r = run("matrices --gen B+ -M 2 -D 5 -b normalized");
    CHECK(r.rc == 0);
    CHECK(r.out.find("(3,0) -sqrt(6)*z") != std::string::npos);
    CHECK(r.out.find("(4,0) 7/6*sqrt(6)*z^2") != std::string::npos);

    Run u = run("matrices --gen A- -M 2 -D 5 -b unnormalized");
    CHECK(u.rc == 0);
    CHECK(u.out.find("sqrt") == std::string::npos); // rational in this basis
    CHECK(u.out.find("(2,1) (z^2/2)") != std::string::npos);

    Run j = run("matrices --gen M -M 1 -D 3 -b normalized -f json");
    CHECK(j.rc == 0);
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_object());
    CHECK(doc.at("generator") == "M");
    CHECK(doc.at("dim") == 3);
    REQUIRE(doc.at("entries").size() == 3); // M is diagonal
    for (const auto& e : doc.at("entries")) {
        CHECK(e.at("row") == e.at("col"));
        CHECK(e.at("z")[0].at("q_num") == "1");
        CHECK(e.at("z")[0].at("radicand") == "1");
    }
}

TEST_CASE("bad invocations exit with the usage code") {
    CHECK(run("verify --order -3").rc == 2);
    CHECK(run("frobnicate").rc == 2);
    CHECK(run("matrices --gen Q -M 1").rc == 2);
    CHECK(run("verify -s nosuchsuite").rc == 2);
    CHECK(run("verify -a so5").rc == 2);
    CHECK(run("matrices --gen B+ --algebra schrodinger").rc == 2);
}

TEST_CASE("help exits cleanly") {
    Run r = run("--help");
    CHECK(r.rc == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(r.out.find("matrices") != std::string::npos);
    CHECK(r.out.find("tables") != std::string::npos);
}

TEST_CASE("the default order comes from the environment") {
    Run r = run("tables", "JORDEFORM_DEFAULT_ORDER=1");
    CHECK(r.rc == 0);
    CHECK(r.out.find("order 1") != std::string::npos);
    Run bad = run("verify", "JORDEFORM_DEFAULT_ORDER=banana");
    CHECK(bad.rc == 2);
}
