#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/checks.hpp"

#include <set>

using namespace fb;

TEST_CASE("the catalog is complete and anchored") {
    auto& cat = check_catalog();
    CHECK(cat.size() >= 15);
    std::set<std::string> names, anchors;
    for (auto& c : cat) {
        CHECK(!c.name.empty());
        CHECK(!c.anchor.empty());
        CHECK(!c.summary.empty());
        names.insert(c.name);
        anchors.insert(c.anchor);
    }
    CHECK(names.size() == cat.size());
    CHECK(names.count("xi-intertwining"));
    CHECK(names.count("appendix-diagram"));
    CHECK(anchors.count("theorem-3.4-xi-intertwining"));
    CHECK(anchors.count("appendix-A.1-diagram"));
}

TEST_CASE("unknown check names are rejected") {
    CheckConfig cfg;
    cfg.check = "no-such-check";
    CHECK_THROWS_AS(run_checks(cfg), std::invalid_argument);
}

TEST_CASE("a single cell runs and reports pass") {
    CheckConfig cfg;
    cfg.check = "localization-integral";
    cfg.N = 2;
    cfg.n = 2;
    auto reports = run_checks(cfg);
    REQUIRE(!reports.empty());
    for (auto& r : reports) {
        CHECK(r.check == "localization-integral");
        CHECK(r.anchor == "eq-3.2-localization");
        CHECK(r.status == "pass");
        CHECK(r.evidence == "exact");
        CHECK(r.witness == "-");
    }
}

TEST_CASE("rank checks carry the probabilistic evidence label") {
    CheckConfig cfg;
    cfg.check = "cohomology-relations";
    cfg.N = 2;
    cfg.n = 2;
    cfg.z_mode = "seed";
    cfg.seed = 5;
    for (auto& r : run_checks(cfg)) {
        CHECK(r.status == "pass");
        CHECK(r.evidence == "probabilistic-exact (Schwartz-Zippel)");
    }
}

TEST_CASE("reports are deterministic modulo timing") {
    CheckConfig cfg;
    cfg.check = "graded-character";
    cfg.N = 2;
    cfg.n = 3;
    auto a = run_checks(cfg);
    auto b = run_checks(cfg);
    CHECK(render_reports(a, false) == render_reports(b, false));
}

TEST_CASE("rendering has a stable field layout") {
    CheckReport r;
    r.check = "c";
    r.anchor = "a";
    r.params = "N=1 n=1";
    r.status = "pass";
    r.evidence = "exact";
    r.witness = "-";
    r.seconds = 0.1234;
    CHECK(render_reports({r}) ==
          "check: c\nanchor: a\nparams: N=1 n=1\nstatus: pass\nevidence: exact\n"
          "witness: -\ntime-seconds: 0.123\n---\n");
    CHECK(render_reports({r}, false) ==
          "check: c\nanchor: a\nparams: N=1 n=1\nstatus: pass\nevidence: exact\n"
          "witness: -\n---\n");
}

TEST_CASE("cells come out sorted by check and parameters") {
    CheckConfig cfg;
    cfg.check = "center-powersums";
    auto reports = run_checks(cfg);
    for (std::size_t k = 1; k < reports.size(); ++k) {
        CHECK((reports[k - 1].check < reports[k].check ||
               (reports[k - 1].check == reports[k].check &&
                reports[k - 1].params < reports[k].params)));
    }
}
