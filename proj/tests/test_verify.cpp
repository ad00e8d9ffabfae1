#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tritail/verify.hpp"

using namespace tritail;

TEST_CASE("small battery is clean") {
    VerifyConfig cfg;
    cfg.exhaustive_max_n = 5;
    cfg.random_samples = 150;
    cfg.random_n = 60;
    cfg.random_d = 3.0;
    cfg.analytic_checks = false;
    VerifyReport rep = verify_suite(cfg);
    CHECK(rep.ok());
    CHECK(rep.graphs_checked > 1'000);
    CHECK(rep.components_checked > 0);
}

TEST_CASE("injected fault is caught and reproduced") {
    VerifyConfig cfg;
    cfg.exhaustive_max_n = 4;
    cfg.random_samples = 0;
    cfg.analytic_checks = false;
    cfg.self_test_break = true;
    VerifyReport rep = verify_suite(cfg);
    REQUIRE_FALSE(rep.ok());
    bool has_broken_check = false;
    for (const auto& v : rep.violations) {
        if (v.check.find("broken") != std::string::npos) {
            has_broken_check = true;
            CHECK_FALSE(v.edge_list.empty());  // counterexample serialized
        }
    }
    CHECK(has_broken_check);
}

TEST_CASE("analytic battery is clean") {
    VerifyConfig cfg;
    cfg.exhaustive_max_n = 2;
    cfg.random_samples = 0;
    cfg.analytic_checks = true;
    VerifyReport rep = verify_suite(cfg);
    CHECK(rep.ok());
    CHECK(rep.analytic_points_checked > 10'000);
}
