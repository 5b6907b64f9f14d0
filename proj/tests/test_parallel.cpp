#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "specset/campaign.hpp"
#include "specset/parallel.hpp"

using namespace specset;

TEST_CASE("parallel_map fills by index on both paths") {
    auto sq = [](int i) { return i * i; };
    auto serial = parallel_map<int>(100, sq, 1);
    auto parallel = parallel_map<int>(100, sq, 4);
    CHECK(serial == parallel);
    for (int i = 0; i < 100; ++i) CHECK(serial[i] == i * i);
}

TEST_CASE("campaign reports are identical for any worker count") {
    InstanceConfig cfg;
    cfg.kind = InstanceKind::Annulus;
    cfg.n_dim = 3;
    cfg.seed = 11;
    auto serial = verify_campaign(cfg, 12, 1e-9, 1);
    auto parallel = verify_campaign(cfg, 12, 1e-9, 4);
    REQUIRE(serial.size() == 12);
    REQUIRE(parallel.size() == 12);
    for (int i = 0; i < 12; ++i) {
        CHECK(serial[i].to_json() == parallel[i].to_json());
        CHECK(serial[i].index == i);
        CHECK(serial[i].passed());
    }
    // rerun determinism
    auto again = verify_campaign(cfg, 12, 1e-9, 4);
    for (int i = 0; i < 12; ++i) CHECK(serial[i].to_json() == again[i].to_json());
}

TEST_CASE("verify checks cover the bound chain") {
    InstanceConfig cfg;
    cfg.kind = InstanceKind::Annulus;
    cfg.n_dim = 3;
    cfg.seed = 5;
    VerifyReport rep = verify_instance(random_instance(cfg));
    CHECK(rep.passed());
    std::vector<std::string> names;
    for (const auto& c : rep.checks) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"defect", "gp_bound", "gr_bound", "complete_bound",
                                            "annulus_cap"});
    CHECK(rep.digest.size() == 16);

    // a broken instance is skipped with a reason, not failed
    ProblemInstance bad = random_instance(cfg);
    bad.A *= 10.0;  // spectrum escapes X
    VerifyReport skipped = verify_instance(bad);
    CHECK(skipped.skipped);
    CHECK(!skipped.reason.empty());
    CHECK(!skipped.passed());
}
