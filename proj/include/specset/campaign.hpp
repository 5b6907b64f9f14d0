#pragma once

#include "specset/decomposition.hpp"

namespace specset {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    int index = 0;
    std::uint64_t seed = 0;
    std::string digest;
    bool skipped = false;
    std::string reason;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

/// Decomposition defect, the g_p / g_r norm bounds, the complete-bound
/// inequality, and (for a disjoint 2-disk pair) the sharper annulus cap.
VerifyReport verify_instance(const ProblemInstance& inst, double tol = 1e-9);

/// count instances seeded base.seed, base.seed+1, ...; results are indexed
/// by instance number, so the report is identical for any worker count.
std::vector<VerifyReport> verify_campaign(const InstanceConfig& base, int count,
                                          double tol = 1e-9, int workers = 1);

}  // namespace specset
