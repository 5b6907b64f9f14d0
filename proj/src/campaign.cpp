#include "specset/campaign.hpp"

#include <cmath>

#include "json.hpp"
#include "specset/bounds.hpp"
#include "specset/parallel.hpp"

namespace specset {

bool VerifyReport::passed() const {
    if (skipped) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["index"] = index;
    j["seed"] = seed;
    j["digest"] = digest;
    j["skipped"] = skipped;
    if (skipped) j["reason"] = reason;
    nlohmann::json cc = nlohmann::json::array();
    for (const auto& c : checks)
        cc.push_back({{"name", c.name},
                      {"value", c.value},
                      {"threshold", c.threshold},
                      {"pass", c.pass}});
    j["checks"] = cc;
    return j.dump();
}

VerifyReport verify_instance(const ProblemInstance& inst, double tol) {
    VerifyReport rep;
    rep.seed = inst.seed;
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(inst.digest()));
    rep.digest = hex;

    std::string why;
    if (!inst.valid(&why)) {
        rep.skipped = true;
        rep.reason = why;
        return rep;
    }

    auto check = [&](const std::string& name, double value, double threshold) {
        rep.checks.push_back({name, value, threshold, value <= threshold});
    };

    try {
        Decomposition dec = decompose(inst.f, inst.A, inst.disks, tol);
        double supf = sup_norm(inst.f, inst.disks);
        double n = dec.n_disks;
        check("defect", dec.defect, 10.0 * tol);
        check("gp_bound", spectral_norm(dec.g_p), n * supf + 1e-6);
        check("gr_bound", spectral_norm(dec.g_r), (n * (n - 1) / std::sqrt(3.0)) * supf + 1e-6);
        double normfA = spectral_norm(dec.f_direct);
        check("complete_bound", normfA, thm0_bound(dec.n_disks) * supf + 1e-6);
        if (dec.n_disks == 2) {
            CanonicalPairConfig cfg = normalize_pair(inst.disks[0], inst.disks[1]);
            if (cfg.variant == CanonicalPairConfig::Variant::Annulus)
                check("annulus_cap", normfA, thm1_upper(cfg.param) * supf + 1e-6);
        }
    } catch (const std::exception& e) {
        rep.skipped = true;
        rep.reason = e.what();
    }
    return rep;
}

std::vector<VerifyReport> verify_campaign(const InstanceConfig& base, int count, double tol,
                                          int workers) {
    auto reports = parallel_map<VerifyReport>(
        count,
        [&](int i) {
            InstanceConfig cfg = base;
            cfg.seed = base.seed + static_cast<std::uint64_t>(i);
            VerifyReport rep = verify_instance(random_instance(cfg), tol);
            rep.index = i;
            return rep;
        },
        workers);
    return reports;
}

}  // namespace specset
