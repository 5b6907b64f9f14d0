// Compares the serial reference campaign loop with the OpenMP path and
// checks that both produce identical reports.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "specset/campaign.hpp"
#include "specset/parallel.hpp"

using namespace specset;

namespace {

double run(const InstanceConfig& cfg, int count, int workers,
           std::vector<VerifyReport>* out) {
    auto t0 = std::chrono::steady_clock::now();
    *out = verify_campaign(cfg, count, 1e-9, workers);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 64;
    InstanceConfig cfg;
    cfg.kind = InstanceKind::Annulus;
    cfg.n_dim = 4;
    cfg.seed = 1;

    std::vector<VerifyReport> serial, parallel;
    double ts = run(cfg, count, 1, &serial);
    int workers = default_workers();
    double tp = run(cfg, count, workers, &parallel);

    for (int i = 0; i < count; ++i) {
        if (serial[i].to_json() != parallel[i].to_json()) {
            std::fprintf(stderr, "mismatch at instance %d\n", i);
            return 1;
        }
    }
    int passed = 0;
    for (const auto& r : serial) passed += r.passed();
    std::printf("instances: %d  passed: %d\n", count, passed);
    std::printf("serial:    %.3f s\n", ts);
    std::printf("openmp(%d): %.3f s  (speedup %.2fx, %s)\n", workers, tp, ts / tp,
                openmp_available() ? "enabled" : "unavailable");
    return 0;
}
