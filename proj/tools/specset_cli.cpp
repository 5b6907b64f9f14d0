#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "specset/bounds.hpp"
#include "specset/campaign.hpp"
#include "specset/parallel.hpp"

using namespace specset;

namespace {

double tol_from_env() {
    const char* s = std::getenv("SPECSET_TOL");
    if (!s) return 1e-9;
    double v = std::atof(s);
    return v > 0 ? v : 1e-9;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

/// "n_disks4" -> (NDisks, k=4); plain names keep the default disk count.
InstanceKind parse_kind(std::string name, int* k) {
    size_t digits = 0;
    while (digits < name.size() && std::isdigit(name[name.size() - 1 - digits])) ++digits;
    if (digits > 0 && name.size() > digits) {
        *k = std::atoi(name.substr(name.size() - digits).c_str());
        name = name.substr(0, name.size() - digits);
    }
    return instance_kind_from_string(name);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

nlohmann::json report_header(const std::string& command, std::uint64_t seed) {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

int emit(nlohmann::json j, const Timer& timer, bool ok) {
    j["wall_time_s"] = timer.seconds();
    std::cout << j.dump() << "\n";
    return ok ? 0 : 1;
}

std::vector<GeneralizedDisk> disks_from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    if (arr.is_object() && arr.contains("disks")) arr = arr["disks"];
    std::vector<GeneralizedDisk> disks;
    for (const auto& d : arr) disks.push_back(GeneralizedDisk::from_json(d.dump()));
    return disks;
}

int run_bounds(double rmin, double rmax, int steps, const std::string& out) {
    Timer timer;
    std::string csv;
    try {
        csv = write_bounds_csv(rmin, rmax, steps);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    nlohmann::json j = report_header("bounds", 0);
    j["rows"] = steps;
    j["out"] = out;
    if (!out.empty()) return emit(j, timer, true);
    return 0;
}

int run_verify(const std::string& instance_path, const std::string& random_kind,
               std::uint64_t seed, int count, double param, int dim, int block, int workers) {
    Timer timer;
    double tol = tol_from_env();
    std::vector<VerifyReport> reports;
    if (!instance_path.empty()) {
        ProblemInstance inst = ProblemInstance::from_json(read_file(instance_path));
        reports.push_back(verify_instance(inst, tol));
    } else {
        InstanceConfig cfg;
        cfg.k = 3;
        cfg.kind = parse_kind(random_kind, &cfg.k);
        cfg.param = param > 0 ? param : (cfg.kind == InstanceKind::Sector ? 0.6 : 2.0);
        cfg.n_dim = dim;
        cfg.block = block;
        cfg.seed = seed;
        reports = verify_campaign(cfg, count, tol, workers);
    }
    int passed = 0, skipped = 0, failed = 0;
    double max_defect = 0.0;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        if (r.skipped)
            ++skipped;
        else if (r.passed())
            ++passed;
        else
            ++failed;
        for (const auto& c : r.checks)
            if (c.name == "defect") max_defect = std::max(max_defect, c.value);
        arr.push_back(nlohmann::json::parse(r.to_json()));
    }
    nlohmann::json j = report_header("verify", seed);
    j["tol"] = tol;
    j["count"] = static_cast<int>(reports.size());
    j["passed"] = passed;
    j["skipped"] = skipped;
    j["failed"] = failed;
    j["max_defect"] = max_defect;
    j["instances"] = arr;
    return emit(j, timer, failed == 0);
}

int run_tessellate(const std::string& disks_path, const std::string& svg_out,
                   const std::string& json_out, const std::string& viewport) {
    Timer timer;
    Tessellation tess;
    try {
        tess = build_tessellation(disks_from_json(read_file(disks_path)));
    } catch (const std::invalid_argument& e) {
        std::cerr << "degenerate geometry: " << e.what() << "\n";
        return 3;
    }
    double vp = 5.0;
    if (!viewport.empty()) {
        std::istringstream ss(viewport);
        double v, m = 0.0;
        char comma;
        while (ss >> v) {
            m = std::max(m, std::abs(v));
            ss >> comma;
        }
        if (m > 0) vp = m;
    }
    if (!svg_out.empty()) write_file(svg_out, export_geometry_svg(tess, vp));
    if (!json_out.empty()) write_file(json_out, export_geometry_json(tess));
    nlohmann::json j = report_header("tessellate", 0);
    j["n_disks"] = static_cast<int>(tess.disks.size());
    j["boundary_arcs"] = static_cast<int>(tess.boundary_arcs.size());
    j["median_arcs"] = static_cast<int>(tess.median_arcs.size());
    return emit(j, timer, true);
}

int run_kernels(const std::string& instance_path, const std::string& random_kind,
                std::uint64_t seed, int samples) {
    Timer timer;
    ProblemInstance inst = [&] {
        if (!instance_path.empty()) return ProblemInstance::from_json(read_file(instance_path));
        InstanceConfig cfg;
        cfg.k = 3;
        cfg.kind = parse_kind(random_kind, &cfg.k);
        cfg.seed = seed;
        cfg.n_dim = 3;
        return random_instance(cfg);
    }();
    bool spectral = true;
    for (const auto& D : inst.disks) spectral = spectral && is_spectral(inst.A, D, 1e-10);

    nlohmann::json checks = nlohmann::json::array();
    bool all_pass = true;
    try {
        for (size_t d = 0; d < inst.disks.size(); ++d) {
            const auto& D = inst.disks[d];
            PoissonKernel mu(inst.A, D);
            OrientedArc arc = D.boundary_arc();
            double min_eig = 1e308;
            for (int k = 0; k < samples; ++k) {
                double s = arc.is_circle()
                               ? arc.length() * (k + 0.5) / samples
                               : std::tan(std::numbers::pi * ((k + 0.5) / samples - 0.5)) * 2.0;
                Matrix M = mu.eval(arc.sigma(s));
                Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M + M.adjoint()),
                                                         Eigen::EigenvaluesOnly);
                min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
            }
            bool psd_ok = min_eig >= -1e-10;
            checks.push_back({{"name", "mu_psd_disk" + std::to_string(d)},
                              {"value", min_eig},
                              {"threshold", -1e-10},
                              {"pass", psd_ok},
                              {"expected_fail", !spectral}});
            if (!psd_ok && spectral) all_pass = false;

            auto dens = [&](cplx z) { return mu.eval(z); };
            auto res = integrate_arc(dens, arc, Measure::Arclength, tol_from_env());
            double resid =
                spectral_norm(res.value - Matrix::Identity(inst.A.rows(), inst.A.cols()));
            bool id_ok = resid < 1e-8;
            checks.push_back({{"name", "identity_disk" + std::to_string(d)},
                              {"value", resid},
                              {"threshold", 1e-8},
                              {"pass", id_ok},
                              {"expected_fail", false}});
            if (!id_ok) all_pass = false;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "degenerate instance: " << e.what() << "\n";
        return 3;
    }
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(inst.digest()));
    nlohmann::json j = report_header("kernels", inst.seed);
    j["digest"] = hex;
    j["spectral"] = spectral;
    j["samples"] = samples;
    j["checks"] = checks;
    return emit(j, timer, all_pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-set toolkit"};
    app.require_subcommand(1);

    auto* bounds = app.add_subcommand("bounds", "emit the K(R) bound curves as CSV");
    double rmin = 1.01, rmax = 10.0;
    int steps = 200;
    std::string out;
    bounds->add_option("--rmin", rmin);
    bounds->add_option("--rmax", rmax);
    bounds->add_option("--steps", steps);
    bounds->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "decomposition and bound checks on instances");
    std::string instance_path, random_kind = "annulus";
    std::uint64_t seed = 0;
    int count = 1, dim = 4, block = 1, workers = 1;
    double param = -1.0;
    verify->add_option("--instance", instance_path);
    verify->add_option("--random", random_kind);
    verify->add_option("--seed", seed);
    verify->add_option("--count", count);
    verify->add_option("--param", param);
    verify->add_option("--dim", dim);
    verify->add_option("--block", block);
    verify->add_option("--workers", workers);

    auto* tessellate = app.add_subcommand("tessellate", "export tessellation geometry");
    std::string disks_path, svg_out, json_out, viewport;
    tessellate->add_option("--disks", disks_path)->required();
    tessellate->add_option("--svg", svg_out);
    tessellate->add_option("--json", json_out);
    tessellate->add_option("--viewport", viewport);

    auto* kernels = app.add_subcommand("kernels", "Poisson kernel PSD and identity checks");
    std::string kinstance, krandom = "annulus";
    std::uint64_t kseed = 0;
    int samples = 64;
    kernels->add_option("--instance", kinstance);
    kernels->add_option("--random", krandom);
    kernels->add_option("--seed", kseed);
    kernels->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bounds) return run_bounds(rmin, rmax, steps, out);
        if (*verify) return run_verify(instance_path, random_kind, seed, count, param, dim,
                                       block, workers);
        if (*tessellate) return run_tessellate(disks_path, svg_out, json_out, viewport);
        if (*kernels) return run_kernels(kinstance, krandom, kseed, samples);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 2;
}
