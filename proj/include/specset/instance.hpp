#pragma once

#include <cstdint>
#include <optional>

#include "specset/operator.hpp"

namespace specset {

/// A matrix, a finite family of generalized disks each spectral for it, and a
/// rational (possibly block) function with poles off the intersection.
struct ProblemInstance {
    Matrix A;
    std::vector<GeneralizedDisk> disks;
    RationalMatrixFunction f;
    std::uint64_t seed = 0;

    std::string to_json() const;
    static ProblemInstance from_json(const std::string& text);
    /// FNV-1a hash of the serialized form, for report identification.
    std::uint64_t digest() const;

    /// All instance invariants: every disk spectral, spectrum interior,
    /// poles of f off X.
    bool valid(std::string* why = nullptr) const;
};

enum class InstanceKind { Annulus, Sector, Strip, Lens, NDisks };

struct InstanceConfig {
    InstanceKind kind = InstanceKind::Annulus;
    double param = 2.0;  // R (annulus) or theta (sector)
    int k = 3;           // disk count for NDisks
    int n_dim = 4;
    std::uint64_t seed = 0;
    int block = 1;  // block size of f (1 = scalar)
};

ProblemInstance random_instance(const InstanceConfig& cfg);

InstanceKind instance_kind_from_string(const std::string& name);
std::string instance_kind_to_string(InstanceKind kind);

}  // namespace specset
