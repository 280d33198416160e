#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidmod/root_system.hpp"

namespace rigidmod {

struct VerifyOptions {
    long long trunc_q = 200;        // truncation for the series identities
    int multiplier_samples = 1000;  // random Gamma0(k) elements per root
    int numeric_samples = 50;       // random elements for the numeric law
    std::uint64_t seed = 1;
    double tolerance = 1e-9;        // numeric transformation residual bound
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success, first discrepancy otherwise
};

struct RootReport {
    std::string root;
    bool pass = false;
    std::vector<CheckLine> checks;
};

// Runs the full per-root suite: theta = eta, the orbifold eta identity, the
// factorization identity, the cusp-order profile, exact multiplier
// consistency (three routes), the numeric transformation law, the quiver
// dimension identity and support series, and for type A the partition
// oracle.
RootReport verify_root(const RootSystem& rs, const VerifyOptions& opts);

// Runs verify_root over the given roots concurrently; reports are returned
// in the input order.
std::vector<RootReport> verify_many(const std::vector<RootSystem>& roots,
                                    const VerifyOptions& opts);

}  // namespace rigidmod
