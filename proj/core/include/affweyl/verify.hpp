#pragma once

#include "affweyl/fixtures.hpp"
#include "affweyl/root_system.hpp"

#include <string>
#include <vector>

namespace affweyl {

/// Per-row verification outcome. A row with zero instances was out of range for the
/// algebra under test.
struct RowResult {
    int table = 0;
    int row_id = 0;
    std::string subject;
    int instances = 0;
    int failed = 0;
    std::vector<std::string> failures; // human-readable, one per failing instance
};

struct VerificationReport {
    AlgebraFamily algebra{Family::A, 1};
    std::vector<RowResult> rows;
    int total_instances = 0;
    int total_failures = 0;
    double elapsed_seconds = 0.0;

    bool all_passed() const { return total_failures == 0; }
};

/// Re-derives every applicable table row for one algebra and checks it against the
/// library: Tables 1-2 against (identity, alpha_i^dual), Tables 4-6 against reflection
/// matrices, Table 3 against theta_pairing_simples, Tables 7-9 against
/// build_root_system (including exact coverage of Delta_+).
VerificationReport verify_all(const AlgebraFamily& algebra);

} // namespace affweyl
