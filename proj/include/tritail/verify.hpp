#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tritail/graph.hpp"

namespace tritail {

struct VerifyConfig {
    Vertex exhaustive_max_n = 6;     // enumerate all graphs on 2..max_n vertices
    std::uint64_t random_samples = 10'000;
    Vertex random_n = 500;
    double random_d = 3.0;
    std::uint64_t seed = 2718281828459045235ULL;
    bool self_test_break = false;    // corrupt one threshold; the suite must notice
    bool analytic_checks = true;
};

struct Violation {
    std::string check;
    std::string detail;
    std::string edge_list;  // minimal reproducing input when one exists
};

struct VerifyReport {
    std::uint64_t graphs_checked = 0;
    std::uint64_t components_checked = 0;
    std::uint64_t analytic_points_checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Runs the full invariant battery: component inequalities (edge/excess/
// triangle bounds, excess >= h(triangles)), excess-edge map multiplicities,
// triangle type counts, connected-selection feasibility, the excess-subgraph
// triangle identity, brute-force triangle comparison on small graphs, the
// h battery (round trip, concavity, upper bounds, superadditivity, integer
// grid inequalities, derivative), Poisson complements, packing-expectation
// ordering, and sampler determinism.
VerifyReport verify_suite(const VerifyConfig& config);

}  // namespace tritail
