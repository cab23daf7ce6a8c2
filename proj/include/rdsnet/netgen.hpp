#pragma once
// Synthetic network generators covering three structural regimes: uniformly
// wired (configuration model), triangle-rich, and community-structured with
// tunable overlap and mixing.

#include <cstdint>
#include <vector>

#include "rdsnet/graph.hpp"
#include "rdsnet/rng.hpp"

namespace rdsnet {

// P(k) proportional to k^-exponent * exp(-cutoff_rate * k) on [k_min, k_max].
// k_max == 0 means N-1.
struct DegreeDistributionSpec {
    double exponent = 2.5;
    double cutoff_rate = 1e-4;
    uint32_t k_min = 3;
    uint32_t k_max = 0;
};

// Target mean local clustering per degree class: cbar(k) = min(1, c0 * k^-alpha).
// beta is accepted for interface compatibility; only the uniform-selection
// value 1.0 is supported.
struct ClusteredSpec {
    double c0 = 0.5;
    double alpha = 0.3;
    double beta = 1.0;
};

struct CommunitySpec {
    double size_exponent = -1.0;
    uint32_t size_min = 10;
    uint32_t size_max = 1000;
    double mu = 0.0;                      // probability of rewiring a bridge link
    uint32_t n_overlap = 0;               // number of bridge nodes
    uint32_t memberships_per_overlap = 5; // communities per bridge node
};

// Construction diagnostics.
struct GenReport {
    uint64_t dropped_stubs = 0;
    uint32_t attempts = 1; // community generator connectivity retries + 1
};

std::vector<uint32_t> sample_degree_sequence(uint32_t n, const DegreeDistributionSpec& spec,
                                             RngStream& rng);

// Stub matching with rejection of self-loops and duplicate edges; residual
// stubs are resolved by edge swaps where possible and dropped otherwise.
Network configuration_model(const std::vector<uint32_t>& degrees, RngStream& rng,
                            GenReport* report = nullptr);

// Triangle phase honoring per-node triangle quotas, then configuration-model
// wiring of the remaining stubs.
Network clustered_network(const std::vector<uint32_t>& degrees, const ClusteredSpec& spec,
                          RngStream& rng, GenReport* report = nullptr);

struct CommunityNetwork {
    Network net;
    CommunityPartition partition;
    GenReport report;
};

// Overlapping-community benchmark: power-law community sizes, bridge nodes in
// several communities, per-community wiring, and mu-mixing of bridge links.
// Retries with fresh substreams until the result is connected (at most 100).
CommunityNetwork community_network(uint32_t n, const DegreeDistributionSpec& dspec,
                                   const CommunitySpec& cspec, RngStream& rng);

// Exact PMF helper shared with tests and the CLI: normalized weights for
// k = k_min..k_max.
std::vector<double> degree_pmf(const DegreeDistributionSpec& spec, uint32_t n);

} // namespace rdsnet
