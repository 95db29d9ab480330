#pragma once

// Pairwise ranking of divergence records into the influence (v1),
// navigability (v2) and propagativeness (v3) tallies, the repartition list,
// and top-k selection.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "isd/candidates.hpp"
#include "isd/compare.hpp"

namespace isd {

struct Verdict {
    std::map<std::string, std::int64_t> v1; // influence
    std::map<std::string, std::int64_t> v2; // navigability
    std::map<std::string, std::int64_t> v3; // propagativeness
    std::set<std::string> l;                // repartition recommendations
    std::array<std::vector<std::string>, 3> top_k; // for v1, v2, v3
    std::set<std::string> interesting;
    std::map<std::string, bool> diversity_flags;
};

/// For every ordered pair (a, b) of distinct records, b wins v1 when its ev
/// divergence is higher; given that, b wins v2 when its ec divergence is also
/// higher; given both, b wins v3 when nc + z is higher and joins l when sc + mu
/// is higher. A top-k list holds the k best positive scores, ties broken by
/// larger total divergence, then by candidate id. `interesting` is the
/// intersection of the three top-k lists restricted to candidates whose
/// diversity_ratio <= tau_d.
///
/// Throws std::invalid_argument with fewer than two records, k == 0 or
/// duplicate candidate ids.
Verdict discover(std::span<const DivergenceRecord> records, std::size_t k, double tau_d);

/// Singleton keyword subsets ordered by how often each keyword occurs in the
/// corpus (descending, stable). Falls back to the original list as one subset
/// when no keyword occurs.
std::vector<std::vector<std::string>> recommend_repartition(const std::vector<std::string>& corpus,
                                                            const std::vector<std::string>& keywords);
std::vector<std::vector<std::string>> recommend_repartition(const CandidateSubgraph& c,
                                                            const std::vector<std::string>& keywords);

} // namespace isd
