#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "minksum/family.hpp"

namespace minksum {

/// A choice f(j) in F_j for each j in [k]; choices are 1-based ground elements.
struct RepFunction {
    std::vector<int> choices;
    bool operator==(const RepFunction& other) const = default;
};

/// Census of rep-function images: point -> number of rep-functions hitting it.
using MultiplicityMap = std::map<LatticePoint, std::uint64_t>;

struct EnumerationOptions {
    /// Cap on the number of rep-functions visited (prod |F_j|).
    std::uint64_t budget = 100'000'000;
    /// Index-partitioned workers for the census; results are worker-count
    /// independent.
    int workers = 1;
};

/// prod_j |F_j|, saturating at uint64 max.
std::uint64_t repfn_count(const SimplexFamily& fam);

/// u(f) = e_{f(1)} + ... + e_{f(k)}.
LatticePoint point_of(const RepFunction& f, int ground_size);

/// The rep-function at a lexicographic index (mixed-radix decomposition).
RepFunction repfn_at(const SimplexFamily& fam, std::uint64_t index);

/// True when `f` is a valid rep-function of `fam`.
bool is_repfn(const SimplexFamily& fam, const RepFunction& f);

/// Visits all rep-functions in lexicographic order of the choice vector.
void for_each_repfn(const SimplexFamily& fam,
                    const std::function<void(const RepFunction&)>& visit,
                    std::uint64_t budget = 100'000'000);

/// Materialized enumeration, guarded by the budget.
std::vector<RepFunction> enumerate_repfns(const SimplexFamily& fam,
                                          const EnumerationOptions& opts = {});

/// Exact census of u(f) images; counts sum to prod |F_j|.
MultiplicityMap multiplicity_map(const SimplexFamily& fam,
                                 const EnumerationOptions& opts = {});

/// Vertices of P_F: exactly the images with a unique rep-function,
/// lexicographically sorted.
std::vector<LatticePoint> vertices(const SimplexFamily& fam,
                                   const EnumerationOptions& opts = {});

/// Number of vertices without materializing them.
std::uint64_t vertex_count(const SimplexFamily& fam,
                           const EnumerationOptions& opts = {});

/// All integer points of P_F (the distinct u(f) images), sorted.
std::vector<LatticePoint> integer_points(const SimplexFamily& fam,
                                         const EnumerationOptions& opts = {});

/// Componentwise (min, max) of two rep-functions. The results are checked to
/// be rep-functions of `fam`; a violation (possible only for malformed or
/// mismatched inputs) raises StructureError. Satisfies
/// u(f) + u(g) = u(min) + u(max).
std::pair<RepFunction, RepFunction> meet_join(const SimplexFamily& fam,
                                              const RepFunction& f,
                                              const RepFunction& g);

/// Given u(g) = u(f) + t(e_{i1} - e_{i2}), returns f_1, ..., f_{t-1} with
/// u(f_l) = u(f) + l(e_{i1} - e_{i2}), built by swapping along alternating
/// paths in the bipartite membership graph.
std::vector<RepFunction> alternating_interpolate(const SimplexFamily& fam,
                                                 const RepFunction& f,
                                                 const RepFunction& g, int i1,
                                                 int i2, int t);

/// The vertex maximizing the linear functional induced by a permutation
/// `order` of [r] (read as c_{order[0]} < ... < c_{order[r-1]}): coordinate i
/// counts the sets whose largest element under the order is i.
LatticePoint greedy_vertex(const SimplexFamily& fam, const std::vector<int>& order);

}  // namespace minksum
