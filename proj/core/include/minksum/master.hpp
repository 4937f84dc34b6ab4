#pragma once

#include <map>
#include <set>
#include <vector>

#include "minksum/family.hpp"
#include "minksum/skeleton.hpp"

namespace minksum {

enum class MasterLabeling {
    /// Nonempty subsets of [k] ordered by descending cardinality, then
    /// ascending lexicographic order on the sorted elements.
    Canonical,
    /// The published k = 3 coordinate order: N(1)={1,2,3}, N(2)={1,2},
    /// N(3)={2,3}, N(4)={1,3}, N(5)={1}, N(6)={2}, N(7)={3}.
    Paper3,
};

/// H(k): the family of k subsets of [2^k - 1] in which every nonempty subset
/// of [k] is the neighborhood signature of exactly one ground element.
/// P(k) = P_{H(k)} is the k-th master polytope.
class MasterFamily {
  public:
    MasterFamily(int k, MasterLabeling labeling);

    int k() const { return k_; }
    MasterLabeling labeling() const { return labeling_; }
    const SimplexFamily& family() const { return family_; }
    /// Signature attached to a coordinate (1-based).
    const Signature& signature_of(int coordinate) const;
    /// Coordinate carrying a signature; throws DomainError if unknown.
    int coordinate_of(const Signature& sig) const;

  private:
    int k_;
    MasterLabeling labeling_;
    std::vector<Signature> signatures_;
    std::map<Signature, int> coordinate_of_;
    SimplexFamily family_;
};

inline constexpr int kMasterMaxK = 5;

MasterFamily build_master(int k, MasterLabeling labeling = MasterLabeling::Canonical);

/// h_F(u): groups the coordinates of u by neighborhood signature and sums
/// them into the matching master coordinates.
LatticePoint h_projection(const SimplexFamily& fam, const LatticePoint& u,
                          const MasterFamily& master);

/// Vertex test through the master polytope: no two distinct positive
/// coordinates of u may share a signature, and h_F(u) must be a vertex of
/// P(k).
bool is_vertex_via_master(const SimplexFamily& fam, const LatticePoint& u,
                          const MasterFamily& master,
                          const std::set<LatticePoint>& master_vertices);

/// Checks that every edge of the skeleton either joins two vertices with the
/// same projection (internal edges) or projects onto an edge of P(k).
bool edge_types_via_master(const SimplexFamily& fam, const SkeletonGraph& skeleton,
                           const MasterFamily& master,
                           const SkeletonGraph& master_skeleton);

}  // namespace minksum
