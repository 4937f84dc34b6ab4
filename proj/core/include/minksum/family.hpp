#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "minksum/errors.hpp"
#include "minksum/rational.hpp"

namespace minksum {

/// Sorted list of 1-based ground elements.
using GroundSet = std::vector<int>;
/// Sorted list of 1-based set indices; the neighborhood signature N(i).
using Signature = std::vector<int>;
/// Length-r vector of nonnegative integers indexed by ground element.
using LatticePoint = std::vector<int>;

/// An ordered multiset (F_1, ..., F_k) of nonempty subsets of [r].
/// Duplicate sets are allowed; order matters for rep-function indexing
/// but not for the polytope itself.
class SimplexFamily {
  public:
    SimplexFamily(int ground_size, std::vector<GroundSet> sets);

    int ground_size() const { return r_; }
    int set_count() const { return static_cast<int>(sets_.size()); }

    /// 1-based access to F_j.
    const GroundSet& set_at(int j) const;
    const std::vector<GroundSet>& sets() const { return sets_; }

    /// Sorted union of all sets.
    const GroundSet& support() const { return support_; }
    bool in_support(int element) const;

    bool operator==(const SimplexFamily& other) const {
        return r_ == other.r_ && sets_ == other.sets_;
    }

  private:
    int r_;
    std::vector<GroundSet> sets_;
    GroundSet support_;
};

/// N(i) = { j : i in F_j }. Empty only for elements outside the support.
Signature neighborhood(const SimplexFamily& fam, int element);

/// Connected components of the support under shared set membership.
struct Components {
    std::vector<GroundSet> parts;  // each sorted; parts ordered by minimum
    int support_size = 0;
    int count() const { return static_cast<int>(parts.size()); }
};
Components components(const SimplexFamily& fam);

/// dim(P_F) = |support| - #components.
int dimension(const SimplexFamily& fam);

/// Maximal classes of support elements sharing one neighborhood signature,
/// ordered by minimum element.
std::vector<GroundSet> signature_classes(const SimplexFamily& fam);

/// Result of collapsing an equal-signature class A onto m = max(A).
struct Reduction {
    SimplexFamily family;  ///< F': every appearance of A replaced by {m}
    int representative;    ///< m
    /// F'': the face of F' where coordinate m is pinned to 0 (m dropped from
    /// every set). Empty optional when some set vanishes, i.e. the face
    /// polytope is empty.
    std::optional<SimplexFamily> pinned;
};
Reduction reduce(const SimplexFamily& fam, const GroundSet& cls);

/// Ordered partition (C_1, ..., C_s) of [r]; encodes a linear functional
/// whose value is constant on each block and increases with the block index.
class OrderedPartition {
  public:
    OrderedPartition(int ground_size, std::vector<GroundSet> blocks);

    int ground_size() const { return r_; }
    const std::vector<GroundSet>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    /// 1-based block index of a ground element.
    int block_of(int element) const;

  private:
    int r_;
    std::vector<GroundSet> blocks_;
    std::vector<int> block_of_;
};

/// F^C: each F_j is cut down to its intersection with the largest-index
/// block it meets. P_{F^C} is the face of P_F maximizing the functional of C.
SimplexFamily face_family(const SimplexFamily& fam, const OrderedPartition& part);

/// Exact membership test against the full subset-inequality description:
/// x >= 0, sum(x) = k, and sum_{i in D} x_i <= #{j : F_j meets D} for every
/// nonempty D. Guarded to ground sizes enumerable as bitmasks.
bool contains_point(const SimplexFamily& fam, const RationalVector& x);

inline constexpr int kContainsPointMaxGround = 20;

/// Visits every ordered set partition of [r] exactly once.
void for_each_ordered_partition(
    int ground_size, const std::function<void(const OrderedPartition&)>& visit);

/// Number of ordered set partitions of [r] (Fubini number).
std::uint64_t ordered_partition_count(int ground_size);

}  // namespace minksum
