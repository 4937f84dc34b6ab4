#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minksum/family.hpp"
#include "minksum/repfn.hpp"

namespace minksum {

/// Edge of the 1-skeleton between vertices()[u] and vertices()[v], u < v,
/// with vertices()[v] - vertices()[u] = alpha (e_i - e_j).
struct SkeletonEdge {
    int u = 0, v = 0;
    int i = 0, j = 0;
    int alpha = 0;
    bool operator==(const SkeletonEdge&) const = default;
};

class SkeletonGraph {
  public:
    SkeletonGraph(std::vector<LatticePoint> vertices, std::vector<SkeletonEdge> edges);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<SkeletonEdge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int degree(int vertex_index) const;
    const std::vector<int>& neighbors(int vertex_index) const;
    /// Index of a lattice point in the (lex-sorted) vertex list, if present.
    std::optional<int> index_of(const LatticePoint& p) const;
    bool connected() const;

  private:
    std::vector<LatticePoint> vertices_;
    std::vector<SkeletonEdge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

enum class EdgeCertifier {
    /// Off-pair-mass LP over the full vertex list (exactlp::is_edge).
    Lp,
    /// Minimal-face dimension via the canonical chain of tight subset
    /// inequalities; equivalent, and much faster for large vertex counts.
    TightSets,
};

struct SkeletonOptions {
    std::size_t vertex_budget = 1500;
    EdgeCertifier certifier = EdgeCertifier::Lp;
    int workers = 1;
    EnumerationOptions enumeration;
};

/// Builds the 1-skeleton: vertices from the rep-function census, candidate
/// pairs pruned to differences alpha (e_i - e_j), each candidate certified.
SkeletonGraph build_skeleton(const SimplexFamily& fam, const SkeletonOptions& opts = {});

/// Independent edge enumeration: ordered partitions of [r] whose face family
/// has exactly one two-element component (all else isolated) give the edges.
SkeletonGraph skeleton_via_partitions(const SimplexFamily& fam, int max_ground = 8);

std::map<int, std::uint64_t> degree_histogram(const SkeletonGraph& g);

/// Directed graph on [r] at a vertex u: arc (i, j) present iff
/// u + alpha (e_i - e_j) is a neighbor of u for some positive alpha.
struct VertexDigraph {
    int ground_size = 0;
    std::vector<std::pair<int, int>> arcs;  // 1-based (i, j), sorted

    bool acyclic() const;
    /// The underlying undirected graph: no antiparallel arc pairs and no
    /// (undirected) triangles.
    bool underlying_simple() const;
    bool underlying_triangle_free() const;
};
VertexDigraph vertex_digraph(const SkeletonGraph& g, int vertex_index);

/// Vertex classes of a sum of two simplices, named after the archetypal
/// rhombus coordinates (1,1,0), (0,2,0), (0,1,1), (1,0,1).
enum class RhombusType { A, B, C, D };

std::string to_string(RhombusType t);

/// Typing without the nonempty-parts requirement; empty optional when the
/// point is not a vertex-shaped sum e_i + e_j of the two simplices.
std::optional<RhombusType> rhombus_type(const GroundSet& f, const GroundSet& fp,
                                        const LatticePoint& u);

/// The classification of the two-simplex case; requires F\F', F∩F', F'\F all
/// nonempty and u a vertex of Delta_F + Delta_F'.
RhombusType classify_rhombus(const GroundSet& f, const GroundSet& fp,
                             const LatticePoint& u);

/// deg(u) for a vertex of a two-simplex sum: |F ∪ F'| - 1 for types A/B/C,
/// |F| + |F'| - 2 for type D.
int two_sum_degree(const GroundSet& f, const GroundSet& fp, RhombusType t);

/// f-polynomial coefficients: coeff[i] = number of i-dimensional faces. The
/// polytope counts as its own top-dimensional face.
struct FPolynomial {
    std::vector<long long> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    long long at(int i) const {
        return (i >= 0 && i < static_cast<int>(coeff.size())) ? coeff[static_cast<std::size_t>(i)] : 0;
    }
    void trim();
    std::string str() const;
    bool operator==(const FPolynomial&) const = default;
};

FPolynomial fpoly_add(const FPolynomial& a, const FPolynomial& b);
FPolynomial fpoly_sub(const FPolynomial& a, const FPolynomial& b);
FPolynomial fpoly_mul(const FPolynomial& a, const FPolynomial& b);

/// f-vector by ordered-partition face enumeration; faces are identified by
/// their maximizing vertex sets and dimensions come from the face family.
FPolynomial f_vector(const SimplexFamily& fam, int max_ground = 8,
                     const EnumerationOptions& enumeration = {});

/// The minimal face of P_F containing a point, realized as a face family
/// F^C for the ordered partition read off the canonical maximal chain of
/// tight subset inequalities.
struct MinimalFace {
    OrderedPartition partition;
    SimplexFamily family;  // F^C
    int dim = 0;
};

/// Integer-point overload: `scaled` is `scale` times the query point.
MinimalFace minimal_face(const SimplexFamily& fam, const std::vector<long long>& scaled,
                         long long scale);
MinimalFace minimal_face(const SimplexFamily& fam, const RationalVector& point);

/// Adjacency through the minimal face containing the midpoint of [u, v]:
/// the segment is an edge iff that face is one-dimensional.
bool is_edge_via_tight_sets(const SimplexFamily& fam, const LatticePoint& u,
                            const LatticePoint& v);

/// DOT rendering of a skeleton: nodes carry coordinates and degree, edges
/// their direction label "e{i}-e{j} x{alpha}".
std::string to_dot(const SkeletonGraph& g, const std::string& name = "skeleton");

}  // namespace minksum
