#pragma once

#include <vector>

#include "minksum/family.hpp"
#include "minksum/rational.hpp"
#include "minksum/skeleton.hpp"

namespace minksum {

/// Size statistics of a pair of subsets of [r]:
/// x = |F \ F'|, y = |F' \ F|, z = |F ∩ F'|.
struct TwoSumStats {
    long long x = 0, y = 0, z = 0;
    int r = 0;

    static TwoSumStats from_sets(const GroundSet& f, const GroundSet& fp, int r);
    long long size_f() const { return x + z; }
    long long size_fp() const { return y + z; }
    long long size_union() const { return x + y + z; }
};

/// |F|·|F'| - |F∩F'|(|F∩F'| - 1).
long long two_sum_vertex_count(const TwoSumStats& s);

/// ½ [ |F\F'|·|F'\F|(|F|+|F'|-2) + |F∩F'|(|F∪F'|-1)(|F\F'|+|F'\F|+1) ].
long long two_sum_edge_count(const TwoSumStats& s);

/// Exact average degree 2|E|/|V| of a full-dimensional two-simplex sum.
/// Requires dimension r - 1, i.e. F ∪ F' = [r] and F ∩ F' nonempty.
Rational average_degree(const TwoSumStats& s);

/// f_A · f' - f_A · f'' + f''. An empty pinned face is the zero polynomial,
/// degenerating the identity to the product rule.
FPolynomial f_decompose(const FPolynomial& f_class, const FPolynomial& f_reduced,
                        const FPolynomial& f_pinned);

/// f-polynomial of a simplex on n elements: coeff[i] = C(n, i+1).
FPolynomial simplex_f(long long n);

/// Closed-form f-polynomial of Delta_F + Delta_F' via the intersection
/// reduction; the |F∩F'| <= 1 cases collapse to the product of simplices.
FPolynomial two_sum_f_polynomial(const GroundSet& f, const GroundSet& fp);

/// Largest possible vertex degree over all families on [r]: floor(r^2/4).
long long d_max(int r);

/// Largest degree over families of at most k sets: k(r-k), for
/// 1 <= k <= floor(r/2).
long long d_k_max(int k, int r);

/// The family F_i = {i} ∪ {k+1, ..., r} for i in [k]; the vertex
/// e_1 + ... + e_k attains degree k(r-k) and all other vertices have
/// degree r-1.
SimplexFamily lower_bound_family(int k, int r);

/// Maximum edge count of a triangle-free graph on n vertices with a vertex
/// cover of size at most k: k(n-k).
long long mantel_extremal(int n, int k);

inline constexpr int kMantelBruteMaxN = 7;

struct MantelBruteResult {
    int n = 0, k = 0;
    long long formula = 0;
    long long brute_max = 0;
    std::uint64_t maximizer_count = 0;
    bool maximizers_complete_bipartite = false;
    bool pass() const {
        return brute_max == formula && maximizers_complete_bipartite && maximizer_count > 0;
    }
};

/// Enumerates every labeled graph on n vertices, keeps the triangle-free ones
/// with a vertex cover of size <= k, and checks both the maximum edge count
/// and that every maximizer is complete bipartite with parts k and n-k.
MantelBruteResult verify_mantel_brute(int n, int k);

}  // namespace minksum
