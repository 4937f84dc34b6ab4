#pragma once

#include <vector>

#include "minksum/family.hpp"
#include "minksum/rational.hpp"

namespace minksum::exactlp {

/// Equality system A x = b over x >= 0, dense exact rationals.
struct LinearSystem {
    RationalMatrix coefficients;  // m rows of length n
    RationalVector rhs;           // m entries

    int rows() const { return static_cast<int>(coefficients.size()); }
    int cols() const {
        return coefficients.empty() ? 0 : static_cast<int>(coefficients.front().size());
    }
    void validate() const;
};

struct FeasibilityResult {
    bool feasible = false;
    /// A rational solution x >= 0 with A x = b when feasible.
    RationalVector witness;
    /// Farkas certificate y with yᵀA <= 0 and yᵀb > 0 when infeasible.
    RationalVector certificate;
};

/// Phase-one simplex with Bland's anticycling rule; always terminates.
FeasibilityResult feasible(const LinearSystem& sys);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector solution;
};

/// maximize cᵀx subject to A x = b, x >= 0. With `stop_when_positive` the
/// solver returns as soon as the objective is proven positive (the returned
/// value is then a positive lower bound, not the optimum).
LpResult maximize(const LinearSystem& sys, const RationalVector& objective,
                  bool stop_when_positive = false);

/// True iff x is a convex combination of the given points.
bool in_hull(const RationalVector& x, const RationalMatrix& points);

/// True iff the segment [u, v] is a 1-face of conv(V): the LP
/// max sum_{w not in {u,v}} lambda_w over representations of the midpoint
/// has optimum 0.
bool is_edge(const LatticePoint& u, const LatticePoint& v,
             const std::vector<LatticePoint>& V);

/// Rank of a rational matrix by Gaussian elimination.
int rational_rank(RationalMatrix m);

}  // namespace minksum::exactlp
