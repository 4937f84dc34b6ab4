#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>

#include "minksum/exactlp.hpp"
#include "minksum/repfn.hpp"

using namespace minksum;
using namespace minksum::exactlp;

namespace {

LinearSystem make_system(const std::vector<std::vector<int>>& a, const std::vector<int>& b) {
    LinearSystem sys;
    for (const auto& row : a) sys.coefficients.emplace_back(row.begin(), row.end());
    sys.rhs.assign(b.begin(), b.end());
    return sys;
}

// Independent feasibility oracle: a feasible equality system with x >= 0 has
// a basic feasible solution, so try every column subset and solve exactly.
bool feasible_by_enumeration(const LinearSystem& sys) {
    const int m = sys.rows(), n = sys.cols();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > m) continue;
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) cols.push_back(j);
        // Solve A_S z = b by Gaussian elimination; reject inconsistent or
        // underdetermined subsets (a smaller subset covers those solutions).
        RationalMatrix work(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            for (int j : cols)
                work[static_cast<std::size_t>(i)].push_back(
                    sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            work[static_cast<std::size_t>(i)].push_back(sys.rhs[static_cast<std::size_t>(i)]);
        }
        const int w = static_cast<int>(cols.size());
        int rank = 0;
        for (int col = 0; col < w && rank < m; ++col) {
            int pivot = -1;
            for (int i = rank; i < m; ++i)
                if (work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(rank)]);
            for (int i = 0; i < m; ++i) {
                if (i == rank) continue;
                const Rational factor =
                    work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] /
                    work[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
                if (factor == 0) continue;
                for (int j = col; j <= w; ++j)
                    work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        factor * work[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            }
            ++rank;
        }
        bool consistent = true;
        for (int i = rank; i < m; ++i)
            if (work[static_cast<std::size_t>(i)].back() != 0) consistent = false;
        if (!consistent || rank < w) continue;
        // Back-substitute the (diagonalized) system.
        RationalVector z(static_cast<std::size_t>(w), Rational(0));
        bool nonneg = true;
        int row = 0;
        for (int col = 0; col < w; ++col) {
            int lead = -1;
            for (int i = 0; i < m; ++i)
                if (work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                    lead = i;
                    break;
                }
            if (lead < 0) continue;
            z[static_cast<std::size_t>(col)] =
                work[static_cast<std::size_t>(lead)].back() /
                work[static_cast<std::size_t>(lead)][static_cast<std::size_t>(col)];
            if (z[static_cast<std::size_t>(col)] < 0) nonneg = false;
            ++row;
        }
        if (!nonneg) continue;
        // Verify the full system exactly.
        bool solves = true;
        for (int i = 0; i < m && solves; ++i) {
            Rational lhs = 0;
            for (int t = 0; t < w; ++t)
                lhs += sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[
                           static_cast<std::size_t>(t)])] *
                       z[static_cast<std::size_t>(t)];
            solves = lhs == sys.rhs[static_cast<std::size_t>(i)];
        }
        if (solves) return true;
    }
    return false;
}

void check_witness(const LinearSystem& sys, const RationalVector& x) {
    REQUIRE(static_cast<int>(x.size()) == sys.cols());
    for (const Rational& v : x) CHECK(v >= 0);
    for (int i = 0; i < sys.rows(); ++i) {
        Rational lhs = 0;
        for (int j = 0; j < sys.cols(); ++j)
            lhs += sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   x[static_cast<std::size_t>(j)];
        CHECK(lhs == sys.rhs[static_cast<std::size_t>(i)]);
    }
}

void check_certificate(const LinearSystem& sys, const RationalVector& y) {
    REQUIRE(static_cast<int>(y.size()) == sys.rows());
    for (int j = 0; j < sys.cols(); ++j) {
        Rational dot = 0;
        for (int i = 0; i < sys.rows(); ++i)
            dot += y[static_cast<std::size_t>(i)] *
                   sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(dot <= 0);
    }
    Rational rhs_dot = 0;
    for (int i = 0; i < sys.rows(); ++i)
        rhs_dot += y[static_cast<std::size_t>(i)] * sys.rhs[static_cast<std::size_t>(i)];
    CHECK(rhs_dot > 0);
}

}  // namespace

TEST_SUITE_BEGIN("exactlp");

TEST_CASE("feasible: simple systems") {
    const LinearSystem unit = make_system({{1, 1}}, {1});
    const FeasibilityResult ok = feasible(unit);
    CHECK(ok.feasible);
    check_witness(unit, ok.witness);

    const LinearSystem bad = make_system({{1}}, {-1});
    const FeasibilityResult no = feasible(bad);
    CHECK_FALSE(no.feasible);
    check_certificate(bad, no.certificate);
}

TEST_CASE("feasible: rhombus diagonal midpoint avoids the diagonal pair") {
    // ((1,1,0) + (0,1,1))/2 = ((0,2,0) + (1,0,1))/2: representing the AC
    // midpoint over the other two vertices is feasible.
    const std::vector<LatticePoint> others = {{0, 2, 0}, {1, 0, 1}};
    LinearSystem sys;
    for (int coord = 0; coord < 3; ++coord) {
        RationalVector row;
        for (const auto& w : others) row.emplace_back(2 * w[static_cast<std::size_t>(coord)]);
        sys.coefficients.push_back(std::move(row));
        sys.rhs.emplace_back(1 + (coord == 1));  // (1,1,0)+(0,1,1) = (1,2,1)
    }
    sys.coefficients.push_back({Rational(1), Rational(1)});
    sys.rhs.emplace_back(1);
    const FeasibilityResult res = feasible(sys);
    CHECK(res.feasible);
    check_witness(sys, res.witness);
    CHECK(res.witness[0] == Rational(1, 2));
    CHECK(res.witness[1] == Rational(1, 2));
}

TEST_CASE("feasible matches enumeration oracle on random small systems") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> rows(1, 3), cols(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = rows(rng), n = cols(rng);
        LinearSystem sys;
        sys.coefficients.assign(static_cast<std::size_t>(m),
                                RationalVector(static_cast<std::size_t>(n)));
        sys.rhs.assign(static_cast<std::size_t>(m), Rational(0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j)
                sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    entry(rng);
            sys.rhs[static_cast<std::size_t>(i)] = entry(rng);
        }
        const FeasibilityResult res = feasible(sys);
        CHECK(res.feasible == feasible_by_enumeration(sys));
        if (res.feasible)
            check_witness(sys, res.witness);
        else
            check_certificate(sys, res.certificate);
    }
}

TEST_CASE("maximize") {
    // max x1 + x2 with x1 + x2 + s = 2 (s >= 0 slack encoded as a column).
    const LinearSystem sys = make_system({{1, 1, 1}}, {2});
    const LpResult res = maximize(sys, {Rational(1), Rational(1), Rational(0)});
    CHECK(res.status == LpStatus::Optimal);
    CHECK(res.value == 2);

    const LpResult unbounded = maximize(make_system({{1, -1}}, {0}), {Rational(1), Rational(0)});
    CHECK(unbounded.status == LpStatus::Unbounded);

    const LpResult infeasible = maximize(make_system({{1}}, {-2}), {Rational(1)});
    CHECK(infeasible.status == LpStatus::Infeasible);
}

TEST_CASE("in_hull") {
    const RationalMatrix square = {{Rational(0), Rational(0)},
                                   {Rational(1), Rational(0)},
                                   {Rational(0), Rational(1)},
                                   {Rational(1), Rational(1)}};
    CHECK(in_hull({Rational(1), Rational(1)}, square));
    CHECK(in_hull({Rational(1, 2), Rational(1, 2)}, square));
    CHECK_FALSE(in_hull({Rational(2), Rational(0)}, square));

    // A = (B + C + D)/3 inside P(3).
    const RationalVector a = {Rational(0), Rational(1), Rational(1), Rational(1),
                              Rational(0), Rational(0), Rational(0)};
    const RationalMatrix bcd = {
        {Rational(0), Rational(2), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(2), Rational(1), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(0), Rational(2), Rational(0), Rational(0), Rational(0)}};
    CHECK(in_hull(a, bcd));

    CHECK_THROWS_AS(in_hull({Rational(0)}, RationalMatrix{}), DomainError);
}

TEST_CASE("is_edge on the rhombus") {
    const SimplexFamily rhombus(3, {{1, 2}, {2, 3}});
    const std::vector<LatticePoint> verts = vertices(rhombus);
    const LatticePoint A{1, 1, 0}, B{0, 2, 0}, C{0, 1, 1}, D{1, 0, 1};
    CHECK(is_edge(A, B, verts));
    CHECK(is_edge(B, C, verts));
    CHECK(is_edge(C, D, verts));
    CHECK(is_edge(D, A, verts));
    CHECK_FALSE(is_edge(A, C, verts));
    CHECK_FALSE(is_edge(B, D, verts));
    // Symmetry.
    CHECK(is_edge(B, A, verts));
    CHECK_FALSE(is_edge(C, A, verts));

    CHECK_THROWS_AS(is_edge(A, A, verts), DomainError);
    CHECK_THROWS_AS(is_edge(A, LatticePoint{3, 0, 0}, verts), DomainError);
}

TEST_CASE("a segment polytope is its own edge") {
    const std::vector<LatticePoint> segment = {{0, 2}, {2, 0}};
    CHECK(is_edge(segment[0], segment[1], segment));
}

TEST_CASE("rational rank") {
    RationalMatrix m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rational_rank(m) == 1);
    RationalMatrix id3 = {{Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(1)}};
    CHECK(rational_rank(id3) == 3);
    CHECK(rational_rank(RationalMatrix{}) == 0);
}

TEST_SUITE_END();
