#include <doctest.h>

#include <algorithm>
#include <random>

#include "minksum/exactlp.hpp"
#include "minksum/family.hpp"
#include "minksum/repfn.hpp"
#include "minksum/verify.hpp"

using namespace minksum;

namespace {

const SimplexFamily kExample(4, {{1, 2, 3}, {1, 2, 4}});
const SimplexFamily kRhombus(3, {{1, 2}, {2, 3}});
const SimplexFamily kH3(7, {{1, 2, 4, 5}, {1, 2, 3, 6}, {1, 3, 4, 7}});

RationalVector to_rational(const LatticePoint& p) {
    return RationalVector(p.begin(), p.end());
}

}  // namespace

TEST_SUITE_BEGIN("family");

TEST_CASE("construction validates sets") {
    CHECK_THROWS_AS(SimplexFamily(3, {}), DomainError);
    CHECK_THROWS_AS(SimplexFamily(3, {{}}), DomainError);
    CHECK_THROWS_AS(SimplexFamily(3, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(SimplexFamily(3, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(SimplexFamily(3, {{2, 1}}), DomainError);
    CHECK_THROWS_AS(SimplexFamily(3, {{1, 1}}), DomainError);
    // Duplicate sets are allowed: families are ordered multisets.
    CHECK_NOTHROW(SimplexFamily(3, {{1, 2}, {1, 2}}));
}

TEST_CASE("neighborhood") {
    CHECK(neighborhood(kH3, 1) == Signature{1, 2, 3});
    CHECK(neighborhood(kH3, 5) == Signature{1});
    CHECK(neighborhood(SimplexFamily(1, {{1}}), 1) == Signature{1});
    CHECK_THROWS_AS(neighborhood(kH3, 0), DomainError);
    CHECK_THROWS_AS(neighborhood(kH3, 8), DomainError);
    // Outside the support the signature is empty.
    CHECK(neighborhood(SimplexFamily(3, {{1, 2}}), 3).empty());
}

TEST_CASE("components and dimension") {
    const Components chained = components(kRhombus);
    CHECK(chained.count() == 1);
    CHECK(chained.parts[0] == GroundSet{1, 2, 3});

    CHECK(components(SimplexFamily(4, {{1, 2}, {3, 4}})).count() == 2);

    const Components example = components(kExample);
    CHECK(example.count() == 1);
    CHECK(example.support_size == 4);

    CHECK(dimension(kExample) == 3);
    CHECK(dimension(kH3) == 6);
    CHECK(dimension(SimplexFamily(1, {{1}})) == 0);
}

TEST_CASE("dimension equals rank of the vertex span") {
    for (const SimplexFamily& fam : verify::corpus_all()) {
        if (fam.ground_size() > 6) continue;
        const std::vector<LatticePoint> verts = vertices(fam);
        RationalMatrix diffs;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            RationalVector row;
            for (std::size_t t = 0; t < verts[i].size(); ++t)
                row.emplace_back(verts[i][t] - verts[0][t]);
            diffs.push_back(std::move(row));
        }
        const int rank = diffs.empty() ? 0 : exactlp::rational_rank(diffs);
        CHECK(rank == dimension(fam));
    }
}

TEST_CASE("signature classes") {
    const auto classes = signature_classes(kExample);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == GroundSet{1, 2});
    CHECK(classes[1] == GroundSet{3});
    CHECK(classes[2] == GroundSet{4});

    CHECK(signature_classes(kH3).size() == 7);  // all singletons
    CHECK(signature_classes(SimplexFamily(2, {{1, 2}, {1, 2}})) ==
          std::vector<GroundSet>{{1, 2}});
}

TEST_CASE("reduce collapses an equal-signature class") {
    const Reduction red = reduce(kExample, {1, 2});
    CHECK(red.representative == 2);
    CHECK(red.family == SimplexFamily(4, {{2, 3}, {2, 4}}));
    REQUIRE(red.pinned.has_value());
    CHECK(*red.pinned == SimplexFamily(4, {{3}, {4}}));
    // P_{F''} is the single point (0,0,1,1).
    const auto pinned_verts = vertices(*red.pinned);
    REQUIRE(pinned_verts.size() == 1);
    CHECK(pinned_verts[0] == LatticePoint{0, 0, 1, 1});

    // Singleton class: the identity reduction.
    const Reduction same = reduce(kExample, {3});
    CHECK(same.family == kExample);
    CHECK(same.representative == 3);

    CHECK_THROWS_AS(reduce(kExample, {1, 3}), DomainError);
    CHECK_THROWS_AS(reduce(kExample, {}), DomainError);

    // Pinning may empty a set: F = ({1,2},{1,2}) collapses to ({2},{2}) and
    // the pinned face has no points.
    const Reduction dup = reduce(SimplexFamily(2, {{1, 2}, {1, 2}}), {1, 2});
    CHECK(dup.family == SimplexFamily(2, {{2}, {2}}));
    CHECK_FALSE(dup.pinned.has_value());
}

TEST_CASE("wedge reconstruction reproduces the vertex set") {
    // Every vertex of P_F is y + y_m (e_i - e_m) with y a vertex of the
    // reduced family and i in the collapsed class; conversely all such
    // points are vertices.
    std::vector<SimplexFamily> fams = {kExample, SimplexFamily(2, {{1, 2}, {1, 2}}),
                                       SimplexFamily(3, {{1, 2}, {1, 2, 3}})};
    for (auto& fam : verify::corpus_random(10, 3, 42))
        fams.push_back(std::move(fam));

    for (const SimplexFamily& fam : fams) {
        GroundSet cls;
        for (const auto& candidate : signature_classes(fam))
            if (candidate.size() >= 2) {
                cls = candidate;
                break;
            }
        if (cls.empty()) continue;
        const Reduction red = reduce(fam, cls);
        const int m = red.representative;

        std::vector<LatticePoint> image;
        for (const LatticePoint& y : vertices(red.family)) {
            const int mass = y[static_cast<std::size_t>(m - 1)];
            for (int i : cls) {
                LatticePoint p = y;
                p[static_cast<std::size_t>(m - 1)] -= mass;
                p[static_cast<std::size_t>(i - 1)] += mass;
                image.push_back(std::move(p));
            }
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        CHECK(image == vertices(fam));

        // No vertex has two positive coordinates inside the class.
        for (const LatticePoint& v : vertices(fam)) {
            int positive = 0;
            for (int i : cls) positive += v[static_cast<std::size_t>(i - 1)] > 0;
            CHECK(positive <= 1);
        }
    }
}

TEST_CASE("face family") {
    // One-block partition is the identity.
    CHECK(face_family(kRhombus, OrderedPartition(3, {{1, 2, 3}})) == kRhombus);

    CHECK(face_family(kRhombus, OrderedPartition(3, {{2}, {1, 3}})) ==
          SimplexFamily(3, {{1}, {3}}));
    CHECK(face_family(kExample, OrderedPartition(4, {{1, 2}, {3, 4}})) ==
          SimplexFamily(4, {{3}, {4}}));
}

TEST_CASE("ordered partition validation") {
    CHECK_THROWS_AS(OrderedPartition(3, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(OrderedPartition(3, {{1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(OrderedPartition(3, {{1, 2, 3}, {}}), DomainError);
    CHECK_THROWS_AS(OrderedPartition(3, {{1, 2, 4}}), DomainError);
}

TEST_CASE("ordered partition enumeration counts") {
    CHECK(ordered_partition_count(1) == 1);
    CHECK(ordered_partition_count(2) == 3);
    CHECK(ordered_partition_count(3) == 13);
    CHECK(ordered_partition_count(4) == 75);
    CHECK(ordered_partition_count(5) == 541);
}

TEST_CASE("contains_point") {
    CHECK(contains_point(kRhombus, to_rational({1, 1, 0})));
    CHECK_FALSE(contains_point(kRhombus, to_rational({2, 0, 0})));

    // Interior rational point: the centroid of the rhombus.
    CHECK(contains_point(kRhombus, {Rational(1, 2), Rational(1), Rational(1, 2)}));

    // Every rep-function image lies in the polytope.
    for_each_repfn(kExample, [&](const RepFunction& f) {
        CHECK(contains_point(kExample, to_rational(point_of(f, 4))));
    });

    CHECK_THROWS_AS(contains_point(SimplexFamily(21, {{1}}),
                                   RationalVector(21, Rational(0))),
                    CapabilityError);
    CHECK_THROWS_AS(contains_point(kRhombus, to_rational({1, 1})), DomainError);
}

TEST_CASE("contains_point accepts convex combinations of vertices") {
    std::mt19937 rng(7);
    for (const SimplexFamily& fam : {kExample, kRhombus}) {
        const auto verts = vertices(fam);
        for (int trial = 0; trial < 20; ++trial) {
            RationalVector x(static_cast<std::size_t>(fam.ground_size()), Rational(0));
            Rational total = 0;
            std::vector<Rational> weights;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                weights.emplace_back(static_cast<int>(rng() % 5));
                total += weights.back();
            }
            if (total == 0) continue;
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t t = 0; t < x.size(); ++t)
                    x[t] += weights[i] / total * verts[i][t];
            CHECK(contains_point(fam, x));
        }
    }
}

TEST_SUITE_END();
