#include <doctest.h>

#include <set>

#include "minksum/master.hpp"
#include "minksum/repfn.hpp"
#include "minksum/verify.hpp"

using namespace minksum;

TEST_SUITE_BEGIN("master");

TEST_CASE("paper3 labeling reproduces H(3)") {
    const MasterFamily m = build_master(3, MasterLabeling::Paper3);
    CHECK(m.family() ==
          SimplexFamily(7, {{1, 2, 4, 5}, {1, 2, 3, 6}, {1, 3, 4, 7}}));
    CHECK(m.signature_of(1) == Signature{1, 2, 3});
    CHECK(m.signature_of(5) == Signature{1});
    CHECK(m.coordinate_of({2, 3}) == 3);
}

TEST_CASE("canonical labeling covers every nonempty subset once") {
    for (int k = 1; k <= 4; ++k) {
        const MasterFamily m = build_master(k);
        const int r = (1 << k) - 1;
        CHECK(m.family().ground_size() == r);
        std::set<Signature> seen;
        for (int i = 1; i <= r; ++i) {
            CHECK(neighborhood(m.family(), i) == m.signature_of(i));
            seen.insert(m.signature_of(i));
        }
        CHECK(static_cast<int>(seen.size()) == r);
        for (const auto& s : m.family().sets())
            CHECK(static_cast<int>(s.size()) == (1 << (k - 1)));
    }
}

TEST_CASE("small master polytopes") {
    CHECK(vertex_count(build_master(2).family()) == 4);  // 2^{k(k-1)} for k = 2
    const MasterFamily point = build_master(1);
    CHECK(point.family() == SimplexFamily(1, {{1}}));
    CHECK(vertices(point.family()) == std::vector<LatticePoint>{{1}});
}

TEST_CASE("order and labeling guards") {
    CHECK_THROWS_AS(build_master(0), DomainError);
    CHECK_THROWS_AS(build_master(6), DomainError);
    CHECK_THROWS_AS(build_master(2, MasterLabeling::Paper3), DomainError);
}

TEST_CASE("label-invariant statistics agree across labelings") {
    const MasterFamily canonical = build_master(3);
    const MasterFamily paper = build_master(3, MasterLabeling::Paper3);
    CHECK(vertex_count(canonical.family()) == vertex_count(paper.family()));
    const SkeletonGraph gc = build_skeleton(canonical.family());
    const SkeletonGraph gp = build_skeleton(paper.family());
    CHECK(degree_histogram(gc) == degree_histogram(gp));
    CHECK(f_vector(canonical.family()) == f_vector(paper.family()));
}

TEST_CASE("h projection") {
    const SimplexFamily fam(3, {{1, 2}, {2, 3}});
    const MasterFamily m = build_master(2);
    // Canonical coordinates carry signatures {1,2}, {1}, {2}.
    CHECK(h_projection(fam, {0, 1, 1}, m) == LatticePoint{1, 0, 1});
    CHECK(h_projection(fam, {1, 1, 0}, m) == LatticePoint{1, 1, 0});

    // On H(k) itself the projection is the identity.
    const MasterFamily m3 = build_master(3, MasterLabeling::Paper3);
    for (const LatticePoint& v : vertices(m3.family()))
        CHECK(h_projection(m3.family(), v, m3) == v);

    // Shared signatures accumulate.
    const SimplexFamily dup(2, {{1, 2}, {1, 2}});
    CHECK(h_projection(dup, {1, 1}, m) == LatticePoint{2, 0, 0});

    CHECK_THROWS_AS(h_projection(fam, {0, 1}, m), DomainError);
    CHECK_THROWS_AS(h_projection(SimplexFamily(3, {{1, 2}}), {0, 1, 0}, m), DomainError);
}

TEST_CASE("vertex detection through the master polytope") {
    const MasterFamily m3 = build_master(3);
    const auto mverts_list = vertices(m3.family());
    const std::set<LatticePoint> mverts(mverts_list.begin(), mverts_list.end());

    // Both coordinates share signature {1,2}: condition 1 fails.
    const MasterFamily m2 = build_master(2);
    const auto m2_list = vertices(m2.family());
    const std::set<LatticePoint> m2verts(m2_list.begin(), m2_list.end());
    CHECK_FALSE(is_vertex_via_master(SimplexFamily(2, {{1, 2}, {1, 2}}), {1, 1}, m2, m2verts));

    // A = (B + C + D)/3 in P(3): condition 2 fails.
    const MasterFamily paper = build_master(3, MasterLabeling::Paper3);
    const auto paper_list = vertices(paper.family());
    const std::set<LatticePoint> paper_verts(paper_list.begin(), paper_list.end());
    CHECK_FALSE(is_vertex_via_master(paper.family(), {0, 1, 1, 1, 0, 0, 0}, paper,
                                     paper_verts));

    // Equivalence with the multiplicity-one test over whole censuses.
    for (const SimplexFamily& fam : verify::corpus_random(10, 3, 2718)) {
        if (fam.set_count() != 3) continue;
        for (const auto& [point, count] : multiplicity_map(fam))
            CHECK(is_vertex_via_master(fam, point, m3, mverts) == (count == 1));
    }
}

TEST_CASE("edge types through the master polytope") {
    const MasterFamily m3 = build_master(3);
    const SkeletonGraph mskel = build_skeleton(m3.family());

    for (const SimplexFamily& fam : verify::corpus_random(8, 3, 3141)) {
        if (fam.set_count() != 3) continue;
        const SkeletonGraph skel = build_skeleton(fam);
        CHECK(edge_types_via_master(fam, skel, m3, mskel));
    }

    // On the master itself the projection is the identity and the statement
    // is immediate.
    CHECK(edge_types_via_master(m3.family(), mskel, m3, mskel));

    // For k = 2 this is the rhombus rule: A/B/C/D projections with no
    // AC or BD pairs.
    const MasterFamily m2 = build_master(2);
    const SkeletonGraph m2skel = build_skeleton(m2.family());
    const SimplexFamily two(5, {{1, 2, 3}, {3, 4, 5}});
    CHECK(edge_types_via_master(two, build_skeleton(two), m2, m2skel));
}

TEST_SUITE_END();
