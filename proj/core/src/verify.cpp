#include "minksum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "minksum/exactlp.hpp"
#include "minksum/formulas.hpp"
#include "minksum/master.hpp"
#include "minksum/parallel.hpp"
#include "minksum/repfn.hpp"
#include "minksum/skeleton.hpp"

namespace minksum::verify {

namespace {

std::string join_counts(const std::map<int, std::uint64_t>& hist) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : hist) {
        out << (first ? "" : ", ") << key << ":" << value;
        first = false;
    }
    return out.str();
}

GroundSet set_from_mask(std::uint32_t mask) {
    GroundSet s;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) s.push_back(b + 1);
    return s;
}

SkeletonOptions skeleton_opts(const Options& opts, EdgeCertifier certifier,
                              std::size_t vertex_budget = 1500) {
    SkeletonOptions so;
    so.certifier = certifier;
    so.workers = opts.workers;
    so.vertex_budget = vertex_budget;
    so.enumeration.budget = opts.budget;
    so.enumeration.workers = opts.workers;
    return so;
}

// ---- check: master-counts -------------------------------------------------

CheckResult check_master_counts(const Options& opts) {
    CheckResult res{"master-counts"};
    const std::uint64_t expected[] = {41, 1015, 59072};
    std::ostringstream detail;
    res.pass = true;
    for (int k = 3; k <= 5; ++k) {
        EnumerationOptions eo;
        eo.budget = opts.budget;
        eo.workers = opts.workers;
        const std::uint64_t n = vertex_count(build_master(k).family(), eo);
        detail << "P(" << k << ")=" << n << " ";
        if (n != expected[k - 3]) res.pass = false;
    }
    res.detail = detail.str();
    return res;
}

// ---- check: p3-table ------------------------------------------------------

CheckResult check_p3_table(const Options& opts) {
    CheckResult res{"p3-table"};
    const MasterFamily master = build_master(3, MasterLabeling::Paper3);
    const auto& golden = p3_golden_table();

    std::vector<LatticePoint> expected_points;
    expected_points.reserve(golden.size());
    for (const auto& col : golden) expected_points.push_back(col.point);
    std::sort(expected_points.begin(), expected_points.end());

    const std::vector<LatticePoint> verts = vertices(master.family());
    const bool vertex_sets_match = verts == expected_points;

    const SkeletonGraph skel =
        build_skeleton(master.family(), skeleton_opts(opts, EdgeCertifier::Lp));
    const SkeletonGraph skel_tight =
        build_skeleton(master.family(), skeleton_opts(opts, EdgeCertifier::TightSets));
    const bool certifiers_agree = skel.edges() == skel_tight.edges();

    bool degrees_match = true;
    for (const auto& col : golden) {
        const auto idx = skel.index_of(col.point);
        if (!idx || skel.degree(*idx) != col.degree) degrees_match = false;
    }
    const std::map<int, std::uint64_t> expected_hist{{6, 25}, {7, 3}, {8, 12}, {9, 1}};
    const auto hist = degree_histogram(skel);
    const bool hist_match = hist == expected_hist;
    const bool edges_match = skel.edge_count() == 138;

    res.pass = vertex_sets_match && degrees_match && hist_match && edges_match &&
               certifiers_agree;
    std::ostringstream detail;
    detail << "vertices=" << verts.size() << (vertex_sets_match ? " (table match)" : " (MISMATCH)")
           << ", degrees " << (degrees_match ? "match" : "MISMATCH") << ", histogram {"
           << join_counts(hist) << "}, edges=" << skel.edge_count()
           << ", lp/tight-set certifiers " << (certifiers_agree ? "agree" : "DISAGREE");
    res.detail = detail.str();
    return res;
}

// ---- check: p4-degrees ----------------------------------------------------

CheckResult check_p4_degrees(const Options& opts) {
    CheckResult res{"p4-degrees"};
    const MasterFamily master = build_master(4);
    const SimplexFamily& fam = master.family();
    EnumerationOptions eo;
    eo.budget = opts.budget;
    eo.workers = opts.workers;
    const std::vector<LatticePoint> verts = vertices(fam, eo);

    struct Candidate {
        int a, b;
    };
    std::vector<Candidate> candidates;
    const auto is_vertex = [&](const LatticePoint& p) {
        return std::binary_search(verts.begin(), verts.end(), p);
    };
    for (int a = 0; a < static_cast<int>(verts.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(verts.size()); ++b) {
            int plus = -1, minus = -1, alpha = 0;
            bool ok = true;
            const LatticePoint& va = verts[static_cast<std::size_t>(a)];
            const LatticePoint& vb = verts[static_cast<std::size_t>(b)];
            for (std::size_t t = 0; t < va.size() && ok; ++t) {
                const int d = vb[t] - va[t];
                if (d == 0) continue;
                if (d > 0) {
                    if (plus >= 0) ok = false;
                    plus = static_cast<int>(t);
                    alpha = d;
                } else {
                    if (minus >= 0) ok = false;
                    minus = static_cast<int>(t);
                }
            }
            if (!ok || plus < 0 || minus < 0 ||
                va[static_cast<std::size_t>(minus)] - vb[static_cast<std::size_t>(minus)] != alpha)
                continue;
            bool blocked = false;
            for (int l = 1; l < alpha && !blocked; ++l) {
                LatticePoint mid = va;
                mid[static_cast<std::size_t>(plus)] += l;
                mid[static_cast<std::size_t>(minus)] -= l;
                blocked = is_vertex(mid);
            }
            if (!blocked) candidates.push_back({a, b});
        }
    }

    std::vector<char> certified(candidates.size(), 0);
    parallel_for(candidates.size(), opts.workers, [&](std::size_t c) {
        const LatticePoint& u = verts[static_cast<std::size_t>(candidates[c].a)];
        const LatticePoint& v = verts[static_cast<std::size_t>(candidates[c].b)];
        certified[c] = opts.p4_full_lp ? exactlp::is_edge(u, v, verts)
                                       : is_edge_via_tight_sets(fam, u, v);
    });

    // With the fast route, certify a deterministic sample of candidates by
    // the LP as well and require agreement.
    std::uint64_t sampled = 0, agreements = 0;
    if (!opts.p4_full_lp && !candidates.empty()) {
        const std::size_t stride = std::max<std::size_t>(1, candidates.size() / 200);
        std::vector<std::size_t> sample;
        for (std::size_t c = 0; c < candidates.size(); c += stride) sample.push_back(c);
        std::vector<char> lp_result(sample.size(), 0);
        parallel_for(sample.size(), opts.workers, [&](std::size_t s) {
            const Candidate& cand = candidates[sample[s]];
            lp_result[s] = exactlp::is_edge(verts[static_cast<std::size_t>(cand.a)],
                                            verts[static_cast<std::size_t>(cand.b)], verts);
        });
        sampled = sample.size();
        for (std::size_t s = 0; s < sample.size(); ++s)
            agreements += lp_result[s] == certified[sample[s]];
    }

    std::vector<int> degree(verts.size(), 0);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!certified[c]) continue;
        ++degree[static_cast<std::size_t>(candidates[c].a)];
        ++degree[static_cast<std::size_t>(candidates[c].b)];
    }
    std::set<int> support(degree.begin(), degree.end());
    const auto& expected = p4_expected_degrees();
    const bool support_match =
        std::vector<int>(support.begin(), support.end()) == expected;
    const bool sample_ok = opts.p4_full_lp || (sampled > 0 && agreements == sampled);

    res.pass = support_match && sample_ok;
    std::ostringstream detail;
    detail << "candidates=" << candidates.size() << ", degree support {";
    bool first = true;
    for (int d : support) {
        detail << (first ? "" : ",") << d;
        first = false;
    }
    detail << "}" << (support_match ? " (match)" : " (MISMATCH)");
    if (!opts.p4_full_lp)
        detail << ", lp sample " << agreements << "/" << sampled << " agree";
    res.detail = detail.str();
    return res;
}

// ---- check: worked-example ------------------------------------------------

CheckResult check_worked_example(const Options&) {
    CheckResult res{"worked-example"};
    const SimplexFamily fam(4, {{1, 2, 3}, {1, 2, 4}});
    const FPolynomial expected{{7, 11, 6, 1}};
    const FPolynomial by_faces = f_vector(fam);
    const FPolynomial by_decomposition =
        f_decompose(FPolynomial{{2, 1}}, FPolynomial{{4, 4, 1}}, FPolynomial{{1}});
    const FPolynomial by_closed_form = two_sum_f_polynomial({1, 2, 3}, {1, 2, 4});
    res.pass = by_faces == expected && by_decomposition == expected &&
               by_closed_form == expected;
    res.detail = "faces: " + by_faces.str() + "; decomposition: " + by_decomposition.str() +
                 "; closed form: " + by_closed_form.str();
    return res;
}

// ---- check: two-sum-closed-forms -------------------------------------------

CheckResult check_two_sum_closed_forms(const Options& opts) {
    CheckResult res{"two-sum-closed-forms"};
    constexpr int r = 6;
    struct Pair {
        std::uint32_t f, fp;
    };
    std::vector<Pair> pairs;
    for (std::uint32_t f = 1; f < (1u << r); ++f)
        for (std::uint32_t fp = f; fp < (1u << r); ++fp) pairs.push_back({f, fp});

    std::vector<std::string> failures(pairs.size());
    parallel_for(pairs.size(), opts.workers, [&](std::size_t pi) {
        const GroundSet f = set_from_mask(pairs[pi].f);
        const GroundSet fp = set_from_mask(pairs[pi].fp);
        const SimplexFamily fam(r, {f, fp});
        const TwoSumStats stats = TwoSumStats::from_sets(f, fp, r);

        SkeletonOptions so;
        so.certifier = EdgeCertifier::Lp;
        const SkeletonGraph skel = build_skeleton(fam, so);
        const SkeletonGraph skel_tight = [&] {
            SkeletonOptions so2;
            so2.certifier = EdgeCertifier::TightSets;
            return build_skeleton(fam, so2);
        }();

        std::ostringstream bad;
        if (static_cast<long long>(skel.vertex_count()) != two_sum_vertex_count(stats))
            bad << "vertex count " << skel.vertex_count() << " != formula "
                << two_sum_vertex_count(stats) << "; ";
        if (static_cast<long long>(skel.edge_count()) != two_sum_edge_count(stats))
            bad << "edge count " << skel.edge_count() << " != formula "
                << two_sum_edge_count(stats) << "; ";
        if (skel.edges() != skel_tight.edges()) bad << "lp/tight-set certifiers disagree; ";

        std::vector<RhombusType> types;
        types.reserve(skel.vertex_count());
        for (int v = 0; v < static_cast<int>(skel.vertex_count()); ++v) {
            const auto type = rhombus_type(f, fp, skel.vertices()[static_cast<std::size_t>(v)]);
            if (!type) {
                bad << "vertex without a rhombus type; ";
                types.push_back(RhombusType::A);
                continue;
            }
            types.push_back(*type);
            if (skel.degree(v) != two_sum_degree(f, fp, *type))
                bad << "degree " << skel.degree(v) << " != theorem for type "
                    << to_string(*type) << "; ";
        }
        for (const auto& e : skel.edges()) {
            const RhombusType a = types[static_cast<std::size_t>(e.u)];
            const RhombusType b = types[static_cast<std::size_t>(e.v)];
            if (a == b) continue;
            const auto lo = std::min(a, b), hi = std::max(a, b);
            const bool diagonal = (lo == RhombusType::A && hi == RhombusType::C) ||
                                  (lo == RhombusType::B && hi == RhombusType::D);
            if (diagonal) bad << "diagonal " << to_string(a) << to_string(b) << " edge; ";
        }
        failures[pi] = bad.str();
    });

    std::uint64_t failed = 0;
    std::string first_failure;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        if (failures[pi].empty()) continue;
        ++failed;
        if (first_failure.empty())
            first_failure = "first failure at pair (" + std::to_string(pairs[pi].f) + "," +
                            std::to_string(pairs[pi].fp) + "): " + failures[pi];
    }
    res.pass = failed == 0;
    res.detail = std::to_string(pairs.size()) + " pairs on [6] checked" +
                 (failed ? ("; " + std::to_string(failed) + " failed; " + first_failure) : "");
    return res;
}

// ---- check: integer-points ------------------------------------------------

void compositions(int remaining, std::size_t index, LatticePoint& work,
                  const std::function<void(const LatticePoint&)>& visit) {
    if (index + 1 == work.size()) {
        work[index] = remaining;
        visit(work);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        work[index] = v;
        compositions(remaining - v, index + 1, work, visit);
    }
}

CheckResult check_integer_points(const Options&) {
    CheckResult res{"integer-points"};
    int families = 0;
    std::uint64_t points = 0;
    std::string failure;
    for (const SimplexFamily& fam : corpus_all()) {
        if (fam.ground_size() > 6 || fam.set_count() > 3) continue;
        ++families;
        const std::vector<LatticePoint> images = integer_points(fam);
        std::vector<LatticePoint> brute;
        LatticePoint work(static_cast<std::size_t>(fam.ground_size()), 0);
        compositions(fam.set_count(), 0, work, [&](const LatticePoint& p) {
            RationalVector x(p.begin(), p.end());
            if (contains_point(fam, x)) brute.push_back(p);
        });
        std::sort(brute.begin(), brute.end());
        points += brute.size();
        if (images != brute && failure.empty())
            failure = "mismatch on a family with r=" + std::to_string(fam.ground_size());
    }
    res.pass = failure.empty();
    res.detail = std::to_string(families) + " families, " + std::to_string(points) +
                 " lattice points vs subset-inequality oracle" +
                 (failure.empty() ? "" : ("; " + failure));
    return res;
}

// ---- check: degree-theory ---------------------------------------------------

CheckResult check_degree_theory(const Options& opts) {
    CheckResult res{"degree-theory"};
    std::ostringstream bad;
    int skeletons = 0;

    std::vector<SimplexFamily> fams = corpus_all();
    for (int r = 2; r <= 7; ++r)
        for (int k = 1; 2 * k <= r; ++k) fams.push_back(lower_bound_family(k, r));

    for (const SimplexFamily& fam : fams) {
        const SkeletonGraph skel =
            build_skeleton(fam, skeleton_opts(opts, EdgeCertifier::Lp));
        ++skeletons;
        for (int v = 0; v < static_cast<int>(skel.vertex_count()); ++v) {
            if (skel.degree(v) > d_max(fam.ground_size()))
                bad << "degree above floor(r^2/4); ";
            const VertexDigraph dg = vertex_digraph(skel, v);
            if (static_cast<int>(dg.arcs.size()) != skel.degree(v))
                bad << "digraph arc count != degree; ";
            if (!dg.acyclic()) bad << "cyclic vertex digraph; ";
            if (!dg.underlying_simple()) bad << "non-simple underlying graph; ";
            if (!dg.underlying_triangle_free()) bad << "triangle in underlying graph; ";
        }
    }

    for (int r = 2; r <= 7; ++r) {
        for (int k = 1; 2 * k <= r; ++k) {
            const SimplexFamily fam = lower_bound_family(k, r);
            const SkeletonGraph skel =
                build_skeleton(fam, skeleton_opts(opts, EdgeCertifier::Lp));
            LatticePoint apex(static_cast<std::size_t>(r), 0);
            for (int i = 0; i < k; ++i) apex[static_cast<std::size_t>(i)] = 1;
            const auto idx = skel.index_of(apex);
            if (!idx) {
                bad << "apex missing for k=" << k << ", r=" << r << "; ";
                continue;
            }
            if (skel.degree(*idx) != d_k_max(k, r))
                bad << "apex degree " << skel.degree(*idx) << " != k(r-k) for k=" << k
                    << ", r=" << r << "; ";
            for (int v = 0; v < static_cast<int>(skel.vertex_count()); ++v)
                if (v != *idx && skel.degree(v) != r - 1)
                    bad << "non-apex degree != r-1 for k=" << k << ", r=" << r << "; ";
        }
    }

    res.pass = bad.str().empty();
    res.detail = std::to_string(skeletons) + " skeletons checked" +
                 (res.pass ? "" : ("; " + bad.str()));
    return res;
}

// ---- check: mantel ----------------------------------------------------------

CheckResult check_mantel(const Options&) {
    CheckResult res{"mantel"};
    std::ostringstream detail;
    res.pass = true;
    for (int n = 2; n <= kMantelBruteMaxN; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            const MantelBruteResult m = verify_mantel_brute(n, k);
            if (!m.pass()) {
                res.pass = false;
                detail << "FAIL n=" << n << " k=" << k << " max=" << m.brute_max
                       << " expected=" << m.formula << "; ";
            }
        }
    }
    if (res.pass) detail << "all (n,k) with n<=7, k<=n/2: e_k(n)=k(n-k), maximizers K_{k,n-k}";
    res.detail = detail.str();
    return res;
}

// ---- check: master-reduction -------------------------------------------------

CheckResult check_master_reduction(const Options& opts) {
    CheckResult res{"master-reduction"};
    const MasterFamily master = build_master(3);
    const std::vector<LatticePoint> mverts_list = vertices(master.family());
    const std::set<LatticePoint> mverts(mverts_list.begin(), mverts_list.end());
    const SkeletonGraph mskel =
        build_skeleton(master.family(), skeleton_opts(opts, EdgeCertifier::Lp));

    int families = 0;
    std::uint64_t point_checks = 0;
    std::ostringstream bad;
    for (const SimplexFamily& fam : corpus_all()) {
        if (fam.set_count() != 3 || fam.ground_size() > 6) continue;
        ++families;
        const MultiplicityMap census = multiplicity_map(fam);
        for (const auto& [point, count] : census) {
            ++point_checks;
            if (is_vertex_via_master(fam, point, master, mverts) != (count == 1)) {
                bad << "vertex test mismatch; ";
                break;
            }
        }
        const SkeletonGraph skel = build_skeleton(fam, skeleton_opts(opts, EdgeCertifier::Lp));
        if (!edge_types_via_master(fam, skel, master, mskel)) bad << "edge type violation; ";
    }
    res.pass = bad.str().empty();
    res.detail = std::to_string(families) + " k=3 families, " + std::to_string(point_checks) +
                 " integer points" + (res.pass ? "" : ("; " + bad.str()));
    return res;
}

// ---- check: average-degree -----------------------------------------------------

CheckResult check_average_degree(const Options&) {
    CheckResult res{"average-degree"};
    std::uint64_t triples = 0;
    std::ostringstream bad;
    for (int r = 2; r <= 40; ++r) {
        const Rational lower = r - 1;
        const Rational upper = Rational(10 * (r - 1)) / 9;
        for (long long z = 1; z <= r; ++z) {
            for (long long x = 0; x + z <= r; ++x) {
                const long long y = r - z - x;
                TwoSumStats s{x, y, z, r};
                const Rational avg = average_degree(s);
                ++triples;
                const bool boundary = (x == 0 || y == 0 || z == 1);
                if (avg < lower) bad << "avg below r-1 at (" << x << "," << y << "," << z << "); ";
                if (avg >= upper)
                    bad << "avg not below 10/9(r-1) at (" << x << "," << y << "," << z << "); ";
                if ((avg == lower) != boundary)
                    bad << "equality cases wrong at (" << x << "," << y << "," << z << "); ";
            }
        }
    }
    // r = 1 admits only the one-point sum (x, y, z) = (0, 0, 1), where the
    // average is exactly r - 1 = 0 and the strict upper bound is vacuous.
    if (average_degree(TwoSumStats{0, 0, 1, 1}) != 0) bad << "r=1 degenerate case; ";
    res.pass = bad.str().empty();
    res.detail = std::to_string(triples) + " (x,y,z) triples scanned for r<=40" +
                 (res.pass ? "" : ("; " + bad.str()));
    return res;
}

using CheckFn = CheckResult (*)(const Options&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"master-counts", check_master_counts},
        {"p3-table", check_p3_table},
        {"p4-degrees", check_p4_degrees},
        {"worked-example", check_worked_example},
        {"two-sum-closed-forms", check_two_sum_closed_forms},
        {"integer-points", check_integer_points},
        {"degree-theory", check_degree_theory},
        {"mantel", check_mantel},
        {"master-reduction", check_master_reduction},
        {"average-degree", check_average_degree},
    };
    return checks;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name, const Options& opts) {
    for (const auto& [check_name, fn] : registry()) {
        if (check_name != name) continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult res = fn(opts);
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        return res;
    }
    throw DomainError("unknown check: " + name);
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts) {
    std::vector<CheckResult> results;
    if (suite == "paper") {
        for (const auto& [name, fn] : registry()) {
            if (name == "p4-degrees" && !opts.include_p4) continue;
            results.push_back(run_check(name, opts));
        }
        return results;
    }
    results.push_back(run_check(suite, opts));
    return results;
}

std::vector<SimplexFamily> corpus_named() {
    return {
        SimplexFamily(1, {{1}}),                          // a point
        SimplexFamily(3, {{1, 2, 3}}),                    // a triangle
        SimplexFamily(2, {{1, 2}, {1, 2}}),               // dilated segment
        SimplexFamily(3, {{1, 2}, {2, 3}}),               // the rhombus
        SimplexFamily(4, {{1, 2}, {3, 4}}),               // product of segments
        SimplexFamily(4, {{1, 2, 3}, {1, 2, 4}}),         // the worked example
        SimplexFamily(3, {{1, 2}, {1, 2, 3}}),            // nested pair
        SimplexFamily(5, {{1, 3, 4, 5}, {2, 3, 4, 5}}),   // lower-bound family k=2, r=5
        SimplexFamily(6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}),
        SimplexFamily(7, {{1, 2, 4, 5}, {1, 2, 3, 6}, {1, 3, 4, 7}}),  // H(3), paper3
    };
}

std::vector<SimplexFamily> corpus_random(int count, int max_sets, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> ground(3, 6);
    std::uniform_int_distribution<int> nsets(1, max_sets);
    std::vector<SimplexFamily> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        const int r = ground(rng);
        const int k = max_sets == 3 ? 3 : nsets(rng);
        std::vector<GroundSet> sets;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            GroundSet s;
            for (int e = 1; e <= r; ++e)
                if (rng() & 1) s.push_back(e);
            if (s.empty()) ok = false;
            sets.push_back(std::move(s));
        }
        if (!ok) continue;
        out.emplace_back(r, std::move(sets));
    }
    return out;
}

std::vector<SimplexFamily> corpus_all() {
    std::vector<SimplexFamily> out = corpus_named();
    for (auto& fam : corpus_random(24, 3)) out.push_back(std::move(fam));
    for (auto& fam : corpus_random(12, 2, 123456789u)) out.push_back(std::move(fam));
    return out;
}

const std::vector<GoldenColumn>& p3_golden_table() {
    static const std::vector<GoldenColumn> table = {
        // 7x10 block
        {{3, 0, 0, 0, 0, 0, 0}, 6},
        {{1, 0, 2, 0, 0, 0, 0}, 6},
        {{1, 2, 0, 0, 0, 0, 0}, 6},
        {{0, 2, 1, 0, 0, 0, 0}, 6},
        {{0, 1, 2, 0, 0, 0, 0}, 6},
        {{1, 0, 0, 2, 0, 0, 0}, 6},
        {{0, 1, 0, 2, 0, 0, 0}, 6},
        {{0, 2, 0, 1, 0, 0, 0}, 6},
        {{0, 0, 2, 1, 0, 0, 0}, 6},
        {{0, 0, 1, 2, 0, 0, 0}, 6},
        // 7x21 block
        {{2, 0, 0, 0, 1, 0, 0}, 6},
        {{1, 0, 0, 1, 1, 0, 0}, 6},
        {{1, 1, 0, 0, 1, 0, 0}, 6},
        {{0, 1, 1, 0, 1, 0, 0}, 6},
        {{0, 1, 0, 1, 1, 0, 0}, 8},
        {{0, 0, 1, 1, 1, 0, 0}, 6},
        {{0, 0, 2, 0, 1, 0, 0}, 8},
        {{2, 0, 0, 0, 0, 1, 0}, 6},
        {{1, 0, 1, 0, 0, 1, 0}, 6},
        {{1, 1, 0, 0, 0, 1, 0}, 6},
        {{0, 1, 1, 0, 0, 1, 0}, 8},
        {{0, 1, 0, 1, 0, 1, 0}, 6},
        {{0, 0, 1, 1, 0, 1, 0}, 6},
        {{0, 0, 0, 2, 0, 1, 0}, 8},
        {{2, 0, 0, 0, 0, 0, 1}, 6},
        {{1, 0, 0, 1, 0, 0, 1}, 6},
        {{1, 0, 1, 0, 0, 0, 1}, 6},
        {{0, 1, 1, 0, 0, 0, 1}, 6},
        {{0, 1, 0, 1, 0, 0, 1}, 6},
        {{0, 0, 1, 1, 0, 0, 1}, 8},
        {{0, 2, 0, 0, 0, 0, 1}, 8},
        // 7x10 block
        {{1, 0, 0, 0, 1, 1, 0}, 7},
        {{0, 0, 1, 0, 1, 1, 0}, 8},
        {{0, 0, 0, 1, 1, 1, 0}, 8},
        {{1, 0, 0, 0, 0, 1, 1}, 7},
        {{0, 1, 0, 0, 0, 1, 1}, 8},
        {{0, 0, 0, 1, 0, 1, 1}, 8},
        {{1, 0, 0, 0, 1, 0, 1}, 7},
        {{0, 1, 0, 0, 1, 0, 1}, 8},
        {{0, 0, 1, 0, 1, 0, 1}, 8},
        {{0, 0, 0, 0, 1, 1, 1}, 9},
    };
    return table;
}

const std::vector<int>& p4_expected_degrees() {
    static const std::vector<int> degrees = {14, 15, 17, 18, 19, 20, 21, 22, 24, 25, 28};
    return degrees;
}

}  // namespace minksum::verify
