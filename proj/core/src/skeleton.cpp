#include "minksum/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "minksum/exactlp.hpp"
#include "minksum/parallel.hpp"

namespace minksum {

namespace {

/// Difference pattern of a candidate edge: b - a = alpha (e_i - e_j).
struct Direction {
    int i, j, alpha;
};

std::optional<Direction> direction_of(const LatticePoint& a, const LatticePoint& b) {
    int plus = -1, minus = -1, alpha = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const int d = b[t] - a[t];
        if (d == 0) continue;
        if (d > 0) {
            if (plus >= 0) return std::nullopt;
            plus = static_cast<int>(t);
            alpha = d;
        } else {
            if (minus >= 0) return std::nullopt;
            minus = static_cast<int>(t);
        }
    }
    if (plus < 0 || minus < 0) return std::nullopt;
    if (a[static_cast<std::size_t>(minus)] - b[static_cast<std::size_t>(minus)] != alpha)
        return std::nullopt;
    return Direction{plus + 1, minus + 1, alpha};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

SkeletonGraph::SkeletonGraph(std::vector<LatticePoint> vertices,
                             std::vector<SkeletonEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= static_cast<int>(vertices_.size()) ||
            e.v >= static_cast<int>(vertices_.size()) || e.u >= e.v)
            throw DomainError("malformed skeleton edge");
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

int SkeletonGraph::degree(int vertex_index) const {
    return static_cast<int>(neighbors(vertex_index).size());
}

const std::vector<int>& SkeletonGraph::neighbors(int vertex_index) const {
    if (vertex_index < 0 || vertex_index >= static_cast<int>(vertices_.size()))
        throw DomainError("vertex index out of range");
    return adjacency_[static_cast<std::size_t>(vertex_index)];
}

std::optional<int> SkeletonGraph::index_of(const LatticePoint& p) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

bool SkeletonGraph::connected() const {
    if (vertices_.empty()) return true;
    UnionFind uf(vertices_.size());
    for (const auto& e : edges_) uf.unite(e.u, e.v);
    const int root = uf.find(0);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (uf.find(static_cast<int>(i)) != root) return false;
    return true;
}

SkeletonGraph build_skeleton(const SimplexFamily& fam, const SkeletonOptions& opts) {
    std::vector<LatticePoint> verts = vertices(fam, opts.enumeration);
    if (verts.size() > opts.vertex_budget)
        throw CapabilityError("skeleton",
                              "vertex count " + std::to_string(verts.size()) +
                                  " exceeds skeleton budget " +
                                  std::to_string(opts.vertex_budget));

    const auto is_vertex = [&](const LatticePoint& p) {
        return std::binary_search(verts.begin(), verts.end(), p);
    };

    struct Candidate {
        int a, b;
        Direction dir;
    };
    std::vector<Candidate> candidates;
    for (int a = 0; a < static_cast<int>(verts.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(verts.size()); ++b) {
            const auto dir = direction_of(verts[static_cast<std::size_t>(a)],
                                          verts[static_cast<std::size_t>(b)]);
            if (!dir) continue;
            // A vertex strictly between the endpoints carries positive
            // off-pair mass for the midpoint, so the pair cannot be an edge.
            bool blocked = false;
            for (int l = 1; l < dir->alpha && !blocked; ++l) {
                LatticePoint mid = verts[static_cast<std::size_t>(a)];
                mid[static_cast<std::size_t>(dir->i - 1)] += l;
                mid[static_cast<std::size_t>(dir->j - 1)] -= l;
                blocked = is_vertex(mid);
            }
            if (!blocked) candidates.push_back({a, b, *dir});
        }
    }

    std::vector<char> certified(candidates.size(), 0);
    parallel_for(candidates.size(), opts.workers, [&](std::size_t c) {
        const Candidate& cand = candidates[c];
        const LatticePoint& u = verts[static_cast<std::size_t>(cand.a)];
        const LatticePoint& v = verts[static_cast<std::size_t>(cand.b)];
        certified[c] = opts.certifier == EdgeCertifier::Lp
                           ? exactlp::is_edge(u, v, verts)
                           : is_edge_via_tight_sets(fam, u, v);
    });

    std::vector<SkeletonEdge> edges;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (certified[c])
            edges.push_back({candidates[c].a, candidates[c].b, candidates[c].dir.i,
                             candidates[c].dir.j, candidates[c].dir.alpha});

    SkeletonGraph g(std::move(verts), std::move(edges));
    if (!g.connected())
        throw InternalError("polytope 1-skeleton must be connected");
    return g;
}

SkeletonGraph skeleton_via_partitions(const SimplexFamily& fam, int max_ground) {
    const int r = fam.ground_size();
    if (r > max_ground)
        throw CapabilityError("skeleton-partitions",
                              "ordered-partition enumeration guarded to ground size " +
                                  std::to_string(max_ground));

    std::vector<LatticePoint> verts = vertices(fam);
    std::set<std::pair<LatticePoint, LatticePoint>> seen;
    std::vector<SkeletonEdge> edges;

    for_each_ordered_partition(r, [&](const OrderedPartition& part) {
        const SimplexFamily fc = face_family(fam, part);
        const Components comp = components(fc);
        int pairs = 0;
        bool ok = true;
        for (const auto& p : comp.parts) {
            if (p.size() == 2)
                ++pairs;
            else if (p.size() != 1)
                ok = false;
        }
        if (!ok || pairs != 1) return;

        std::vector<LatticePoint> ends = vertices(fc);
        if (ends.size() != 2)
            throw InternalError("edge face family must have exactly two vertices");
        auto key = std::make_pair(ends[0], ends[1]);
        if (!seen.insert(key).second) return;

        const auto ia = std::lower_bound(verts.begin(), verts.end(), ends[0]);
        const auto ib = std::lower_bound(verts.begin(), verts.end(), ends[1]);
        if (ia == verts.end() || *ia != ends[0] || ib == verts.end() || *ib != ends[1])
            throw InternalError("edge endpoints must be vertices of the polytope");
        const auto dir = direction_of(ends[0], ends[1]);
        if (!dir) throw InternalError("edge must be parallel to some e_i - e_j");
        edges.push_back({static_cast<int>(ia - verts.begin()),
                         static_cast<int>(ib - verts.begin()), dir->i, dir->j, dir->alpha});
    });

    return SkeletonGraph(std::move(verts), std::move(edges));
}

std::map<int, std::uint64_t> degree_histogram(const SkeletonGraph& g) {
    std::map<int, std::uint64_t> hist;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) ++hist[g.degree(v)];
    return hist;
}

bool VertexDigraph::acyclic() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(ground_size + 1));
    std::vector<int> indeg(static_cast<std::size_t>(ground_size + 1), 0);
    for (const auto& [i, j] : arcs) {
        out[static_cast<std::size_t>(i)].push_back(j);
        ++indeg[static_cast<std::size_t>(j)];
    }
    std::vector<int> stack;
    for (int v = 1; v <= ground_size; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    return removed == ground_size;
}

bool VertexDigraph::underlying_simple() const {
    std::set<std::pair<int, int>> present(arcs.begin(), arcs.end());
    for (const auto& [i, j] : arcs)
        if (present.count({j, i})) return false;
    return true;
}

bool VertexDigraph::underlying_triangle_free() const {
    if (ground_size > 63) throw CapabilityError("vertex-digraph", "ground size above 63");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(ground_size + 1), 0);
    for (const auto& [i, j] : arcs) {
        adj[static_cast<std::size_t>(i)] |= 1ULL << j;
        adj[static_cast<std::size_t>(j)] |= 1ULL << i;
    }
    for (const auto& [i, j] : arcs)
        if (adj[static_cast<std::size_t>(i)] & adj[static_cast<std::size_t>(j)]) return false;
    return true;
}

VertexDigraph vertex_digraph(const SkeletonGraph& g, int vertex_index) {
    if (vertex_index < 0 || vertex_index >= static_cast<int>(g.vertex_count()))
        throw DomainError("vertex index out of range");
    VertexDigraph d;
    d.ground_size = g.vertices().empty() ? 0 : static_cast<int>(g.vertices()[0].size());
    std::set<std::pair<int, int>> arcs;
    for (const auto& e : g.edges()) {
        if (e.u == vertex_index)
            arcs.insert({e.i, e.j});  // neighbor = u + alpha (e_i - e_j)
        else if (e.v == vertex_index)
            arcs.insert({e.j, e.i});
    }
    d.arcs.assign(arcs.begin(), arcs.end());
    return d;
}

std::string to_string(RhombusType t) {
    switch (t) {
        case RhombusType::A: return "A";
        case RhombusType::B: return "B";
        case RhombusType::C: return "C";
        case RhombusType::D: return "D";
    }
    return "?";
}

std::optional<RhombusType> rhombus_type(const GroundSet& f, const GroundSet& fp,
                                        const LatticePoint& u) {
    const auto in = [](const GroundSet& s, int e) {
        return std::binary_search(s.begin(), s.end(), e);
    };
    std::vector<int> support;
    int total = 0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        if (u[t] < 0) return std::nullopt;
        total += u[t];
        if (u[t] > 0) support.push_back(static_cast<int>(t) + 1);
    }
    if (total != 2) return std::nullopt;
    if (support.size() == 1) {
        const int e = support[0];
        if (in(f, e) && in(fp, e)) return RhombusType::B;
        return std::nullopt;
    }
    const int p = support[0], q = support[1];
    const auto part = [&](int e) -> int {
        // 0: F\F', 1: F∩F', 2: F'\F, -1: outside
        const bool a = in(f, e), b = in(fp, e);
        if (a && b) return 1;
        if (a) return 0;
        if (b) return 2;
        return -1;
    };
    const int pp = part(p), pq = part(q);
    if (pp < 0 || pq < 0) return std::nullopt;
    const int lo = std::min(pp, pq), hi = std::max(pp, pq);
    if (lo == 0 && hi == 1) return RhombusType::A;
    if (lo == 1 && hi == 2) return RhombusType::C;
    if (lo == 0 && hi == 2) return RhombusType::D;
    return std::nullopt;  // both summands in F∩F': midpoint of a diagonal
}

RhombusType classify_rhombus(const GroundSet& f, const GroundSet& fp,
                             const LatticePoint& u) {
    GroundSet only_f, inter, only_fp;
    std::set_difference(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(only_f));
    std::set_intersection(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(inter));
    std::set_difference(fp.begin(), fp.end(), f.begin(), f.end(), std::back_inserter(only_fp));
    if (only_f.empty() || inter.empty() || only_fp.empty())
        throw DomainError("rhombus classification requires F\\F', F∩F', F'\\F nonempty");
    const auto t = rhombus_type(f, fp, u);
    if (!t) throw DomainError("point is not a vertex of the two-simplex sum");
    return *t;
}

int two_sum_degree(const GroundSet& f, const GroundSet& fp, RhombusType t) {
    GroundSet uni;
    std::set_union(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(uni));
    if (t == RhombusType::D)
        return static_cast<int>(f.size() + fp.size()) - 2;
    return static_cast<int>(uni.size()) - 1;
}

void FPolynomial::trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

std::string FPolynomial::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] == 0 && !(coeff.size() == 1)) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0)
            out << coeff[i];
        else {
            if (coeff[i] != 1) out << coeff[i];
            out << "q";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

FPolynomial fpoly_add(const FPolynomial& a, const FPolynomial& b) {
    FPolynomial out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
    out.trim();
    return out;
}

FPolynomial fpoly_sub(const FPolynomial& a, const FPolynomial& b) {
    FPolynomial out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.at(static_cast<int>(i)) - b.at(static_cast<int>(i));
    out.trim();
    return out;
}

FPolynomial fpoly_mul(const FPolynomial& a, const FPolynomial& b) {
    FPolynomial out;
    if (a.coeff.empty() || b.coeff.empty()) return out;
    out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        for (std::size_t j = 0; j < b.coeff.size(); ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    out.trim();
    return out;
}

FPolynomial f_vector(const SimplexFamily& fam, int max_ground,
                     const EnumerationOptions& enumeration) {
    const int r = fam.ground_size();
    if (r > max_ground)
        throw CapabilityError("f-vector",
                              "ordered-partition enumeration guarded to ground size " +
                                  std::to_string(max_ground));
    const std::vector<LatticePoint> verts = vertices(fam, enumeration);
    const int dim_p = dimension(fam);

    // Faces are canonicalized by their maximizing vertex sets; the inducing
    // partition supplies the face family whose dimension is tallied.
    std::map<std::vector<int>, int> faces;
    for_each_ordered_partition(r, [&](const OrderedPartition& part) {
        long long best = 0;
        std::vector<int> argmax;
        for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
            long long value = 0;
            const LatticePoint& v = verts[static_cast<std::size_t>(vi)];
            for (int e = 1; e <= r; ++e)
                value += static_cast<long long>(part.block_of(e)) * v[static_cast<std::size_t>(e - 1)];
            if (argmax.empty() || value > best) {
                best = value;
                argmax.assign(1, vi);
            } else if (value == best) {
                argmax.push_back(vi);
            }
        }
        if (!faces.count(argmax))
            faces.emplace(std::move(argmax), dimension(face_family(fam, part)));
    });

    FPolynomial out;
    out.coeff.assign(static_cast<std::size_t>(dim_p) + 1, 0);
    for (const auto& [key, d] : faces) ++out.coeff[static_cast<std::size_t>(d)];
    return out;
}

MinimalFace minimal_face(const SimplexFamily& fam, const std::vector<long long>& scaled,
                         long long scale) {
    const int r = fam.ground_size();
    const int k = fam.set_count();
    if (static_cast<int>(scaled.size()) != r)
        throw DomainError("point dimension does not match ground size");
    if (scale < 1) throw DomainError("scale must be positive");
    if (r > kContainsPointMaxGround)
        throw CapabilityError("minimal-face", "subset enumeration guarded to ground size " +
                                                  std::to_string(kContainsPointMaxGround));
    if (k > 63) throw CapabilityError("minimal-face", "set count above 63");

    std::vector<std::uint64_t> elem_sets(static_cast<std::size_t>(r), 0);
    for (int j = 0; j < k; ++j)
        for (int e : fam.sets()[static_cast<std::size_t>(j)])
            elem_sets[static_cast<std::size_t>(e - 1)] |= 1ULL << j;

    const std::uint32_t full = (r == 32) ? ~0u : ((1u << r) - 1);
    std::vector<std::uint64_t> covered(static_cast<std::size_t>(full) + 1, 0);
    std::vector<long long> sums(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint32_t> tight;
    for (std::uint32_t d = 1; d <= full; ++d) {
        const std::uint32_t low = d & (~d + 1);
        const int e = std::countr_zero(low);
        covered[d] = covered[d ^ low] | elem_sets[static_cast<std::size_t>(e)];
        sums[d] = sums[d ^ low] + scaled[static_cast<std::size_t>(e)];
        const long long cap = scale * std::popcount(covered[d]);
        if (sums[d] > cap) throw DomainError("point lies outside the polytope");
        if (sums[d] == cap) tight.push_back(d);
    }
    if (sums[full] != scale * k) throw DomainError("point lies outside the polytope");

    // Canonical maximal chain: repeatedly the smallest (cardinality, then
    // mask value) tight strict superset. Any maximal chain of tight sets
    // yields the same face.
    std::sort(tight.begin(), tight.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint32_t> chain;
    std::uint32_t current = 0;
    while (current != full) {
        std::uint32_t next = 0;
        for (std::uint32_t t : tight) {
            if (t != current && (t & current) == current) {
                next = t;
                break;
            }
        }
        if (next == 0) throw InternalError("tight-set chain must reach the full ground set");
        chain.push_back(next);
        current = next;
    }

    // Suffix unions of the ordered partition are the chain read upward, so
    // blocks come out in reverse chain order.
    std::vector<GroundSet> blocks;
    std::uint32_t prev = 0;
    for (std::uint32_t t : chain) {
        GroundSet block;
        std::uint32_t diff = t & ~prev;
        while (diff) {
            const std::uint32_t low = diff & (~diff + 1);
            block.push_back(std::countr_zero(low) + 1);
            diff ^= low;
        }
        blocks.push_back(std::move(block));
        prev = t;
    }
    std::reverse(blocks.begin(), blocks.end());

    OrderedPartition part(r, std::move(blocks));
    SimplexFamily face = face_family(fam, part);
    const int d = dimension(face);
    return MinimalFace{std::move(part), std::move(face), d};
}

MinimalFace minimal_face(const SimplexFamily& fam, const RationalVector& point) {
    BigInt lcm = 1;
    for (const Rational& q : point) {
        const BigInt den = denominator(q);
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<long long> scaled;
    scaled.reserve(point.size());
    for (const Rational& q : point) {
        const Rational s = q * lcm;
        const BigInt num = numerator(s);
        if (num < std::numeric_limits<long long>::min() ||
            num > std::numeric_limits<long long>::max() ||
            lcm > std::numeric_limits<long long>::max())
            throw CapabilityError("minimal-face", "point denominators too large");
        scaled.push_back(static_cast<long long>(num));
    }
    return minimal_face(fam, scaled, static_cast<long long>(lcm));
}

bool is_edge_via_tight_sets(const SimplexFamily& fam, const LatticePoint& u,
                            const LatticePoint& v) {
    if (u == v) throw DomainError("is_edge endpoints must differ");
    std::vector<long long> doubled(u.size());
    for (std::size_t t = 0; t < u.size(); ++t)
        doubled[t] = static_cast<long long>(u[t]) + v[t];
    return minimal_face(fam, doubled, 2).dim == 1;
}

std::string to_dot(const SkeletonGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=box];\n";
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        out << "  v" << v << " [label=\"(";
        const LatticePoint& p = g.vertices()[static_cast<std::size_t>(v)];
        for (std::size_t t = 0; t < p.size(); ++t) out << (t ? "," : "") << p[t];
        out << ") deg=" << g.degree(v) << "\"];\n";
    }
    for (const auto& e : g.edges())
        out << "  v" << e.u << " -- v" << e.v << " [label=\"e" << e.i << "-e" << e.j
            << " x" << e.alpha << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace minksum
