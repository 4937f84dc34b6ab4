#include "minksum/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace minksum {

TwoSumStats TwoSumStats::from_sets(const GroundSet& f, const GroundSet& fp, int r) {
    GroundSet only_f, inter, only_fp;
    std::set_difference(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(only_f));
    std::set_intersection(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(inter));
    std::set_difference(fp.begin(), fp.end(), f.begin(), f.end(), std::back_inserter(only_fp));
    TwoSumStats s;
    s.x = static_cast<long long>(only_f.size());
    s.y = static_cast<long long>(only_fp.size());
    s.z = static_cast<long long>(inter.size());
    s.r = r;
    return s;
}

long long two_sum_vertex_count(const TwoSumStats& s) {
    return s.size_f() * s.size_fp() - s.z * (s.z - 1);
}

long long two_sum_edge_count(const TwoSumStats& s) {
    const long long d_count = s.x * s.y * (s.size_f() + s.size_fp() - 2);
    const long long abc_count = s.z * (s.size_union() - 1) * (s.x + s.y + 1);
    return (d_count + abc_count) / 2;
}

Rational average_degree(const TwoSumStats& s) {
    if (s.z < 1 || s.size_union() != s.r)
        throw DomainError("average degree requires a full-dimensional sum "
                          "(F ∪ F' = [r] and F ∩ F' nonempty)");
    const long long v = two_sum_vertex_count(s);
    const long long e = two_sum_edge_count(s);
    return Rational(2 * e) / v;
}

FPolynomial f_decompose(const FPolynomial& f_class, const FPolynomial& f_reduced,
                        const FPolynomial& f_pinned) {
    return fpoly_add(fpoly_sub(fpoly_mul(f_class, f_reduced), fpoly_mul(f_class, f_pinned)),
                     f_pinned);
}

FPolynomial simplex_f(long long n) {
    FPolynomial out;
    if (n <= 0) return out;
    out.coeff.resize(static_cast<std::size_t>(n));
    long long binom = n;  // C(n, 1)
    for (long long i = 0; i < n; ++i) {
        out.coeff[static_cast<std::size_t>(i)] = binom;
        binom = binom * (n - i - 1) / (i + 2);
    }
    return out;
}

FPolynomial two_sum_f_polynomial(const GroundSet& f, const GroundSet& fp) {
    const TwoSumStats s = TwoSumStats::from_sets(f, fp, 0);
    if (s.z == 0) return fpoly_mul(simplex_f(s.size_f()), simplex_f(s.size_fp()));
    // Collapse A = F ∩ F' to one element m: the reduced polytope is the
    // product of simplices on (F\F') ∪ {m} and (F'\F) ∪ {m}; pinning m to 0
    // leaves the product on F\F' and F'\F, empty when either part is.
    const FPolynomial f_class = simplex_f(s.z);
    const FPolynomial f_reduced = fpoly_mul(simplex_f(s.x + 1), simplex_f(s.y + 1));
    const FPolynomial f_pinned = (s.x >= 1 && s.y >= 1)
                                     ? fpoly_mul(simplex_f(s.x), simplex_f(s.y))
                                     : FPolynomial{};
    return f_decompose(f_class, f_reduced, f_pinned);
}

long long d_max(int r) {
    if (r < 1) throw DomainError("ground size must be positive");
    return static_cast<long long>(r) * r / 4;
}

long long d_k_max(int k, int r) {
    if (r < 1) throw DomainError("ground size must be positive");
    if (k < 1 || 2 * k > r)
        throw DomainError("d_k is defined for 1 <= k <= r/2");
    return static_cast<long long>(k) * (r - k);
}

SimplexFamily lower_bound_family(int k, int r) {
    if (k < 1 || k > r - 1) throw DomainError("need 1 <= k <= r - 1");
    std::vector<GroundSet> sets;
    sets.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        GroundSet s{i};
        for (int e = k + 1; e <= r; ++e) s.push_back(e);
        sets.push_back(std::move(s));
    }
    return SimplexFamily(r, sets);
}

long long mantel_extremal(int n, int k) {
    if (n < 1 || k < 1 || 2 * k > n)
        throw DomainError("mantel variant needs 1 <= k <= n/2");
    return static_cast<long long>(k) * (n - k);
}

MantelBruteResult verify_mantel_brute(int n, int k) {
    MantelBruteResult out;
    out.n = n;
    out.k = k;
    out.formula = mantel_extremal(n, k);
    if (n > kMantelBruteMaxN)
        throw CapabilityError("mantel-brute", "brute force guarded to n <= " +
                                                  std::to_string(kMantelBruteMaxN));

    // Edge slots: pair (a, b), a < b, bit index position.
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    const int m = static_cast<int>(slots.size());

    // Triangles as edge-bit masks.
    std::vector<std::uint32_t> triangles;
    auto slot_of = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<int>(std::find(slots.begin(), slots.end(), std::make_pair(a, b)) -
                                slots.begin());
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                triangles.push_back((1u << slot_of(a, b)) | (1u << slot_of(a, c)) |
                                    (1u << slot_of(b, c)));

    // Edges covered by each vertex subset, and the complete bipartite edge
    // sets with a part of size exactly k.
    const std::uint32_t vfull = (1u << n) - 1;
    std::vector<std::uint32_t> covers(vfull + 1, 0);
    for (std::uint32_t vs = 1; vs <= vfull; ++vs) {
        const std::uint32_t low = vs & (~vs + 1);
        const int v = std::countr_zero(low);
        std::uint32_t mask = covers[vs ^ low];
        for (int e = 0; e < m; ++e)
            if (slots[static_cast<std::size_t>(e)].first == v ||
                slots[static_cast<std::size_t>(e)].second == v)
                mask |= 1u << e;
        covers[vs] = mask;
    }
    std::vector<std::uint32_t> small_covers;  // subsets of size <= k, by size
    for (int size = 0; size <= k; ++size)
        for (std::uint32_t vs = 0; vs <= vfull; ++vs)
            if (std::popcount(vs) == size) small_covers.push_back(vs);
    std::vector<std::uint32_t> bipartite;
    for (std::uint32_t vs = 0; vs <= vfull; ++vs) {
        if (std::popcount(vs) != k) continue;
        std::uint32_t mask = 0;
        for (int e = 0; e < m; ++e) {
            const auto [a, b] = slots[static_cast<std::size_t>(e)];
            const bool ina = vs & (1u << a), inb = vs & (1u << b);
            if (ina != inb) mask |= 1u << e;
        }
        bipartite.push_back(mask);
    }

    long long best = -1;
    std::vector<std::uint32_t> maximizers;
    const std::uint32_t efull = (m == 32) ? ~0u : ((1u << m) - 1);
    for (std::uint32_t g = 0;; ++g) {
        bool triangle = false;
        for (std::uint32_t t : triangles)
            if ((g & t) == t) {
                triangle = true;
                break;
            }
        if (!triangle) {
            bool covered = false;
            for (std::uint32_t vs : small_covers)
                if ((g & ~covers[vs]) == 0) {
                    covered = true;
                    break;
                }
            if (covered) {
                const long long edges = std::popcount(g);
                if (edges > best) {
                    best = edges;
                    maximizers.clear();
                }
                if (edges == best) maximizers.push_back(g);
            }
        }
        if (g == efull) break;
    }

    out.brute_max = best;
    out.maximizer_count = maximizers.size();
    out.maximizers_complete_bipartite = !maximizers.empty();
    for (std::uint32_t g : maximizers) {
        bool is_bipartite = false;
        for (std::uint32_t mask : bipartite)
            if (g == mask) {
                is_bipartite = true;
                break;
            }
        if (!is_bipartite) {
            out.maximizers_complete_bipartite = false;
            break;
        }
    }
    return out;
}

}  // namespace minksum
