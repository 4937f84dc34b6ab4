#include "minksum/repfn.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "minksum/parallel.hpp"

namespace minksum {

namespace {

// Coordinate vectors pack into 128 bits (one nibble per coordinate, element 1
// in the most significant nibble) whenever r <= 32 and every count fits a
// nibble. Comparing (hi, lo) then matches lexicographic order on coordinates.
struct Key128 {
    std::uint64_t hi = 0, lo = 0;
    friend bool operator==(const Key128&, const Key128&) = default;
    friend bool operator<(const Key128& a, const Key128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

struct Key128Hash {
    std::size_t operator()(const Key128& k) const {
        std::uint64_t x = k.hi * 0x9e3779b97f4a7c15ULL ^ k.lo;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

bool packable(const SimplexFamily& fam) {
    return fam.ground_size() <= 32 && fam.set_count() <= 15;
}

// Adjusts one coordinate nibble; counts never exceed 15, so nibbles cannot
// carry into their neighbors.
void key_add(Key128& key, int element, int delta) {
    std::uint64_t& word = element <= 16 ? key.hi : key.lo;
    const int shift = ((element <= 16 ? 16 : 32) - element) * 4;
    const std::uint64_t magnitude = static_cast<std::uint64_t>(delta < 0 ? -delta : delta)
                                    << shift;
    if (delta < 0)
        word -= magnitude;
    else
        word += magnitude;
}

LatticePoint unpack(const Key128& key, int r) {
    LatticePoint p(static_cast<std::size_t>(r), 0);
    for (int i = 1; i <= r; ++i) {
        if (i <= 16)
            p[static_cast<std::size_t>(i - 1)] =
                static_cast<int>((key.hi >> ((16 - i) * 4)) & 0xF);
        else
            p[static_cast<std::size_t>(i - 1)] =
                static_cast<int>((key.lo >> ((32 - i) * 4)) & 0xF);
    }
    return p;
}

void check_budget(const SimplexFamily& fam, std::uint64_t budget) {
    const std::uint64_t n = repfn_count(fam);
    if (n > budget)
        throw CapabilityError(
            "repfn-enumeration",
            "family has " + std::to_string(n) + " rep-functions, budget is " +
                std::to_string(budget) + " (raise via options or MINKSUM_BUDGET)");
}

// Census over a lexicographic index range [begin, end): image -> count.
std::unordered_map<Key128, std::uint64_t, Key128Hash> census_range(
    const SimplexFamily& fam, std::uint64_t begin, std::uint64_t end) {
    std::unordered_map<Key128, std::uint64_t, Key128Hash> counts;
    if (begin >= end) return counts;
    const int k = fam.set_count();
    RepFunction f = repfn_at(fam, begin);
    std::vector<int> pos(static_cast<std::size_t>(k), 0);
    Key128 key;
    for (int j = 1; j <= k; ++j) {
        const GroundSet& s = fam.set_at(j);
        const auto it = std::lower_bound(s.begin(), s.end(), f.choices[j - 1]);
        pos[static_cast<std::size_t>(j - 1)] = static_cast<int>(it - s.begin());
        key_add(key, f.choices[j - 1], +1);
    }
    for (std::uint64_t idx = begin;; ++idx) {
        ++counts[key];
        if (idx + 1 == end) break;
        // Odometer advance from the last set; incremental key update.
        int j = k - 1;
        for (;; --j) {
            const GroundSet& s = fam.sets()[static_cast<std::size_t>(j)];
            key_add(key, s[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])], -1);
            if (pos[static_cast<std::size_t>(j)] + 1 < static_cast<int>(s.size())) {
                ++pos[static_cast<std::size_t>(j)];
                key_add(key, s[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])], +1);
                break;
            }
            pos[static_cast<std::size_t>(j)] = 0;
            key_add(key, s[0], +1);
        }
    }
    return counts;
}

// Full census as a key-sorted vector. Requires a packable family.
std::vector<std::pair<Key128, std::uint64_t>> census(const SimplexFamily& fam,
                                                     const EnumerationOptions& opts) {
    check_budget(fam, opts.budget);
    const std::uint64_t total = repfn_count(fam);
    const int workers =
        std::max(1, std::min<int>(opts.workers, static_cast<int>(std::min<std::uint64_t>(
                                      total, 256))));
    std::vector<std::unordered_map<Key128, std::uint64_t, Key128Hash>> parts(
        static_cast<std::size_t>(workers));
    const std::uint64_t chunk = (total + workers - 1) / workers;
    parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
        const std::uint64_t begin = chunk * w;
        const std::uint64_t end = std::min(total, begin + chunk);
        parts[w] = census_range(fam, begin, end);
    });
    std::unordered_map<Key128, std::uint64_t, Key128Hash> merged = std::move(parts[0]);
    for (std::size_t w = 1; w < parts.size(); ++w)
        for (const auto& [key, count] : parts[w]) merged[key] += count;
    std::vector<std::pair<Key128, std::uint64_t>> out(merged.begin(), merged.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Fallback census for families outside the packed representation.
MultiplicityMap census_map(const SimplexFamily& fam, const EnumerationOptions& opts) {
    MultiplicityMap counts;
    for_each_repfn(
        fam,
        [&](const RepFunction& f) { ++counts[point_of(f, fam.ground_size())]; },
        opts.budget);
    return counts;
}

}  // namespace

std::uint64_t repfn_count(const SimplexFamily& fam) {
    std::uint64_t n = 1;
    for (const auto& s : fam.sets()) {
        const std::uint64_t size = s.size();
        if (n > UINT64_MAX / size) return UINT64_MAX;
        n *= size;
    }
    return n;
}

LatticePoint point_of(const RepFunction& f, int ground_size) {
    LatticePoint p(static_cast<std::size_t>(ground_size), 0);
    for (int choice : f.choices) {
        if (choice < 1 || choice > ground_size)
            throw DomainError("rep-function choice out of ground range");
        ++p[static_cast<std::size_t>(choice - 1)];
    }
    return p;
}

RepFunction repfn_at(const SimplexFamily& fam, std::uint64_t index) {
    if (index >= repfn_count(fam)) throw DomainError("rep-function index out of range");
    const int k = fam.set_count();
    RepFunction f;
    f.choices.resize(static_cast<std::size_t>(k));
    for (int j = k; j >= 1; --j) {
        const GroundSet& s = fam.set_at(j);
        f.choices[static_cast<std::size_t>(j - 1)] =
            s[static_cast<std::size_t>(index % s.size())];
        index /= s.size();
    }
    return f;
}

bool is_repfn(const SimplexFamily& fam, const RepFunction& f) {
    if (static_cast<int>(f.choices.size()) != fam.set_count()) return false;
    for (int j = 1; j <= fam.set_count(); ++j) {
        const GroundSet& s = fam.set_at(j);
        if (!std::binary_search(s.begin(), s.end(), f.choices[static_cast<std::size_t>(j - 1)]))
            return false;
    }
    return true;
}

void for_each_repfn(const SimplexFamily& fam,
                    const std::function<void(const RepFunction&)>& visit,
                    std::uint64_t budget) {
    check_budget(fam, budget);
    const int k = fam.set_count();
    std::vector<int> pos(static_cast<std::size_t>(k), 0);
    RepFunction f;
    f.choices.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        f.choices[static_cast<std::size_t>(j)] = fam.sets()[static_cast<std::size_t>(j)][0];
    for (;;) {
        visit(f);
        int j = k - 1;
        for (; j >= 0; --j) {
            const GroundSet& s = fam.sets()[static_cast<std::size_t>(j)];
            if (pos[static_cast<std::size_t>(j)] + 1 < static_cast<int>(s.size())) {
                ++pos[static_cast<std::size_t>(j)];
                f.choices[static_cast<std::size_t>(j)] =
                    s[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])];
                break;
            }
            pos[static_cast<std::size_t>(j)] = 0;
            f.choices[static_cast<std::size_t>(j)] = s[0];
        }
        if (j < 0) return;
    }
}

std::vector<RepFunction> enumerate_repfns(const SimplexFamily& fam,
                                          const EnumerationOptions& opts) {
    std::vector<RepFunction> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(repfn_count(fam), 1 << 20)));
    for_each_repfn(fam, [&](const RepFunction& f) { out.push_back(f); }, opts.budget);
    return out;
}

MultiplicityMap multiplicity_map(const SimplexFamily& fam, const EnumerationOptions& opts) {
    if (!packable(fam)) return census_map(fam, opts);
    MultiplicityMap out;
    for (const auto& [key, count] : census(fam, opts))
        out.emplace_hint(out.end(), unpack(key, fam.ground_size()), count);
    return out;
}

std::vector<LatticePoint> vertices(const SimplexFamily& fam, const EnumerationOptions& opts) {
    std::vector<LatticePoint> out;
    if (!packable(fam)) {
        for (const auto& [point, count] : census_map(fam, opts))
            if (count == 1) out.push_back(point);
        return out;
    }
    for (const auto& [key, count] : census(fam, opts))
        if (count == 1) out.push_back(unpack(key, fam.ground_size()));
    return out;
}

std::uint64_t vertex_count(const SimplexFamily& fam, const EnumerationOptions& opts) {
    std::uint64_t n = 0;
    if (!packable(fam)) {
        for (const auto& [point, count] : census_map(fam, opts)) n += count == 1;
        return n;
    }
    for (const auto& [key, count] : census(fam, opts)) n += count == 1;
    return n;
}

std::vector<LatticePoint> integer_points(const SimplexFamily& fam,
                                         const EnumerationOptions& opts) {
    std::vector<LatticePoint> out;
    if (!packable(fam)) {
        for (const auto& [point, count] : census_map(fam, opts)) out.push_back(point);
        return out;
    }
    for (const auto& [key, count] : census(fam, opts)) out.push_back(unpack(key, fam.ground_size()));
    return out;
}

std::pair<RepFunction, RepFunction> meet_join(const SimplexFamily& fam,
                                              const RepFunction& f, const RepFunction& g) {
    const int k = fam.set_count();
    if (static_cast<int>(f.choices.size()) != k || static_cast<int>(g.choices.size()) != k)
        throw DomainError("rep-function length does not match family");
    RepFunction lo, hi;
    lo.choices.resize(static_cast<std::size_t>(k));
    hi.choices.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        lo.choices[static_cast<std::size_t>(j)] =
            std::min(f.choices[static_cast<std::size_t>(j)], g.choices[static_cast<std::size_t>(j)]);
        hi.choices[static_cast<std::size_t>(j)] =
            std::max(f.choices[static_cast<std::size_t>(j)], g.choices[static_cast<std::size_t>(j)]);
    }
    if (!is_repfn(fam, lo) || !is_repfn(fam, hi))
        throw StructureError("componentwise min/max leaves the family's sets");
    return {std::move(lo), std::move(hi)};
}

std::vector<RepFunction> alternating_interpolate(const SimplexFamily& fam,
                                                 const RepFunction& f, const RepFunction& g,
                                                 int i1, int i2, int t) {
    if (!is_repfn(fam, f) || !is_repfn(fam, g))
        throw DomainError("inputs are not rep-functions of the family");
    if (t < 1) throw DomainError("step count t must be positive");
    const int r = fam.ground_size();
    if (i1 < 1 || i1 > r || i2 < 1 || i2 > r || i1 == i2)
        throw DomainError("invalid coordinate pair");
    LatticePoint expected = point_of(f, r);
    expected[static_cast<std::size_t>(i1 - 1)] += t;
    expected[static_cast<std::size_t>(i2 - 1)] -= t;
    if (expected[static_cast<std::size_t>(i2 - 1)] < 0 || point_of(g, r) != expected)
        throw DomainError("u(g) != u(f) + t(e_i1 - e_i2)");

    std::vector<RepFunction> out;
    RepFunction cur = f;
    const int k = fam.set_count();
    for (int step = 1; step < t; ++step) {
        // Shortest alternating path from i2 to i1 in the digraph whose arcs
        // are j : cur(j) -> g(j); BFS scans arcs in increasing j.
        std::vector<int> parent_arc(static_cast<std::size_t>(r + 1), -1);
        std::vector<bool> seen(static_cast<std::size_t>(r + 1), false);
        std::deque<int> queue{i2};
        seen[static_cast<std::size_t>(i2)] = true;
        while (!queue.empty() && !seen[static_cast<std::size_t>(i1)]) {
            const int node = queue.front();
            queue.pop_front();
            for (int j = 0; j < k; ++j) {
                if (cur.choices[static_cast<std::size_t>(j)] != node) continue;
                const int to = g.choices[static_cast<std::size_t>(j)];
                if (to == node || seen[static_cast<std::size_t>(to)]) continue;
                seen[static_cast<std::size_t>(to)] = true;
                parent_arc[static_cast<std::size_t>(to)] = j;
                queue.push_back(to);
            }
        }
        if (!seen[static_cast<std::size_t>(i1)])
            throw InternalError("no alternating path from i2 to i1; invariant violated");
        for (int node = i1; node != i2;) {
            const int j = parent_arc[static_cast<std::size_t>(node)];
            const int from = cur.choices[static_cast<std::size_t>(j)];
            cur.choices[static_cast<std::size_t>(j)] = g.choices[static_cast<std::size_t>(j)];
            node = from;
        }
        out.push_back(cur);
    }
    return out;
}

LatticePoint greedy_vertex(const SimplexFamily& fam, const std::vector<int>& order) {
    const int r = fam.ground_size();
    if (static_cast<int>(order.size()) != r) throw DomainError("order must list all of [r]");
    std::vector<int> rank(static_cast<std::size_t>(r + 1), -1);
    for (int pos = 0; pos < r; ++pos) {
        const int e = order[static_cast<std::size_t>(pos)];
        if (e < 1 || e > r || rank[static_cast<std::size_t>(e)] != -1)
            throw DomainError("order is not a permutation of [r]");
        rank[static_cast<std::size_t>(e)] = pos;
    }
    LatticePoint p(static_cast<std::size_t>(r), 0);
    for (const auto& s : fam.sets()) {
        int best = s[0];
        for (int e : s)
            if (rank[static_cast<std::size_t>(e)] > rank[static_cast<std::size_t>(best)]) best = e;
        ++p[static_cast<std::size_t>(best - 1)];
    }
    return p;
}

}  // namespace minksum
