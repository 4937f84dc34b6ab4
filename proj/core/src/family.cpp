#include "minksum/family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace minksum {

namespace {

void validate_set(int r, const GroundSet& s) {
    if (s.empty()) throw DomainError("family set must be nonempty");
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] < 1 || s[t] > r)
            throw DomainError("set element " + std::to_string(s[t]) +
                              " outside ground set [" + std::to_string(r) + "]");
        if (t > 0 && s[t] <= s[t - 1])
            throw DomainError("set elements must be strictly increasing");
    }
}

// Union-find over 1..r.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplexFamily::SimplexFamily(int ground_size, std::vector<GroundSet> sets)
    : r_(ground_size), sets_(std::move(sets)) {
    if (r_ < 1) throw DomainError("ground size must be positive");
    if (sets_.empty()) throw DomainError("family must contain at least one set");
    std::set<int> support;
    for (auto& s : sets_) {
        validate_set(r_, s);
        support.insert(s.begin(), s.end());
    }
    support_.assign(support.begin(), support.end());
}

const GroundSet& SimplexFamily::set_at(int j) const {
    if (j < 1 || j > set_count())
        throw DomainError("set index " + std::to_string(j) + " out of range");
    return sets_[static_cast<std::size_t>(j - 1)];
}

bool SimplexFamily::in_support(int element) const {
    return std::binary_search(support_.begin(), support_.end(), element);
}

Signature neighborhood(const SimplexFamily& fam, int element) {
    if (element < 1 || element > fam.ground_size())
        throw DomainError("ground element " + std::to_string(element) + " out of range");
    Signature sig;
    for (int j = 1; j <= fam.set_count(); ++j) {
        const GroundSet& s = fam.set_at(j);
        if (std::binary_search(s.begin(), s.end(), element)) sig.push_back(j);
    }
    return sig;
}

Components components(const SimplexFamily& fam) {
    UnionFind uf(fam.ground_size());
    for (const auto& s : fam.sets())
        for (std::size_t t = 1; t < s.size(); ++t) uf.unite(s[0], s[t]);

    std::vector<GroundSet> by_root(fam.ground_size() + 1);
    for (int i : fam.support()) by_root[uf.find(i)].push_back(i);

    Components out;
    out.support_size = static_cast<int>(fam.support().size());
    for (auto& part : by_root)
        if (!part.empty()) out.parts.push_back(std::move(part));
    std::sort(out.parts.begin(), out.parts.end(),
              [](const GroundSet& a, const GroundSet& b) { return a[0] < b[0]; });
    return out;
}

int dimension(const SimplexFamily& fam) {
    Components c = components(fam);
    return c.support_size - c.count();
}

std::vector<GroundSet> signature_classes(const SimplexFamily& fam) {
    std::map<Signature, GroundSet> classes;
    for (int i : fam.support()) classes[neighborhood(fam, i)].push_back(i);
    std::vector<GroundSet> out;
    out.reserve(classes.size());
    for (auto& [sig, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const GroundSet& a, const GroundSet& b) { return a[0] < b[0]; });
    return out;
}

Reduction reduce(const SimplexFamily& fam, const GroundSet& cls) {
    if (cls.empty()) throw DomainError("reduction class must be nonempty");
    const Signature sig = neighborhood(fam, cls[0]);
    for (int i : cls)
        if (neighborhood(fam, i) != sig)
            throw DomainError("reduction class elements have differing signatures");
    const int m = *std::max_element(cls.begin(), cls.end());

    std::vector<GroundSet> reduced;
    reduced.reserve(fam.sets().size());
    for (const auto& s : fam.sets()) {
        GroundSet ns;
        bool had_class = false;
        for (int e : s) {
            if (std::binary_search(cls.begin(), cls.end(), e))
                had_class = true;
            else
                ns.push_back(e);
        }
        if (had_class) ns.push_back(m);
        std::sort(ns.begin(), ns.end());
        reduced.push_back(std::move(ns));
    }
    SimplexFamily reduced_family(fam.ground_size(), reduced);

    bool face_empty = false;
    std::vector<GroundSet> pinned;
    pinned.reserve(reduced.size());
    for (const auto& s : reduced) {
        GroundSet ns;
        for (int e : s)
            if (e != m) ns.push_back(e);
        if (ns.empty()) face_empty = true;
        pinned.push_back(std::move(ns));
    }

    Reduction out{std::move(reduced_family), m, std::nullopt};
    if (!face_empty) out.pinned = SimplexFamily(fam.ground_size(), pinned);
    return out;
}

OrderedPartition::OrderedPartition(int ground_size, std::vector<GroundSet> blocks)
    : r_(ground_size), blocks_(std::move(blocks)), block_of_(ground_size + 1, 0) {
    if (r_ < 1) throw DomainError("ground size must be positive");
    int covered = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) throw DomainError("partition block must be nonempty");
        for (int e : blocks_[b]) {
            if (e < 1 || e > r_) throw DomainError("partition element out of range");
            if (block_of_[e] != 0) throw DomainError("partition blocks must be disjoint");
            block_of_[e] = static_cast<int>(b) + 1;
            ++covered;
        }
        std::sort(blocks_[b].begin(), blocks_[b].end());
    }
    if (covered != r_) throw DomainError("partition must cover the ground set");
}

int OrderedPartition::block_of(int element) const {
    if (element < 1 || element > r_) throw DomainError("partition element out of range");
    return block_of_[element];
}

SimplexFamily face_family(const SimplexFamily& fam, const OrderedPartition& part) {
    if (part.ground_size() != fam.ground_size())
        throw DomainError("partition ground size does not match family");
    std::vector<GroundSet> cut;
    cut.reserve(fam.sets().size());
    for (const auto& s : fam.sets()) {
        int top = 0;
        for (int e : s) top = std::max(top, part.block_of(e));
        GroundSet ns;
        for (int e : s)
            if (part.block_of(e) == top) ns.push_back(e);
        cut.push_back(std::move(ns));
    }
    return SimplexFamily(fam.ground_size(), cut);
}

bool contains_point(const SimplexFamily& fam, const RationalVector& x) {
    const int r = fam.ground_size();
    if (static_cast<int>(x.size()) != r)
        throw DomainError("point dimension does not match ground size");
    if (r > kContainsPointMaxGround)
        throw CapabilityError("contains_point",
                              "ground size " + std::to_string(r) +
                                  " exceeds the subset-inequality guard (" +
                                  std::to_string(kContainsPointMaxGround) +
                                  "); use exactlp::in_hull for LP membership");

    Rational total = 0;
    for (const Rational& xi : x) {
        if (xi < 0) return false;
        total += xi;
    }
    if (total != fam.set_count()) return false;

    std::vector<std::uint32_t> set_mask(fam.sets().size(), 0);
    for (std::size_t j = 0; j < fam.sets().size(); ++j)
        for (int e : fam.sets()[j]) set_mask[j] |= 1u << (e - 1);

    const std::uint32_t full = (r == 32) ? ~0u : ((1u << r) - 1);
    // Subset sums and met-set counts share the lowest-bit recurrence.
    std::vector<Rational> subset_sum(static_cast<std::size_t>(full) + 1);
    subset_sum[0] = 0;
    for (std::uint32_t d = 1; d <= full; ++d) {
        const std::uint32_t low = d & (~d + 1);
        const int i = std::countr_zero(low);
        subset_sum[d] = subset_sum[d ^ low] + x[static_cast<std::size_t>(i)];
        int met = 0;
        for (std::uint32_t mask : set_mask) met += (mask & d) != 0;
        if (subset_sum[d] > met) return false;
    }
    return true;
}

namespace {

void partitions_rec(int r, int next, std::vector<GroundSet>& blocks,
                    const std::function<void(const OrderedPartition&)>& visit) {
    if (next > r) {
        visit(OrderedPartition(r, blocks));
        return;
    }
    // Element `next` joins an existing block or opens a new block at any
    // position; this yields every ordered partition exactly once. Deeper
    // levels insert and erase blocks, so index rather than hold references.
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        blocks[bi].push_back(next);
        partitions_rec(r, next + 1, blocks, visit);
        blocks[bi].pop_back();
    }
    for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
        blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), GroundSet{next});
        partitions_rec(r, next + 1, blocks, visit);
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
    }
}

}  // namespace

void for_each_ordered_partition(
    int ground_size, const std::function<void(const OrderedPartition&)>& visit) {
    if (ground_size < 1) throw DomainError("ground size must be positive");
    std::vector<GroundSet> blocks;
    partitions_rec(ground_size, 1, blocks, visit);
}

std::uint64_t ordered_partition_count(int ground_size) {
    std::uint64_t n = 0;
    for_each_ordered_partition(ground_size, [&](const OrderedPartition&) { ++n; });
    return n;
}

}  // namespace minksum
