#include "minksum/master.hpp"

#include <algorithm>

namespace minksum {

namespace {

std::vector<Signature> signatures_for(int k, MasterLabeling labeling) {
    if (labeling == MasterLabeling::Paper3) {
        if (k != 3) throw DomainError("paper3 labeling is defined only for k = 3");
        return {{1, 2, 3}, {1, 2}, {2, 3}, {1, 3}, {1}, {2}, {3}};
    }
    std::vector<Signature> subsets;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Signature s;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) s.push_back(b + 1);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const Signature& a, const Signature& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return subsets;
}

SimplexFamily family_from_signatures(int k, const std::vector<Signature>& sigs) {
    const int r = static_cast<int>(sigs.size());
    std::vector<GroundSet> sets(static_cast<std::size_t>(k));
    for (int i = 1; i <= r; ++i)
        for (int j : sigs[static_cast<std::size_t>(i - 1)])
            sets[static_cast<std::size_t>(j - 1)].push_back(i);
    return SimplexFamily(r, sets);
}

}  // namespace

MasterFamily::MasterFamily(int k, MasterLabeling labeling)
    : k_(k),
      labeling_(labeling),
      signatures_(signatures_for(k, labeling)),
      family_(family_from_signatures(k, signatures_)) {
    for (int i = 1; i <= static_cast<int>(signatures_.size()); ++i)
        coordinate_of_.emplace(signatures_[static_cast<std::size_t>(i - 1)], i);
}

const Signature& MasterFamily::signature_of(int coordinate) const {
    if (coordinate < 1 || coordinate > static_cast<int>(signatures_.size()))
        throw DomainError("master coordinate out of range");
    return signatures_[static_cast<std::size_t>(coordinate - 1)];
}

int MasterFamily::coordinate_of(const Signature& sig) const {
    const auto it = coordinate_of_.find(sig);
    if (it == coordinate_of_.end()) throw DomainError("unknown master signature");
    return it->second;
}

MasterFamily build_master(int k, MasterLabeling labeling) {
    if (k < 1 || k > kMasterMaxK)
        throw DomainError("master polytope order must lie in [1, " +
                          std::to_string(kMasterMaxK) + "]");
    return MasterFamily(k, labeling);
}

LatticePoint h_projection(const SimplexFamily& fam, const LatticePoint& u,
                          const MasterFamily& master) {
    if (fam.set_count() != master.k())
        throw DomainError("family set count does not match master order");
    if (static_cast<int>(u.size()) != fam.ground_size())
        throw DomainError("point dimension does not match ground size");
    LatticePoint v(static_cast<std::size_t>(master.family().ground_size()), 0);
    for (int i = 1; i <= fam.ground_size(); ++i) {
        const int ui = u[static_cast<std::size_t>(i - 1)];
        if (ui == 0) continue;
        if (ui < 0) throw DomainError("point coordinates must be nonnegative");
        const Signature sig = neighborhood(fam, i);
        if (sig.empty())
            throw DomainError("positive coordinate outside the family support");
        v[static_cast<std::size_t>(master.coordinate_of(sig) - 1)] += ui;
    }
    return v;
}

bool is_vertex_via_master(const SimplexFamily& fam, const LatticePoint& u,
                          const MasterFamily& master,
                          const std::set<LatticePoint>& master_vertices) {
    // Two distinct positive coordinates with equal signatures average to the
    // same point from two rep-functions, so such a point is never a vertex.
    std::map<Signature, int> positive_of;
    for (int i = 1; i <= fam.ground_size(); ++i) {
        if (u[static_cast<std::size_t>(i - 1)] <= 0) continue;
        const Signature sig = neighborhood(fam, i);
        const auto [it, inserted] = positive_of.emplace(sig, i);
        if (!inserted && it->second != i) return false;
    }
    return master_vertices.count(h_projection(fam, u, master)) > 0;
}

bool edge_types_via_master(const SimplexFamily& fam, const SkeletonGraph& skeleton,
                           const MasterFamily& master,
                           const SkeletonGraph& master_skeleton) {
    std::vector<LatticePoint> projected;
    projected.reserve(skeleton.vertex_count());
    for (const auto& v : skeleton.vertices())
        projected.push_back(h_projection(fam, v, master));

    std::set<std::pair<LatticePoint, LatticePoint>> master_edges;
    for (const auto& e : master_skeleton.edges()) {
        LatticePoint a = master_skeleton.vertices()[static_cast<std::size_t>(e.u)];
        LatticePoint b = master_skeleton.vertices()[static_cast<std::size_t>(e.v)];
        if (b < a) std::swap(a, b);
        master_edges.emplace(std::move(a), std::move(b));
    }

    for (const auto& e : skeleton.edges()) {
        LatticePoint a = projected[static_cast<std::size_t>(e.u)];
        LatticePoint b = projected[static_cast<std::size_t>(e.v)];
        if (a == b) continue;  // internal edge within one vertex type
        if (b < a) std::swap(a, b);
        if (!master_edges.count({a, b})) return false;
    }
    return true;
}

}  // namespace minksum
