#include "gds/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "gds/errors.hpp"

namespace gds {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Branch and bound over a family re-indexed to elements 0..U-1.
//
// Each node branches on the uncovered set with the fewest admissible
// elements: the i-th branch takes its i-th element and bans the previous
// ones. Nodes are pruned with a packing bound (pairwise disjoint uncovered
// sets each need their own element).
class HittingSearch {
public:
    explicit HittingSearch(const SetFamily& family)
        : universe_size_(family.universe.size()), elem_sets_(universe_size_) {
        sets_.reserve(family.sets.size());
        for (std::size_t s = 0; s < family.sets.size(); ++s) {
            std::vector<int> idx;
            idx.reserve(family.sets[s].size());
            for (int label : family.sets[s]) {
                auto it = std::lower_bound(family.universe.begin(), family.universe.end(), label);
                idx.push_back(static_cast<int>(it - family.universe.begin()));
            }
            for (int e : idx) elem_sets_[static_cast<std::size_t>(e)].push_back(static_cast<int>(s));
            sets_.push_back(std::move(idx));
        }
        mark_.assign(universe_size_, 0);
    }

    // A hitting set of size < limit containing `forced` and avoiding
    // `banned`, of minimum size among such; nullopt when none exists.
    std::optional<std::vector<int>> solve(std::size_t limit, const std::vector<int>& forced,
                                          const std::vector<char>& banned) {
        hits_.assign(sets_.size(), 0);
        uncovered_ = sets_.size();
        banned_ = banned;
        banned_.resize(universe_size_, 0);
        chosen_.clear();
        best_.clear();
        best_size_ = limit;
        found_ = false;
        for (int e : forced) take(e);
        search();
        if (!found_) return std::nullopt;
        return best_;
    }

    std::size_t set_count() const { return sets_.size(); }
    const std::vector<int>& sets_of(int e) const { return elem_sets_[static_cast<std::size_t>(e)]; }

private:
    void take(int e) {
        chosen_.push_back(e);
        for (int s : elem_sets_[static_cast<std::size_t>(e)])
            if (hits_[static_cast<std::size_t>(s)]++ == 0) --uncovered_;
    }

    void untake(int e) {
        chosen_.pop_back();
        for (int s : elem_sets_[static_cast<std::size_t>(e)])
            if (--hits_[static_cast<std::size_t>(s)] == 0) ++uncovered_;
    }

    std::size_t packing_bound() {
        ++stamp_;
        std::size_t count = 0;
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            if (hits_[s] != 0) continue;
            bool disjoint = true;
            for (int e : sets_[s]) {
                if (!banned_[static_cast<std::size_t>(e)] && mark_[static_cast<std::size_t>(e)] == stamp_) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            ++count;
            for (int e : sets_[s]) mark_[static_cast<std::size_t>(e)] = stamp_;
        }
        return count;
    }

    void search() {
        if (uncovered_ == 0) {
            if (chosen_.size() < best_size_) {
                best_ = chosen_;
                best_size_ = chosen_.size();
                found_ = true;
            }
            return;
        }
        if (chosen_.size() + 1 >= best_size_) return;
        if (chosen_.size() + packing_bound() >= best_size_) return;

        std::size_t branch_set = sets_.size();
        std::size_t fewest = universe_size_ + 1;
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            if (hits_[s] != 0) continue;
            std::size_t avail = 0;
            for (int e : sets_[s]) avail += banned_[static_cast<std::size_t>(e)] ? 0 : 1;
            if (avail < fewest) {
                fewest = avail;
                branch_set = s;
                if (avail <= 1) break;
            }
        }
        if (fewest == 0) return;

        std::vector<std::pair<int, int>> candidates;  // (-uncovered hits, element)
        for (int e : sets_[branch_set]) {
            if (banned_[static_cast<std::size_t>(e)]) continue;
            int gain = 0;
            for (int s : elem_sets_[static_cast<std::size_t>(e)]) gain += hits_[static_cast<std::size_t>(s)] == 0;
            candidates.emplace_back(-gain, e);
        }
        std::sort(candidates.begin(), candidates.end());

        std::vector<int> banned_here;
        for (auto [neg_gain, e] : candidates) {
            take(e);
            search();
            untake(e);
            banned_[static_cast<std::size_t>(e)] = 1;
            banned_here.push_back(e);
            if (chosen_.size() + 1 >= best_size_) break;
        }
        for (int e : banned_here) banned_[static_cast<std::size_t>(e)] = 0;
    }

    std::size_t universe_size_;
    std::vector<std::vector<int>> sets_;
    std::vector<std::vector<int>> elem_sets_;
    std::vector<int> hits_;
    std::vector<char> banned_;
    std::vector<int> mark_;
    int stamp_ = 0;
    std::size_t uncovered_ = 0;
    std::vector<int> chosen_;
    std::vector<int> best_;
    std::size_t best_size_ = 0;
    bool found_ = false;
};

void check_family(const SetFamily& family) {
    if (family.universe.size() > kMaxHittingUniverse && family.sets.size() > kMaxHittingSets)
        throw CapabilityError("min_hitting_set: universe of " + std::to_string(family.universe.size()) +
                              " elements and " + std::to_string(family.sets.size()) +
                              " sets exceeds the exact-search guard");
    for (std::size_t s = 0; s < family.sets.size(); ++s)
        if (family.sets[s].empty())
            throw InfeasibleError("member set " + std::to_string(s + 1) + " is empty and cannot be hit");
}

}  // namespace

SetFamily SetFamily::from_sets(std::vector<std::vector<int>> sets) {
    SetFamily f;
    for (auto& s : sets) {
        sort_unique(s);
        f.universe.insert(f.universe.end(), s.begin(), s.end());
    }
    sort_unique(f.universe);
    f.sets = std::move(sets);
    return f;
}

SetFamily SetFamily::over(std::vector<int> universe, std::vector<std::vector<int>> sets) {
    sort_unique(universe);
    for (auto& s : sets) {
        sort_unique(s);
        for (int e : s)
            if (!std::binary_search(universe.begin(), universe.end(), e))
                throw InputError("set element " + std::to_string(e) + " is outside the universe");
    }
    return {std::move(universe), std::move(sets)};
}

CoverResult greedy_hitting_set(const SetFamily& family, std::mt19937_64* rng) {
    check_family(family);
    HittingSearch index(family);
    const std::size_t u = family.universe.size();
    std::vector<char> hit(family.sets.size(), 0);
    std::vector<int> gain(u, 0);
    for (std::size_t e = 0; e < u; ++e) gain[e] = static_cast<int>(index.sets_of(static_cast<int>(e)).size());
    std::size_t remaining = family.sets.size();

    CoverResult out;
    std::vector<int> ties;
    while (remaining > 0) {
        int best = *std::max_element(gain.begin(), gain.end());
        ties.clear();
        for (std::size_t e = 0; e < u; ++e)
            if (gain[e] == best) ties.push_back(static_cast<int>(e));
        int pick = rng ? ties[static_cast<std::size_t>((*rng)() % ties.size())] : ties.front();
        out.elements.push_back(family.universe[static_cast<std::size_t>(pick)]);
        for (int s : index.sets_of(pick)) {
            if (hit[static_cast<std::size_t>(s)]) continue;
            hit[static_cast<std::size_t>(s)] = 1;
            --remaining;
            for (int label : family.sets[static_cast<std::size_t>(s)]) {
                auto it = std::lower_bound(family.universe.begin(), family.universe.end(), label);
                --gain[static_cast<std::size_t>(it - family.universe.begin())];
            }
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::optional<std::size_t> min_hitting_set_size(const SetFamily& family, std::size_t limit) {
    if (family.sets.empty()) return limit > 0 ? std::optional<std::size_t>{0} : std::nullopt;
    std::size_t upper = greedy_hitting_set(family).size();
    HittingSearch search(family);
    std::vector<char> none(family.universe.size(), 0);
    if (auto found = search.solve(std::min(limit, upper), {}, none)) return found->size();
    if (upper < limit) return upper;
    return std::nullopt;
}

CoverResult min_hitting_set(const SetFamily& family) {
    check_family(family);
    if (family.sets.empty()) return {};

    const std::size_t u = family.universe.size();
    HittingSearch search(family);
    std::vector<char> banned(u, 0);
    std::size_t optimum = greedy_hitting_set(family).size();
    if (auto found = search.solve(optimum, {}, banned)) optimum = found->size();

    // Fix elements in increasing label order, keeping each one whenever a
    // minimum solution extending the current prefix still exists.
    std::vector<int> prefix;
    std::vector<char> hit(family.sets.size(), 0);
    std::size_t unhit = family.sets.size();
    for (std::size_t e = 0; e < u && unhit > 0; ++e) {
        const auto& touched = search.sets_of(static_cast<int>(e));
        bool useful = std::any_of(touched.begin(), touched.end(),
                                  [&](int s) { return !hit[static_cast<std::size_t>(s)]; });
        if (useful && prefix.size() < optimum) {
            prefix.push_back(static_cast<int>(e));
            if (search.solve(optimum + 1, prefix, banned)) {
                for (int s : touched)
                    if (!hit[static_cast<std::size_t>(s)]) hit[static_cast<std::size_t>(s)] = 1, --unhit;
                continue;
            }
            prefix.pop_back();
        }
        banned[e] = 1;
    }
    if (unhit != 0 || prefix.size() != optimum)
        throw InternalError("min_hitting_set: lexicographic reconstruction lost the optimum");

    CoverResult out;
    for (int e : prefix) out.elements.push_back(family.universe[static_cast<std::size_t>(e)]);
    return out;
}

bool is_vertex_cover(const SimpleGraph& h, std::span<const int> cover) {
    std::vector<char> in(static_cast<std::size_t>(h.n) + 1, 0);
    for (int v : cover)
        if (v >= 1 && v <= h.n) in[static_cast<std::size_t>(v)] = 1;
    return std::all_of(h.edges.begin(), h.edges.end(), [&](const Edge& e) {
        return in[static_cast<std::size_t>(e.first)] || in[static_cast<std::size_t>(e.second)];
    });
}

namespace {

class VertexCoverSearch {
public:
    explicit VertexCoverSearch(const SimpleGraph& h) : n_(h.n), adj_(static_cast<std::size_t>(h.n), 0) {
        for (auto [u, v] : h.edges) {
            adj_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
            adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
        }
    }

    std::uint64_t solve() {
        std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        best_ = all;
        best_size_ = n_ + 1;
        search(all, 0);
        return best_;
    }

private:
    // `alive`: vertices still in the residual graph; `cover`: chosen so far.
    void search(std::uint64_t alive, std::uint64_t cover) {
        int size = std::popcount(cover);
        int pick = -1, max_deg = 0, twice_edges = 0;
        for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(adj_[static_cast<std::size_t>(v)] & alive);
            twice_edges += d;
            if (d > max_deg) pick = v, max_deg = d;
        }
        if (max_deg == 0) {
            if (size < best_size_) best_ = cover, best_size_ = size;
            return;
        }
        int edges = twice_edges / 2;
        if (size + (edges + max_deg - 1) / max_deg >= best_size_) return;

        std::uint64_t bit = std::uint64_t{1} << pick;
        search(alive & ~bit, cover | bit);
        std::uint64_t nbrs = adj_[static_cast<std::size_t>(pick)] & alive;
        search(alive & ~(nbrs | bit), cover | nbrs);
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t best_ = 0;
    int best_size_ = 0;
};

}  // namespace

CoverResult min_vertex_cover(const SimpleGraph& h) {
    if (h.n > kMaxVertexCoverVertices)
        throw CapabilityError("min_vertex_cover: " + std::to_string(h.n) +
                              " vertices exceeds the exact-search guard of " +
                              std::to_string(kMaxVertexCoverVertices));
    for (auto [u, v] : h.edges)
        if (u < 1 || v < 1 || u > h.n || v > h.n || u == v)
            throw InputError("min_vertex_cover: malformed edge " + std::to_string(u) + "-" + std::to_string(v));
    CoverResult out;
    if (h.edges.empty()) return out;
    std::uint64_t mask = VertexCoverSearch(h).solve();
    for (; mask != 0; mask &= mask - 1) out.elements.push_back(std::countr_zero(mask) + 1);
    return out;
}

SetFamily descent_family(const OrderedGraph& g, const ProperColoring& c) {
    std::vector<int> universe(static_cast<std::size_t>(g.size()));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<std::vector<int>> sets;
    for (const auto& d : find_descents(g, c)) sets.push_back(d.vertices());
    return SetFamily{std::move(universe), std::move(sets)};
}

GdnResult gdn_fixed(const OrderedGraph& g, const ProperColoring& c) {
    auto family = descent_family(g, c);
    auto cover = min_hitting_set(family);
    GdnResult out;
    out.size = cover.size();
    out.witness = c.restrict_to(cover.elements);
    out.coloring = c.colors();
    return out;
}

std::uint64_t for_each_proper_coloring(const OrderedGraph& g, int k,
                                       const std::function<bool(const ProperColoring&)>& visit) {
    const int n = g.size();
    if (n == 0 || k < 1) return 0;

    // Breadth-first order within each component keeps colors forced early.
    std::vector<Vertex> seq;
    std::vector<char> queued(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex s = 1; s <= n; ++s) {
        if (queued[static_cast<std::size_t>(s)]) continue;
        queued[static_cast<std::size_t>(s)] = 1;
        std::size_t head = seq.size();
        seq.push_back(s);
        while (head < seq.size()) {
            Vertex v = seq[head++];
            for (Vertex u : g.neighbors(v))
                if (!queued[static_cast<std::size_t>(u)]) queued[static_cast<std::size_t>(u)] = 1, seq.push_back(u);
        }
    }

    std::vector<Color> colors(static_cast<std::size_t>(n), 0);
    std::uint64_t visited = 0;
    bool stop = false;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (stop) return;
        if (i == seq.size()) {
            ++visited;
            if (!visit(ProperColoring(colors))) stop = true;
            return;
        }
        Vertex v = seq[i];
        for (Color c = 1; c <= k && !stop; ++c) {
            bool clash = false;
            for (Vertex u : g.neighbors(v))
                if (colors[static_cast<std::size_t>(u - 1)] == c) { clash = true; break; }
            if (clash) continue;
            colors[static_cast<std::size_t>(v - 1)] = c;
            extend(i + 1);
        }
        colors[static_cast<std::size_t>(v - 1)] = 0;
    };
    extend(0);
    return visited;
}

GdnResult gdn(const OrderedGraph& g) {
    if (g.size() > kMaxGdnVertices)
        throw CapabilityError("gdn: " + std::to_string(g.size()) + " vertices exceeds the guard of " +
                              std::to_string(kMaxGdnVertices));
    if (g.size() == 0) return {};
    const int chi = chromatic_number(g);

    std::optional<ProperColoring> best;
    std::size_t best_size = static_cast<std::size_t>(g.size()) + 1;
    std::uint64_t seen = 0;
    for_each_proper_coloring(g, chi, [&](const ProperColoring& c) {
        if (++seen > kMaxGdnColorings)
            throw CapabilityError("gdn: more than " + std::to_string(kMaxGdnColorings) +
                                  " proper colorings to examine");
        if (auto size = min_hitting_set_size(descent_family(g, c), best_size)) {
            best_size = *size;
            best = c;
        }
        return best_size > 0;
    });
    if (!best) throw InternalError("gdn: no proper coloring with chi colors");
    return gdn_fixed(g, *best);
}

int brute_force_gdn_oracle(const OrderedGraph& g) {
    const int n = g.size();
    if (n > kMaxOracleVertices)
        throw CapabilityError("brute_force_gdn_oracle: " + std::to_string(n) +
                              " vertices exceeds the guard of " + std::to_string(kMaxOracleVertices));
    if (n == 0) return 0;
    const int chi = chromatic_number(g);

    for (int k = 0; k <= n; ++k) {
        // Subsets of size k as bitmasks, then every coloring of them.
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<Vertex> members;
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint32_t{1} << v)) members.push_back(v + 1);
            std::vector<Color> assign(static_cast<std::size_t>(k), 1);
            while (true) {
                PartialColoring s;
                for (std::size_t i = 0; i < members.size(); ++i) s.emplace(members[i], assign[i]);
                if (is_gds_with_chi(g, s, chi)) return k;
                std::size_t i = 0;
                while (i < assign.size() && assign[i] == chi) assign[i++] = 1;
                if (i == assign.size()) break;
                ++assign[i];
            }
        }
    }
    throw InternalError("brute_force_gdn_oracle: no defining set found");
}

}  // namespace gds
