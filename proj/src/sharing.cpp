#include "gds/sharing.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gds/errors.hpp"

namespace gds {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// A greedy defining set of the key as cell ids. Small keys get an exact
// minimum under a random relabeling of the cells, so different seeds pick
// different minimum sets; larger keys get a randomized greedy transversal.
std::vector<int> pick_gds(const LatinSquare& key, std::mt19937_64& rng) {
    auto family = latin_descent_family(key);
    if (key.order() > kMaxExactLatinGds) return greedy_hitting_set(family, &rng).elements;

    std::vector<int> relabel(family.universe.size());
    std::iota(relabel.begin(), relabel.end(), 1);
    stable_shuffle(relabel, rng);
    std::vector<int> back(relabel.size() + 1);
    for (std::size_t i = 0; i < relabel.size(); ++i) back[static_cast<std::size_t>(relabel[i])] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> sets;
    for (const auto& s : family.sets) {
        std::vector<int> mapped;
        for (int e : s) mapped.push_back(relabel[static_cast<std::size_t>(e - 1)]);
        sets.push_back(std::move(mapped));
    }
    auto cover = min_hitting_set(SetFamily::over(family.universe, std::move(sets)));
    std::vector<int> out;
    for (int e : cover.elements) out.push_back(back[static_cast<std::size_t>(e)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void AccessStructure::validate() const {
    std::set<std::string> known(participants.begin(), participants.end());
    std::set<std::string> ids;
    for (const auto& s : sets) {
        if (!ids.insert(s.id).second) throw InputError("authorized set id '" + s.id + "' is repeated");
        if (s.members.empty()) throw InputError("authorized set '" + s.id + "' is empty");
        std::set<std::string> seen;
        for (const auto& m : s.members) {
            if (!known.contains(m))
                throw InputError("authorized set '" + s.id + "' names unknown participant '" + m + "'");
            if (!seen.insert(m).second)
                throw InputError("authorized set '" + s.id + "' lists '" + m + "' twice");
        }
    }
}

const AuthorizedSet& AccessStructure::set(const std::string& id) const {
    for (const auto& s : sets)
        if (s.id == id) return s;
    throw InputError("no authorized set '" + id + "'");
}

std::vector<LatinCell> ShareBundle::pooled(const AuthorizedSet& set) const {
    std::vector<LatinCell> out;
    for (const auto& m : set.members)
        if (auto it = pieces.find({m, set.id}); it != pieces.end())
            out.insert(out.end(), it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end());
    return out;
}

ShareBundle deal(const LatinSquare& key, const AccessStructure& access, std::uint64_t seed) {
    access.validate();
    ShareBundle bundle;
    bundle.n = key.order();
    const int cells = key.order() * key.order();

    for (std::size_t s = 0; s < access.sets.size(); ++s) {
        const auto& set = access.sets[s];
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(s)));
        auto chosen = pick_gds(key, rng);

        // Supersets of a GDS are GDSs: pad so every member gets a cell.
        std::vector<char> taken(static_cast<std::size_t>(cells) + 1, 0);
        for (int id : chosen) taken[static_cast<std::size_t>(id)] = 1;
        for (int id = 1; id <= cells && chosen.size() < set.members.size(); ++id)
            if (!taken[static_cast<std::size_t>(id)]) chosen.push_back(id), taken[static_cast<std::size_t>(id)] = 1;
        std::sort(chosen.begin(), chosen.end());

        std::vector<std::string> members = set.members;
        std::sort(members.begin(), members.end());
        for (const auto& m : members) bundle.pieces[{m, set.id}];
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            Cell c = key.cell_of(chosen[i]);
            bundle.pieces[{members[i % members.size()], set.id}].push_back({c.row, c.col, key.at(c)});
        }
    }
    return bundle;
}

CompletionResult reconstruct(const std::vector<std::vector<LatinCell>>& pieces, int n) {
    PartialLatinSquare pool(n);
    for (const auto& piece : pieces)
        for (const auto& c : piece) {
            if (auto held = pool.get(c.cell())) {
                if (*held != c.value)
                    throw InputError("pieces disagree on cell (" + std::to_string(c.row) + "," +
                                     std::to_string(c.col) + ")");
                continue;
            }
            pool.set(c);
        }
    return greedy_complete(pool);
}

bool AuditReport::passed() const {
    return std::all_of(sets.begin(), sets.end(), [](const SetAudit& s) { return s.reconstructs; });
}

std::vector<std::string> AuditReport::failed_sets() const {
    std::vector<std::string> out;
    for (const auto& s : sets)
        if (!s.reconstructs) out.push_back(s.id);
    return out;
}

AuditReport audit(const LatinSquare& key, const AccessStructure& access, const ShareBundle& bundle) {
    access.validate();
    if (bundle.n != key.order()) throw InputError("bundle order does not match the key");

    auto recovers = [&](const std::vector<std::vector<LatinCell>>& pieces) {
        try {
            auto result = reconstruct(pieces, key.order());
            return result.ok() && *result.square == key;
        } catch (const InputError&) {
            return false;
        }
    };
    auto piece_of = [&](const std::string& member, const std::string& id) {
        auto it = bundle.pieces.find({member, id});
        return it == bundle.pieces.end() ? std::vector<LatinCell>{} : it->second;
    };

    AuditReport report;
    auto empty_pool = greedy_square(key.order());
    report.trivially_recoverable = empty_pool.ok() && *empty_pool.square == key;

    for (const auto& set : access.sets) {
        SetAudit entry;
        entry.id = set.id;
        std::vector<std::vector<LatinCell>> pieces;
        for (const auto& m : set.members) pieces.push_back(piece_of(m, set.id));
        for (const auto& p : pieces) entry.cells += p.size();
        entry.reconstructs = recovers(pieces);
        if (set.members.size() >= 2) {
            for (std::size_t drop = 0; drop < set.members.size(); ++drop) {
                auto reduced = pieces;
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
                entry.without_member.emplace_back(set.members[drop], recovers(reduced));
            }
        }
        report.sets.push_back(std::move(entry));
    }
    return report;
}

}  // namespace gds
