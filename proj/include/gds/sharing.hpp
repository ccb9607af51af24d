#pragma once

// Secret sharing with a Latin square as the key. Each authorized set gets
// its own greedy defining set of the key, split among its members; pooling
// the pieces and running first-fit completion recovers the key.
//
// No secrecy guarantee is made: an unauthorized pool may learn part of the
// key or even all of it. audit() reports such cases.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gds/latin.hpp"

namespace gds {

struct AuthorizedSet {
    std::string id;
    std::vector<std::string> members;
};

struct AccessStructure {
    std::vector<std::string> participants;
    std::vector<AuthorizedSet> sets;

    /// Throws InputError on empty or unknown members, or repeated set ids.
    void validate() const;
    const AuthorizedSet& set(const std::string& id) const;
};

struct ShareBundle {
    int n = 0;
    /// (participant, set id) -> cells, each list in row-major order.
    std::map<std::pair<std::string, std::string>, std::vector<LatinCell>> pieces;

    /// All cells held by the members of one authorized set.
    std::vector<LatinCell> pooled(const AuthorizedSet& set) const;
};

/// Splits one GDS of the key per authorized set. Deterministic in
/// (key, access structure, seed).
ShareBundle deal(const LatinSquare& key, const AccessStructure& access, std::uint64_t seed);

/// Greedy completion of the union of the pieces. Conflicting cells raise
/// InputError; a stuck completion is reported through the result.
CompletionResult reconstruct(const std::vector<std::vector<LatinCell>>& pieces, int n);

struct SetAudit {
    std::string id;
    std::size_t cells = 0;
    bool reconstructs = false;
    /// For sets of two or more: whether the pool still recovers the key
    /// without the named participant's piece.
    std::vector<std::pair<std::string, bool>> without_member;
};

struct AuditReport {
    std::vector<SetAudit> sets;
    /// The key is the first-fit square itself, so an empty pool recovers it.
    bool trivially_recoverable = false;

    bool passed() const;
    std::vector<std::string> failed_sets() const;
};

AuditReport audit(const LatinSquare& key, const AccessStructure& access, const ShareBundle& bundle);

}  // namespace gds
