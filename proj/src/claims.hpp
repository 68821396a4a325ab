#pragma once

// Internal interface between the verification runner and the claim
// implementations. Not installed.

#include <functional>
#include <optional>
#include <vector>

#include "schub/enumerate.hpp"
#include "schub/verify.hpp"

namespace schub::claims {

/// Lex-ordered S_n together with cached rank tables and lengths; shared
/// read-only by the sweep workers.
struct SnData {
  const std::vector<Permutation>* perms = nullptr;
  std::vector<RankTable> tables;
  std::vector<int> lengths;

  std::size_t size() const { return perms->size(); }
  std::size_t index_of(const Permutation& p) const;
};

const SnData& sn_data(int n);

struct Sink {
  std::vector<Violation> violations;
  std::uint64_t checked = 0;

  void count(std::uint64_t k = 1) { checked += k; }

  void fail(const Permutation& w, const Permutation& x,
            std::optional<Point> p, std::optional<Transposition> t,
            std::string clause) {
    violations.push_back({w, x, p, t, std::move(clause)});
  }

  void require(bool ok, const Permutation& w, const Permutation& x,
               std::optional<Point> p, std::optional<Transposition> t,
               const char* clause) {
    if (!ok) fail(w, x, p, t, clause);
  }
};

struct Claim {
  ClaimInfo info;
  /// Whether the claim sweeps S_n (subject to the enumeration degree cap).
  bool enumerates_sn = true;
  /// Number of independent work units at degree n; the runner partitions
  /// these across workers.
  std::function<std::uint64_t(int)> units;
  std::function<void(int n, std::uint64_t unit, Sink&)> run;
};

const std::vector<Claim>& registry();

// One register_* per module, called once to build the registry.
void register_perm_claims(std::vector<Claim>& out);
void register_pair_claims(std::vector<Claim>& out);
void register_influence_claims(std::vector<Claim>& out);
void register_neighbor_claims(std::vector<Claim>& out);
void register_reduction_claims(std::vector<Claim>& out);

// Shared sweep helpers.

/// Calls fn for every x <= w using the cached tables.
void for_pairs_of(const SnData& d, std::size_t w_index,
                  const std::function<void(const PermPair&)>& fn);

/// Index of the first y agreeing with rk_w on the level set of the pair
/// but not below w, or nullopt when tight.
std::optional<std::size_t> tight_witness_index(const PermPair& pair,
                                               const SnData& d);

inline std::uint64_t sn_units(int n) {
  return symmetric_group(n).size();
}

}  // namespace schub::claims
