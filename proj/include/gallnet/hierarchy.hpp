#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallnet/systems.hpp"

namespace gallnet {

struct pair_witness {
  cluster c1, c2;
};

struct triple_witness {
  cluster c1, c2, c3;
};

struct hierarchy_check {
  bool ok = false;
  std::optional<pair_witness> witness;  // first violating pair in set order
};

struct weak_hierarchy_check {
  bool ok = false;
  std::optional<triple_witness> witness;  // first triple violating Eq-style condition
};

// C1 cap C2 in {empty, C1, C2} for all pairs.
hierarchy_check is_hierarchy(const cluster_system& cs);

// C1 cap C2 cap C3 in {C1 cap C2, C2 cap C3, C1 cap C3} for all triples.
weak_hierarchy_check is_weak_hierarchy(const cluster_system& cs);

struct closure_result {
  cluster value;
  bool from_empty_family = false;  // no cluster contains y; value is X by convention
};

// H-closure of y; throws errc::empty_set for empty y.
closure_result closure(const cluster_system& cs, const cluster& y);

struct closure_pair_certificate_result {
  bool ok = false;
  // For each subset A with |A| >= 2 (only when ok): a pair a,a' in A whose
  // closure equals closure(A).
  std::map<cluster, std::pair<std::string, std::string>> pair_for;
  std::optional<cluster> failing_subset;
};

// Closure-pair characterization of weak hierarchies; independent of
// is_weak_hierarchy.  Throws errc::ground_set_too_large for |X| > 15.
closure_pair_certificate_result closure_pair_certificate(const cluster_system& cs);

struct similarity_matrix {
  std::vector<std::string> ground;
  std::vector<std::vector<int>> d;  // d[i][j] = #clusters containing both
};

similarity_matrix similarity(const cluster_system& cs);

// |cs| <= (|X|+1 choose 2); holds for every weak hierarchy.
bool check_size_bound(const cluster_system& cs);

}  // namespace gallnet
