#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gallnet/systems.hpp"

namespace gallnet {

inline constexpr long long default_class_cap = 531441;  // 3^12
inline constexpr long long default_mul_node_cap = 1 << 20;

struct encoding_report {
  bool encoded = false;
  std::vector<blob> four_blobs;
  long long class_size = 1;  // 3^|four_blobs|
  std::optional<std::vector<std::string>> witnesses;  // canonical eNewick of the class

  std::string to_text() const;
  std::string to_json() const;
};

// Decides encodedness structurally (blob sizes).  Requires a level <= 1
// network whose blobs all have >= 4 vertices and |X| >= 3; otherwise throws
// errc::not_admissible.  With with_witnesses the full class is enumerated.
encoding_report is_encoded(const network& n, bool with_witnesses = false,
                           long long class_cap = default_class_cap);

// The three rewirings of a 4-vertex blob that preserve the induced systems;
// the input is one of the three.  Throws errc::not_four_blob.
std::vector<network> four_blob_variants(const network& n, const blob& b);

// All 3^b networks obtained by rewiring each 4-blob independently, sorted by
// canonical form.  Verifies (asserts) pairwise non-isomorphism and equal
// softwired triplet systems.  Throws errc::class_too_large over the cap.
std::vector<network> equivalence_class(const network& n, long long class_cap = default_class_cap);

enum class system_kind { triplets, trees, clusters_soft, clusters_hard };

// Set equality of the chosen induced system; errc::ground_set_mismatch when
// the leaf sets differ.
bool systems_equal(const network& n1, const network& n2, system_kind which);

// Path-unfolding of a network: a rooted binary tree whose leaves repeat
// labels, one occurrence per root-to-leaf path of the source.
struct multree {
  struct node {
    std::vector<int> kids;
    std::string label;  // leaves only
  };
  std::vector<node> nodes;
  int root = -1;

  std::map<std::string, int> multiplicity() const;
  // Canonical serialization (children sorted recursively); equal strings
  // <=> isomorphic as multi-labeled trees.
  std::string newick() const;
};

// Throws errc::blowup when the unfolding exceeds node_cap vertices.
multree mul_tree(const network& n, long long node_cap = default_mul_node_cap);

}  // namespace gallnet
