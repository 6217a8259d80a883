#pragma once

#include <stdexcept>
#include <string>

namespace gallnet {

enum class errc {
  invalid_network,          // graph failed validation where a network is required
  syntax,                   // eNewick / input file syntax error
  hybrid_tag,               // hybrid tag used once, or with several child subtrees
  duplicate_leaf,           // leaf label appears twice in one input
  unknown_label,            // leaf label not present in the network
  unknown_arc,              // arc not present in the network
  last_leaf,                // leaf removal would leave fewer than two leaves
  degenerate,               // leaf removal produced parallel arcs
  label_clash,              // attached leaf label already in use
  too_many_reticulations,   // displayed-tree expansion over the reticulation cap
  too_few_leaves,           // operation needs at least three leaves
  budget_exceeded,          // triplet path search exceeded its step budget
  not_admissible,           // encoding query on a network outside the admissible class
  not_four_blob,            // blob argument is not a four-vertex blob of the network
  class_too_large,          // equivalence class would exceed the configured cap
  ground_set_mismatch,      // comparison across different leaf sets
  ground_set_too_large,     // enumeration/search cap on |X|
  level_unsupported,        // generator enumeration beyond level 3
  invalid_assignment,       // leaf hanging violates the side rules
  blowup,                   // multi-labelled tree would exceed the node cap
  empty_set,                // closure of the empty label set
  bad_input,                // malformed file or argument
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gallnet
