#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gallnet/network.hpp"

namespace gallnet::detail {

// Mutable working copy for the suppression cascades (leaf removal, switching
// cleanup).  Tracks the originating network vertex of every survivor.
struct editable {
  struct vertex {
    std::vector<int> in, out;
    std::string label;
    bool alive = true;
    int origin = -1;
  };
  std::vector<vertex> v;

  static editable from(const network& n) {
    editable e;
    e.v.resize(n.vertex_count());
    for (int i = 0; i < n.vertex_count(); ++i) {
      e.v[i].in = n.parents(i);
      e.v[i].out = n.children(i);
      e.v[i].label = n.label(i);
      e.v[i].origin = i;
    }
    return e;
  }

  static void erase_one(std::vector<int>& xs, int x) {
    xs.erase(std::find(xs.begin(), xs.end(), x));
  }
  void del_arc(int a, int b) {
    erase_one(v[a].out, b);
    erase_one(v[b].in, a);
  }
  void add_arc(int a, int b) {
    v[a].out.push_back(b);
    v[b].in.push_back(a);
  }
  bool has_arc(int a, int b) const {
    return std::find(v[a].out.begin(), v[a].out.end(), b) != v[a].out.end();
  }
  std::string name(int a) const {
    return v[a].label.empty() ? "v" + std::to_string(a) : "'" + v[a].label + "'";
  }

  enum class on_parallel { merge, reject };

  // Repeats until stable: merge/reject parallel arcs, drop unlabeled sinks,
  // suppress degree-2 vertices, identify an outdegree-1 root with its child.
  bool cleanup(on_parallel policy, std::string* note) {
    auto say = [&](const std::string& s) {
      if (note) *note = s;
    };
    int alive_count = 0;
    for (const vertex& w : v) alive_count += w.alive;
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < (int)v.size() && !changed; ++a) {
        if (!v[a].alive) continue;
        std::vector<int> out = v[a].out;
        std::sort(out.begin(), out.end());
        for (size_t i = 0; i + 1 < out.size(); ++i) {
          if (out[i] != out[i + 1]) continue;
          if (policy == on_parallel::reject) {
            say("parallel arcs " + name(a) + " -> " + name(out[i]));
            return false;
          }
          del_arc(a, out[i]);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      for (int a = 0; a < (int)v.size() && !changed; ++a) {
        if (!v[a].alive || !v[a].out.empty() || !v[a].label.empty()) continue;
        if (v[a].in.empty()) {
          say("graph collapsed to nothing");
          return false;
        }
        while (!v[a].in.empty()) del_arc(v[a].in.back(), a);
        v[a].alive = false;
        --alive_count;
        changed = true;
      }
      if (changed) continue;
      for (int a = 0; a < (int)v.size() && !changed; ++a) {
        if (!v[a].alive || v[a].in.size() != 1 || v[a].out.size() != 1) continue;
        int p = v[a].in[0], c = v[a].out[0];
        del_arc(p, a);
        del_arc(a, c);
        v[a].alive = false;
        --alive_count;
        if (has_arc(p, c)) {
          if (policy == on_parallel::reject) {
            say("suppressing " + name(a) + " creates parallel arcs " + name(p) + " -> " + name(c));
            return false;
          }
        } else {
          add_arc(p, c);
        }
        changed = true;
      }
      if (changed) continue;
      for (int a = 0; a < (int)v.size() && !changed; ++a) {
        if (!v[a].alive || !v[a].in.empty() || v[a].out.size() != 1) continue;
        if (alive_count == 1) break;  // a bare labeled root; leave it for validate
        del_arc(a, v[a].out[0]);
        v[a].alive = false;
        --alive_count;
        changed = true;
      }
    }
    return true;
  }

  raw_network compact(std::vector<int>* origin_out) const {
    raw_network g;
    std::vector<int> id(v.size(), -1);
    for (int i = 0; i < (int)v.size(); ++i) {
      if (!v[i].alive) continue;
      id[i] = g.add_vertex(v[i].label);
      if (origin_out) origin_out->push_back(v[i].origin);
    }
    for (int i = 0; i < (int)v.size(); ++i) {
      if (!v[i].alive) continue;
      for (int c : v[i].out) g.add_arc(id[i], id[c]);
    }
    return g;
  }
};

}  // namespace gallnet::detail
