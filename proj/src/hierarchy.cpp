#include "gallnet/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace gallnet {

namespace {

cluster intersect(const cluster& a, const cluster& b) {
  cluster out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

hierarchy_check is_hierarchy(const cluster_system& cs) {
  hierarchy_check r;
  for (auto i = cs.clusters.begin(); i != cs.clusters.end(); ++i)
    for (auto j = std::next(i); j != cs.clusters.end(); ++j) {
      cluster in = intersect(*i, *j);
      if (!in.empty() && in != *i && in != *j) {
        r.witness = pair_witness{*i, *j};
        return r;
      }
    }
  r.ok = true;
  return r;
}

weak_hierarchy_check is_weak_hierarchy(const cluster_system& cs) {
  weak_hierarchy_check r;
  std::vector<const cluster*> c;
  for (const cluster& x : cs.clusters) c.push_back(&x);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j) {
      cluster ij = intersect(*c[i], *c[j]);
      for (size_t k = j + 1; k < c.size(); ++k) {
        cluster ijk = intersect(ij, *c[k]);
        if (ijk != ij && ijk != intersect(*c[j], *c[k]) && ijk != intersect(*c[i], *c[k])) {
          r.witness = triple_witness{*c[i], *c[j], *c[k]};
          return r;
        }
      }
    }
  r.ok = true;
  return r;
}

closure_result closure(const cluster_system& cs, const cluster& y) {
  if (y.empty()) fail(errc::empty_set, "closure of the empty set is undefined");
  cluster q = y;
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  for (const std::string& l : q)
    if (!std::binary_search(cs.ground.begin(), cs.ground.end(), l))
      fail(errc::unknown_label, "label '" + l + "' not in the ground set");
  closure_result r;
  bool first = true;
  for (const cluster& c : cs.clusters) {
    if (!std::includes(c.begin(), c.end(), q.begin(), q.end())) continue;
    if (first) {
      r.value = c;
      first = false;
    } else {
      r.value = intersect(r.value, c);
    }
  }
  if (first) {
    r.value = cs.ground;
    r.from_empty_family = true;
  }
  return r;
}

closure_pair_certificate_result closure_pair_certificate(const cluster_system& cs) {
  int n = (int)cs.ground.size();
  if (n > 15)
    fail(errc::ground_set_too_large,
         "certificate checks all subsets; ground set of " + std::to_string(n) + " exceeds 15");
  auto bit_of = [&](const std::string& l) {
    return (int)(std::lower_bound(cs.ground.begin(), cs.ground.end(), l) - cs.ground.begin());
  };
  std::vector<unsigned> masks;
  for (const cluster& c : cs.clusters) {
    unsigned m = 0;
    for (const std::string& l : c) m |= 1u << bit_of(l);
    masks.push_back(m);
  }
  unsigned full = (n == 0) ? 0 : (1u << n) - 1;
  auto close = [&](unsigned y) {
    unsigned acc = full;  // empty-family convention: the whole ground set
    for (unsigned m : masks)
      if ((y & ~m) == 0) acc &= m;
    return acc;
  };
  auto to_cluster = [&](unsigned m) {
    cluster c;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) c.push_back(cs.ground[i]);
    return c;
  };

  std::vector<std::vector<unsigned>> pairc(n, std::vector<unsigned>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairc[i][j] = close(1u << i | 1u << j);

  closure_pair_certificate_result r;
  for (unsigned a = 1; a <= full && full; ++a) {
    if (std::popcount(a) < 2) continue;
    unsigned ca = close(a);
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      if (!(a >> i & 1)) continue;
      for (int j = i + 1; j < n && !found; ++j) {
        if (!(a >> j & 1)) continue;
        if (pairc[i][j] == ca) {
          r.pair_for[to_cluster(a)] = {cs.ground[i], cs.ground[j]};
          found = true;
        }
      }
    }
    if (!found) {
      r.pair_for.clear();
      r.failing_subset = to_cluster(a);
      return r;
    }
  }
  r.ok = true;
  return r;
}

similarity_matrix similarity(const cluster_system& cs) {
  similarity_matrix m;
  m.ground = cs.ground;
  int n = (int)cs.ground.size();
  m.d.assign(n, std::vector<int>(n, 0));
  auto idx = [&](const std::string& l) {
    return (int)(std::lower_bound(cs.ground.begin(), cs.ground.end(), l) - cs.ground.begin());
  };
  for (const cluster& c : cs.clusters) {
    std::vector<int> ix;
    for (const std::string& l : c) ix.push_back(idx(l));
    for (int i : ix)
      for (int j : ix) ++m.d[i][j];
  }
  return m;
}

bool check_size_bound(const cluster_system& cs) {
  long long n = (long long)cs.ground.size();
  return (long long)cs.clusters.size() <= n * (n + 1) / 2;
}

}  // namespace gallnet
