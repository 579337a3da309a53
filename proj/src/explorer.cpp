#include "vmorse/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vmorse/surgery.hpp"

namespace vmorse {

namespace {

std::vector<State> successors(const State& s, bool include_collisions) {
  std::vector<State> out;
  for (const Move& mv : enumerate_moves(s, include_collisions)) {
    Outcome o = apply(s, mv);
    if (o.ok()) out.push_back(*o.state);
  }
  return out;
}

void ingest(Exploration& e, std::vector<int>& frontier, const State& s) {
  std::string key = canonical_key(s);
  auto [it, fresh] = e.index.emplace(std::move(key), int(e.states.size()));
  if (fresh) {
    e.states.push_back(s);
    frontier.push_back(it->second);
  }
}

}  // namespace

Exploration explore_serial(const State& seed, std::size_t max_states) {
  Exploration e;
  std::vector<int> frontier;
  ingest(e, frontier, normalize_orientations(seed));
  while (!frontier.empty()) {
    if (max_states && e.states.size() > max_states)
      throw std::runtime_error("exploration exceeded state budget");
    std::vector<int> next;
    for (int id : frontier)
      for (const State& t : successors(e.states[id], true)) ingest(e, next, t);
    frontier = std::move(next);
  }
  return e;
}

Exploration explore(const State& seed, int threads, std::size_t max_states) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  Exploration e;
  std::vector<int> frontier;
  ingest(e, frontier, normalize_orientations(seed));
  while (!frontier.empty()) {
    if (max_states && e.states.size() > max_states)
      throw std::runtime_error("exploration exceeded state budget");
    // Expand the whole layer in parallel, merge serially in layer order so
    // the discovery order matches the serial reference exactly.
    std::vector<std::vector<State>> layer(frontier.size());
    std::exception_ptr fail;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t k = 0; k < std::ptrdiff_t(frontier.size()); ++k) {
      try {
        layer[k] = successors(e.states[frontier[k]], true);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        fail = std::current_exception();
      }
    }
    if (fail) std::rethrow_exception(fail);
    std::vector<int> next;
    for (const auto& batch : layer)
      for (const State& t : batch) ingest(e, next, t);
    frontier = std::move(next);
  }
  return e;
}

std::array<int, 5> census_by_r(const Exploration& e) {
  std::array<int, 5> c{};
  for (const State& s : e.states) ++c[s.r / 2];
  return c;
}

Components virtual_components(const Exploration& e) {
  const int n = int(e.states.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (const State& t : successors(e.states[i], false)) {
      auto it = e.index.find(canonical_key(t));
      if (it == e.index.end()) continue;  // cannot happen on a closed set
      int a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  Components c;
  c.id.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (c.id[root] < 0) {
      c.id[root] = int(c.members.size());
      c.members.emplace_back();
    }
    c.id[i] = c.id[root];
    c.members[c.id[i]].push_back(i);
  }
  return c;
}

std::vector<int> component_spectrum(const Exploration& e, const Components& c, int r) {
  std::vector<int> sizes;
  for (const auto& m : c.members)
    if (!m.empty() && e.states[m.front()].r == r) sizes.push_back(int(m.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace vmorse
