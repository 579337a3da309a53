#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "vmorse/state.hpp"

namespace vmorse {

// Breadth-first closure of a seed state under all surgeries.
struct Exploration {
  std::vector<State> states;                   // in deterministic discovery order
  std::unordered_map<std::string, int> index;  // canonical_key -> position
};

// Serial reference implementation and the OpenMP-parallel one.  Both return
// states in the same deterministic order (the parallel run expands a whole
// BFS layer concurrently, then merges the layer's successors serially).
// A nonzero max_states turns a runaway closure into an exception.
Exploration explore_serial(const State& seed, std::size_t max_states = 0);
Exploration explore(const State& seed, int threads = 0, std::size_t max_states = 0);

// Number of states per count of real critical values (index = r/2).
std::array<int, 5> census_by_r(const Exploration& e);

// Partition of the explored states by the non-collision surgeries
// S2/S4/S5/S6/S7 (these preserve r, so each class sits in one r-stratum).
struct Components {
  std::vector<int> id;               // state position -> component id
  std::vector<std::vector<int>> members;  // component id -> state positions
};
Components virtual_components(const Exploration& e);

// Sorted class sizes of the components contained in the given r-stratum.
std::vector<int> component_spectrum(const Exploration& e, const Components& c, int r);

}  // namespace vmorse
