#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmorse/state.hpp"

namespace vmorse {

// Which of the two rigid-isotopy types of smooth real projective cubic
// surfaces the polynomial belongs to (one or two connected components of
// the real point set of the projectivized zero level).
enum class CubicType { Xi1, Xi2 };

struct Seed {
  std::string name;
  CubicType type;
  State state;
};

// Named initial states.  Each is the combinatorial data of an explicitly
// realizable Morse cubic; every state of its type is reachable from the
// type's primary seed (XI1_SIX respectively XI2_665) by surgery chains.
const std::vector<Seed>& seed_catalog();
std::optional<Seed> find_seed(const std::string& name);
const State& primary_seed(CubicType type);

}  // namespace vmorse
