#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmorse/state.hpp"

namespace vmorse {

// The seven elementary virtual surgeries.
//
//   S1  two neighbouring real critical values on the same side of 0 collide
//       and leave the real axis as a conjugate pair;
//   S2  two neighbouring real critical values on the same side of 0 with
//       intersection index 0 trade places;
//   S3  the innermost conjugate pair lands on the real axis next to 0 (on
//       the chosen side) and splits into two real critical values;
//   S4  the innermost conjugate pair collides on the real axis next to 0,
//       the points miss each other and the imaginary parts trade signs;
//   S5  the largest negative critical value jumps up through 0;
//   S6  the smallest positive critical value jumps down through 0;
//   S7  two conjugate pairs neighbouring in the angular order trade places
//       (a braid move; `inverse` selects the handedness).
enum class Surgery { S1, S2, S3, S4, S5, S6, S7 };

enum class Side { Neg, Pos };

struct Move {
  Surgery op = Surgery::S1;
  int site = 0;           // S1/S2: lower of the two real positions (0-based);
                          // S7: lower of the two pair indices (0-based)
  Side side = Side::Neg;  // S3/S4 only
  bool inverse = false;   // S7 only
};

enum class Failure {
  IntersectionIndexOutOfRange,  // the colliding cycles have the wrong index
  ZeroBetweenValues,            // the two real values straddle 0
  NoSuchSite,                   // the requested site does not exist
};

struct Outcome {
  std::optional<State> state;
  std::optional<Failure> failure;
  bool ok() const { return state.has_value(); }
};

std::string to_string(const Move& m);
std::string to_string(Failure f);

Outcome try_s1(const State& s, int i);
Outcome try_s2(const State& s, int i);
Outcome try_s3(const State& s, Side side);
Outcome try_s4(const State& s, Side side);
Outcome try_s5(const State& s);
Outcome try_s6(const State& s);
Outcome try_s7(const State& s, int j, bool inverse);

Outcome apply(const State& s, const Move& m);

// Canonical representative of `s` under joint orientation flips of the
// conjugate-pair cycles.  Surgery results are already normalized; call this
// on externally constructed states (seeds, parsed files) before comparing.
State normalize_orientations(const State& s);

// All moves whose site exists in `s`, in a fixed deterministic order.
// Moves may still fail with IntersectionIndexOutOfRange/ZeroBetweenValues.
// With include_collisions=false the collision surgeries S1/S3 are skipped;
// the remaining surgeries generate the virtual components.
std::vector<Move> enumerate_moves(const State& s, bool include_collisions = true);

}  // namespace vmorse
