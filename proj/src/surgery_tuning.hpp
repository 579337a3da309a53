#pragma once

namespace vmorse::detail {

// Residual convention choices of the surgery kernel.  The geometry fixes all
// of them; we pin them by calibrating the full enumeration against the known
// census sizes, then freeze the defaults.
struct Tuning {
  // Canonicalize conjugate-pair signs when packing a state.
  bool normalize_pair_signs = true;
  // Order in which collision dodges pick up Picard-Lefschetz corrections.
  bool dodge_near_first = true;
  // Basis split used when a conjugate pair with intersection index q lands
  // on the given side (and, inverted, when a real collision of that kind
  // leaves the axis).  Indexes the enumerated candidate patterns.
  int pattern[2][2] = {{0, 0}, {0, 0}};  // [q > 0 ? 0 : 1][neg ? 0 : 1]
  // Parity of the newborn point with the higher critical value when q = +1;
  // q = -1 predicts the opposite parity.
  bool qplus_higher_odd = true;
  // Which half-plane the value jumping through 0 arcs through, i.e. whose
  // conjugate cycles reflect its path: 0 = none, 1 = upper ascending,
  // 2 = lower (jumping cycle reflects); 3 = upper, 4 = lower (crossed cycles reflect).
  int jump_reflect = 0;
  // Whether the even-string shift of a jump uses the pairings from before or
  // after the path re-routing.
  bool jump_shift_old = false;
  // Whether the lower-half-plane members of braided pairs twist with the
  // opposite sense from the upper ones.
  bool braid_mirror = false;
  // Rotation of the candidate order for the pair-lattice isometry applied to
  // the columns swept by a pair landing on (or, inverted, a collision
  // leaving) the real axis.
  int iso = 0;  // 0..4
};

Tuning& tuning();

}  // namespace vmorse::detail
