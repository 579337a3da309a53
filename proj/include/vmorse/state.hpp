#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vmorse {

// A combinatorial state describing a collection of 8 Morse critical points
// of a real cubic polynomial in three variables, together with the
// intersection data of the associated vanishing cycles.
//
// Column layout (0-based):
//   [0, r)          real critical values, in increasing order; the first
//                   `neg` of them are negative, the rest positive.
//   [r, r+s)        critical values in the upper half-plane, ordered by the
//                   angle of their paths with the negative real axis.
//   [r+s, r+2s)     their complex conjugates, in the same order.
// where s = (8 - r) / 2.
//
// Stored strings:
//   m[i][j]   intersection index of vanishing cycles i and j (m[i][i] = -2).
//   even[j]   intersection index of cycle j with the even Petrovskii class.
//   parity[j] +1 if the critical point has odd Morse index, -1 if even,
//             0 for non-real columns.  The odd Petrovskii string is not
//             stored; it is determined by `even` and `parity`, see
//             odd_string().
struct State {
  std::array<std::array<std::int8_t, 8>, 8> m{};
  std::array<std::int8_t, 8> even{};
  std::array<std::int8_t, 8> parity{};
  std::int8_t r = 0;
  std::int8_t neg = 0;

  int pos() const { return r - neg; }
  int pairs() const { return (8 - r) / 2; }
  int upper(int p) const { return r + p; }
  int lower(int p) const { return r + pairs() + p; }

  bool operator==(const State&) const = default;
};

// Reconstructs the odd Petrovskii string:
//   real column j:   odd[j] = (parity[j] > 0 ? +2 : -2) - even[j]
//   upper half-plane column: odd[j] = -even[j]
//   lower half-plane column: odd[j] =  even[j]
std::array<int, 8> odd_string(const State& s);

// Structural validation.  Returns a list of human-readable problems;
// an empty list means the state is well-formed:
//   * r is even, 0 <= r <= 8, 0 <= neg <= r;
//   * the matrix is symmetric with diagonal -2 and off-diagonal
//     entries in [-2, 2];
//   * parity is +-1 exactly on the first r columns;
//   * conjugate pair columns carry equal even-string entries.
std::vector<std::string> validate(const State& s);
bool is_valid(const State& s);

// Injective serialization of the full state, used for deduplication.
std::string canonical_key(const State& s);

}  // namespace vmorse
