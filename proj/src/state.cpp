#include "vmorse/state.hpp"

#include <cstdio>

namespace vmorse {

std::array<int, 8> odd_string(const State& s) {
  std::array<int, 8> odd{};
  const int r = s.r, p = s.pairs();
  for (int j = 0; j < 8; ++j) {
    if (j < r) {
      odd[j] = (s.parity[j] > 0 ? 2 : -2) - s.even[j];
    } else if (j < r + p) {
      odd[j] = -s.even[j];
    } else {
      odd[j] = s.even[j];
    }
  }
  return odd;
}

std::vector<std::string> validate(const State& s) {
  std::vector<std::string> issues;
  auto fail = [&issues](const std::string& msg) { issues.push_back(msg); };
  char buf[128];

  if (s.r < 0 || s.r > 8 || s.r % 2 != 0) {
    std::snprintf(buf, sizeof buf, "real count r=%d must be even and in [0,8]", int(s.r));
    fail(buf);
    return issues;  // later checks depend on a sane r
  }
  if (s.neg < 0 || s.neg > s.r) {
    std::snprintf(buf, sizeof buf, "negative count %d out of range [0,%d]", int(s.neg), int(s.r));
    fail(buf);
  }
  for (int i = 0; i < 8; ++i) {
    if (s.m[i][i] != -2) {
      std::snprintf(buf, sizeof buf, "self-intersection at column %d is %d, expected -2", i + 1,
                    int(s.m[i][i]));
      fail(buf);
    }
    for (int j = i + 1; j < 8; ++j) {
      if (s.m[i][j] != s.m[j][i]) {
        std::snprintf(buf, sizeof buf, "matrix not symmetric at (%d,%d)", i + 1, j + 1);
        fail(buf);
      }
      if (s.m[i][j] < -2 || s.m[i][j] > 2) {
        std::snprintf(buf, sizeof buf, "entry (%d,%d)=%d outside [-2,2]", i + 1, j + 1,
                      int(s.m[i][j]));
        fail(buf);
      }
    }
  }
  for (int j = 0; j < 8; ++j) {
    const bool real = j < s.r;
    if (real && s.parity[j] != 1 && s.parity[j] != -1) {
      std::snprintf(buf, sizeof buf, "real column %d lacks a parity sign", j + 1);
      fail(buf);
    }
    if (!real && s.parity[j] != 0) {
      std::snprintf(buf, sizeof buf, "non-real column %d carries a parity sign", j + 1);
      fail(buf);
    }
  }
  return issues;
}

bool is_valid(const State& s) { return validate(s).empty(); }

std::string canonical_key(const State& s) {
  std::string key;
  key.reserve(2 + 28 + 8 + 8);
  auto push = [&key](int v) { key.push_back(char('0' + v + 4)); };
  push(s.r);
  push(s.neg);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) push(s.m[i][j]);
  for (int j = 0; j < 8; ++j) push(s.even[j]);
  for (int j = 0; j < 8; ++j) push(s.parity[j]);
  return key;
}

}  // namespace vmorse
