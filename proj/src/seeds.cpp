#include "vmorse/seeds.hpp"

#include <stdexcept>

namespace vmorse {
namespace {

State make_state(int r, int neg, const int (&m)[8][8], const int (&even)[8],
                 const int (&parity)[8]) {
  State s;
  s.r = std::int8_t(r);
  s.neg = std::int8_t(neg);
  for (int i = 0; i < 8; ++i) {
    s.even[i] = std::int8_t(even[i]);
    s.parity[i] = std::int8_t(parity[i]);
    for (int j = 0; j < 8; ++j) s.m[i][j] = std::int8_t(m[i][j]);
  }
  if (!is_valid(s)) throw std::logic_error("malformed seed state");
  return s;
}

std::vector<Seed> build_catalog() {
  std::vector<Seed> seeds;

  // Six real points (four negative), one conjugate pair.
  {
    const int m[8][8] = {
        {-2, 0, 0, 1, 0, 0, 0, -1},
        {0, -2, 0, 1, 0, 1, 1, 0},
        {0, 0, -2, 1, 1, 0, 1, 0},
        {1, 1, 1, -2, 0, 0, -1, 1},
        {0, 0, 1, 0, -2, 0, 0, 0},
        {0, 1, 0, 0, 0, -2, 0, 0},
        {0, 1, 1, -1, 0, 0, -2, -1},
        {-1, 0, 0, 1, 0, 0, -1, -2},
    };
    const int even[8] = {1, 1, 1, 0, -2, -2, -1, -1};
    const int parity[8] = {1, 1, 1, -1, -1, -1, 0, 0};
    seeds.push_back({"XI1_SIX", CubicType::Xi1, make_state(6, 4, m, even, parity)});
  }

  // Two six-point states whose virtual components both have 630 elements.
  {
    const int m[8][8] = {
        {-2, 0, 0, 1, 1, 0, 1, -1},
        {0, -2, 0, 0, 1, 0, 0, 0},
        {0, 0, -2, 0, 1, 1, 1, -1},
        {1, 0, 0, -2, 0, 0, -1, 0},
        {1, 1, 1, 0, -2, 0, -1, 1},
        {0, 0, 1, 0, 0, -2, -1, 0},
        {1, 0, 1, -1, -1, -1, -2, 0},
        {-1, 0, -1, 0, 1, 0, 0, -2},
    };
    const int even[8] = {0, 0, 0, -1, 1, -1, 0, 0};
    const int parity[8] = {1, 1, 1, -1, -1, -1, 0, 0};
    seeds.push_back({"XI1_630_A", CubicType::Xi1, make_state(6, 0, m, even, parity)});
  }
  {
    const int m[8][8] = {
        {-2, 0, 0, 0, 0, 1, 0, 0},
        {0, -2, 0, 1, 0, 0, 0, 0},
        {0, 0, -2, 1, 1, 1, 1, -1},
        {0, 1, 1, -2, 0, 0, -1, 0},
        {0, 0, 1, 0, -2, 0, 0, 1},
        {1, 0, 1, 0, 0, -2, -1, 0},
        {0, 0, 1, -1, 0, -1, -2, -1},
        {0, 0, -1, 0, 1, 0, -1, -2},
    };
    const int even[8] = {0, 0, 0, 0, -1, 0, -1, -1};
    const int parity[8] = {1, 1, 1, -1, -1, -1, 0, 0};
    seeds.push_back({"XI1_630_B", CubicType::Xi1, make_state(6, 0, m, even, parity)});
  }

  // Six-point states with virtual components of 112 and 28 elements.
  {
    const int m[8][8] = {
        {-2, 0, 0, 1, 1, -1, -1, 0},
        {0, -2, 1, 0, 1, -1, -1, 0},
        {0, 1, -2, 0, 0, 1, 0, 0},
        {1, 0, 0, -2, 0, 1, 0, 0},
        {1, 1, 0, 0, -2, 1, 1, -1},
        {-1, -1, 1, 1, 1, -2, 0, 0},
        {-1, -1, 0, 0, 1, 0, -2, 0},
        {0, 0, 0, 0, -1, 0, 0, -2},
    };
    const int even[8] = {1, 1, -1, -1, -1, 2, 0, 0};
    const int parity[8] = {1, 1, -1, -1, -1, 1, 0, 0};
    seeds.push_back({"XI1_112", CubicType::Xi1, make_state(6, 6, m, even, parity)});
  }
  {
    const int m[8][8] = {
        {-2, 1, 1, -1, -1, 1, 0, 0},
        {1, -2, 0, 1, 1, -1, -1, 0},
        {1, 0, -2, 1, 1, -1, 0, 1},
        {-1, 1, 1, -2, 0, 1, 0, 0},
        {-1, 1, 1, 0, -2, 1, 1, -1},
        {1, -1, -1, 1, 1, -2, 0, 0},
        {0, -1, 0, 0, 1, 0, -2, 0},
        {0, 0, 1, 0, -1, 0, 0, -2},
    };
    const int even[8] = {-1, 1, 1, -1, -1, 2, 0, 0};
    const int parity[8] = {-1, 1, 1, -1, -1, 1, 0, 0};
    seeds.push_back({"XI1_28", CubicType::Xi1, make_state(6, 6, m, even, parity)});
  }

  // Four-point states with virtual components of 60 and 365 elements.
  {
    const int m[8][8] = {
        {-2, 1, 1, -1, -1, 0, -1, -1},
        {1, -2, 0, 1, 0, 0, 0, 0},
        {1, 0, -2, 1, 0, -1, 0, 1},
        {-1, 1, 1, -2, 0, 0, 0, 0},
        {-1, 0, 0, 0, -2, -1, 0, 0},
        {0, 0, -1, 0, -1, -2, 0, 0},
        {-1, 0, 0, 0, 0, 0, -2, -1},
        {-1, 0, 1, 0, 0, 0, -1, -2},
    };
    const int even[8] = {1, -1, -1, 2, 0, 0, 0, 0};
    const int parity[8] = {1, -1, -1, 1, 0, 0, 0, 0};
    seeds.push_back({"XI1_60", CubicType::Xi1, make_state(4, 4, m, even, parity)});
  }
  {
    const int m[8][8] = {
        {-2, 1, 0, 1, 0, -1, -1, 0},
        {1, -2, 0, 0, 0, 0, 0, 0},
        {0, 0, -2, 1, 0, 0, -1, 1},
        {1, 0, 1, -2, -1, 1, 1, -1},
        {0, 0, 0, -1, -2, 1, 0, 0},
        {-1, 0, 0, 1, 1, -2, 0, -1},
        {-1, 0, -1, 1, 0, 0, -2, 1},
        {0, 0, 1, -1, 0, -1, 1, -2},
    };
    const int even[8] = {0, 0, 1, 0, 0, 1, 0, 1};
    const int parity[8] = {1, -1, 1, -1, 0, 0, 0, 0};
    seeds.push_back({"XI1_365", CubicType::Xi1, make_state(4, 4, m, even, parity)});
  }

  // Second cubic type: six-point states with components of 665 and 952.
  {
    const int m[8][8] = {
        {-2, 0, 0, 0, 1, 0, 1, 0},
        {0, -2, 0, 1, 1, 1, 1, -1},
        {0, 0, -2, 0, 1, 0, 0, -1},
        {0, 1, 0, -2, 0, 0, 0, 0},
        {1, 1, 1, 0, -2, 0, -1, 1},
        {0, 1, 0, 0, 0, -2, -1, 1},
        {1, 1, 0, 0, -1, -1, -2, 0},
        {0, -1, -1, 0, 1, 1, 0, -2},
    };
    const int even[8] = {1, -1, 1, 0, 0, 0, 0, 0};
    const int parity[8] = {1, 1, 1, -1, -1, -1, 0, 0};
    seeds.push_back({"XI2_665", CubicType::Xi2, make_state(6, 6, m, even, parity)});
  }
  {
    const int m[8][8] = {
        {-2, 0, -2, 0, 1, 1, 1, 1},
        {0, -2, 0, 0, 1, 0, 0, 0},
        {-2, 0, -2, 0, 1, 1, 1, 1},
        {0, 0, 0, -2, 0, 1, 0, 0},
        {1, 1, 1, 0, -2, 0, 0, 0},
        {1, 0, 1, 1, 0, -2, 0, 0},
        {1, 0, 1, 0, 0, 0, -2, -1},
        {1, 0, 1, 0, 0, 0, -1, -2},
    };
    const int even[8] = {0, 1, 0, 1, 0, 0, -1, -1};
    const int parity[8] = {-1, 1, 1, 1, -1, -1, 0, 0};
    seeds.push_back({"XI2_952", CubicType::Xi2, make_state(6, 6, m, even, parity)});
  }

  return seeds;
}

}  // namespace

const std::vector<Seed>& seed_catalog() {
  static const std::vector<Seed> catalog = build_catalog();
  return catalog;
}

std::optional<Seed> find_seed(const std::string& name) {
  for (const Seed& s : seed_catalog())
    if (s.name == name) return s;
  return std::nullopt;
}

const State& primary_seed(CubicType type) {
  const std::string name = type == CubicType::Xi1 ? "XI1_SIX" : "XI2_665";
  for (const Seed& s : seed_catalog())
    if (s.name == name) return s.state;
  throw std::logic_error("primary seed missing from catalog");
}

}  // namespace vmorse
