#pragma once

// Upper bounds on the number of triple points of s lines.

#include <cstdint>
#include <vector>

namespace triarr {

/// floor(C(s,2) / 3).
constexpr std::int64_t naive_bound(std::int64_t s) { return s * (s - 1) / 2 / 3; }

/// 1 iff s = 5 (mod 6).
constexpr int schoenheim_eps(std::int64_t s) { return s % 6 == 5 ? 1 : 0; }

/// Kirkman-Schoenheim bound floor(floor((s-1)/2) * s / 3) - eps(s), in integers.
constexpr std::int64_t schoenheim_u3(std::int64_t s) {
  return ((s - 1) / 2) * s / 3 - schoenheim_eps(s);
}

struct BoundRow {
  std::int64_t s = 0;
  std::int64_t naive = 0;
  std::int64_t u3 = 0;
  int eps = 0;
};

inline std::vector<BoundRow> bound_table(std::int64_t max_s) {
  std::vector<BoundRow> rows;
  for (std::int64_t s = 1; s <= max_s; ++s)
    rows.push_back({s, naive_bound(s), schoenheim_u3(s), schoenheim_eps(s)});
  return rows;
}

}  // namespace triarr
