#pragma once

// Brute-force alternating sign matrix enumeration by row transfer over
// column partial sums.

#include <map>
#include <vector>

#include "susy8v/errors.hpp"
#include "susy8v/exactpoly.hpp"

namespace susy8v {

// refined[k-1] = number of n x n ASMs whose first-row 1 sits in column k.
inline std::vector<BigInt> asm_refined_bruteforce(int n) {
  if (n < 1 || n > 10) throw CapacityError("asm_refined_bruteforce: n must lie in 1..10");
  using State = unsigned;  // bit j: column j partial sum
  // next rows from a column state: all admissible rows, as new states
  auto rows = [n](State c, auto&& emit) {
    auto rec = [&](auto&& self, int j, int s, State next, int first) -> void {
      if (j == n) {
        if (s == 1) emit(next, first);
        return;
      }
      const bool cj = (c >> j) & 1u;
      self(self, j + 1, s, next | (cj ? 1u << j : 0u), first);             // 0
      if (s == 0 && !cj) self(self, j + 1, 1, next | (1u << j), first < 0 ? j : first);  // +1
      if (s == 1 && cj) self(self, j + 1, 0, next, first);                 // -1
    };
    rec(rec, 0, 0, 0u, -1);
  };
  std::vector<BigInt> refined(n, BigInt(0));
  std::vector<std::map<State, BigInt>> by_first(n);
  rows(0u, [&](State s, int first) { by_first[first][s] += 1; });
  for (int k = 0; k < n; ++k) {
    std::map<State, BigInt> cur = by_first[k];
    for (int r = 1; r < n; ++r) {
      std::map<State, BigInt> nxt;
      for (const auto& [c, cnt] : cur) rows(c, [&](State s, int) { nxt[s] += cnt; });
      cur.swap(nxt);
    }
    const State full = (1u << n) - 1;
    auto it = cur.find(full);
    refined[k] = it == cur.end() ? BigInt(0) : it->second;
  }
  return refined;
}

inline BigInt asm_total_bruteforce(int n) {
  BigInt s = 0;
  for (const auto& v : asm_refined_bruteforce(n)) s += v;
  return s;
}

}  // namespace susy8v
