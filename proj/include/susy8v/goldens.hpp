#pragma once

// Golden files for H_{2k} at the special points, one polynomial per file.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "susy8v/errors.hpp"
#include "susy8v/rzpoly.hpp"

namespace susy8v {

struct GoldenEntry {
  std::string file;  // e.g. "H6_J3_J4.txt"
  int k;
  std::vector<HSpecPoint> points;
};

inline std::vector<GoldenEntry> golden_entries(int k_max = 4) {
  using P = HSpecPoint;
  std::vector<GoldenEntry> out;
  const std::vector<P> js{P::J2(), P::J3(), P::J4()};
  for (int k = 1; k <= k_max; ++k) {
    const std::string base = "H" + std::to_string(2 * k);
    out.push_back({base + ".txt", k, {}});
    for (const auto& a : js) out.push_back({base + "_" + tag_name(a.tag) + ".txt", k, {a}});
    for (std::size_t i = 0; i < js.size(); ++i)
      for (std::size_t j = i + 1; j < js.size(); ++j)
        out.push_back({base + "_" + tag_name(js[i].tag) + "_" + tag_name(js[j].tag) + ".txt", k, {js[i], js[j]}});
  }
  return out;
}

// Two-variable determinant route; the remaining arguments are zero.
inline RatFunc golden_value_two_var(const GoldenEntry& e) {
  if (e.k == 1) return RatFunc(1);
  const RatFunc w = e.points.size() > 0 ? e.points[0].value : RatFunc();
  const RatFunc v = e.points.size() > 1 ? e.points[1].value : RatFunc();
  return H_two_var(e.k, w, v);
}

inline RatFunc golden_value_general(const GoldenEntry& e) { return H_poly(e.k, e.points); }

inline std::string golden_text(const RatFunc& r) { return r.to_string() + "\n"; }

inline std::filesystem::path default_golden_dir() {
#ifdef SUSY8V_SOURCE_DIR
  return std::filesystem::path(SUSY8V_SOURCE_DIR) / "goldens";
#else
  return "goldens";
#endif
}

inline void write_goldens(const std::filesystem::path& dir, int k_max = 4) {
  std::filesystem::create_directories(dir);
  for (const auto& e : golden_entries(k_max)) {
    std::ofstream f(dir / e.file, std::ios::binary);
    if (!f) throw Error("cannot write " + (dir / e.file).string());
    f << golden_text(golden_value_two_var(e));
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace susy8v
