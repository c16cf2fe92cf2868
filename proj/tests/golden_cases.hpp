#pragma once

// CLI invocations whose output is pinned byte-for-byte in tests/golden.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

namespace fs = std::filesystem;

inline const fs::path kFixtures = SEMI_FIXTURE_DIR;
inline const fs::path kGolden = SEMI_GOLDEN_DIR;

struct Case {
  std::string name;  // golden file stem
  std::vector<std::string> args;
  int exit_code;
};

inline std::vector<Case> cases() {
  std::vector<Case> out;
  for (std::string t : {"L2", "R2", "C2", "RB4", "RG4"}) {
    const std::string file = (kFixtures / (t + ".tbl")).string();
    out.push_back({t + ".validate", {"validate", file}, 0});
    out.push_back({t + ".analyze", {"analyze", file, "--json"}, 0});
    out.push_back({t + ".factorize-rect",
                   {"factorize", file, "--e", "0", "--kind", "rect", "--enumerate"}, 0});
    out.push_back({t + ".factorize-right-group",
                   {"factorize", file, "--e", "0", "--kind", "right-group"}, 0});
    out.push_back({t + ".factorize-left-group",
                   {"factorize", file, "--e", "0", "--kind", "left-group", "--enumerate"},
                   0});
    out.push_back({t + ".check", {"check", file}, 0});
  }
  const std::string nonassoc = (kFixtures / "NA2.tbl").string();
  out.push_back({"NA2.validate", {"validate", nonassoc}, 1});
  out.push_back({"NA2.analyze", {"analyze", nonassoc, "--json"}, 1});
  return out;
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace golden
