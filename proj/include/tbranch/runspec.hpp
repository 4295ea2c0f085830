#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbranch/branching.hpp"
#include "tbranch/crystal.hpp"
#include "tbranch/render.hpp"

namespace tbranch {

// What the command line asks for, before any validation.
struct RunSpec {
  std::vector<int> pqr;     // --pqr p,q,r
  std::vector<int> format;  // --format f0,f1,f2,f3 or r1,r2,r3
  std::string type;         // --type E7
  std::string hw;           // node name in any scheme
  std::string grade;        // Bourbaki label of z1 when --type is used
  bool lowest = false;
  std::optional<int> trunc;
  std::optional<Normalizers> norm;
  OutFormat out = OutFormat::Text;
  std::string cache_dir;
  bool swap_arms = false;
  std::size_t cap = kDefaultElementCap;
};

struct Resolved {
  Diagram diagram;
  DominantBase lambda;
  std::optional<Truncation> truncation;
  std::optional<Normalizers> normalizers;  // explicit or default, if any
};

Format parse_format(const std::vector<int>& numbers);
Diagram resolve_diagram(const RunSpec& spec);
// Throws UsageError for inconsistent specs.
Resolved resolve(const RunSpec& spec);

// "a,b" -> {a, b}
Normalizers parse_normalizers(const std::string& s);

// Loads the crystal from the cache when present, else generates and stores it.
Crystal obtain_crystal(const Diagram& d, const DominantBase& lambda, const std::optional<Truncation>& t,
                       std::size_t cap, const std::string& cache_dir);

BranchTable compute_table(const Resolved& r, const Crystal& c);

}  // namespace tbranch
