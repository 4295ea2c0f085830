#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbranch/diagram.hpp"
#include "tbranch/rational.hpp"
#include "tbranch/weightspace.hpp"

namespace tbranch {

// Direction nu = lambda - sum_j dir[j] alpha_j, traversed for time dur.
struct Segment {
  std::vector<int> dir;
  Rational dur;
  bool operator==(const Segment&) const = default;
};

struct LSPath {
  std::vector<Segment> segments;
  bool operator==(const LSPath&) const = default;
};

struct LSPathHash {
  std::size_t operator()(const LSPath& p) const noexcept;
};

struct PathStats {
  int m = 0;    // minimum of h_i over breakpoints
  int eps = 0;  // -m
  int phi = 0;  // h_i(1) - m
};

// Littelmann path operators for a fixed diagram and dominant weight.
class PathModel {
 public:
  PathModel(const Diagram& d, DominantBase lambda);

  const Diagram& diagram() const { return diagram_; }
  const DominantBase& lambda() const { return lambda_; }
  int rank() const { return diagram_.size(); }

  LSPath straight() const;
  // Integer slope <nu, alpha_i^vee> of a direction.
  int slope(const std::vector<int>& dir, Node i) const;
  PathStats stats(const LSPath& path, Node i) const;
  std::optional<LSPath> lower(const LSPath& path, Node i) const;
  std::optional<LSPath> raise(const LSPath& path, Node i) const;
  // Sum of dur * dir; throws InvariantViolation if not integral.
  std::vector<int> endpoint(const LSPath& path) const;
  // Checks durations, integrality of minima and the endpoint; throws on failure.
  void validate(const LSPath& path) const;

 private:
  std::vector<Rational> heights(const LSPath& path, Node i, std::vector<int>& slopes) const;
  std::vector<int> reflected(const std::vector<int>& dir, Node i, int slope) const;

  Diagram diagram_;
  DominantBase lambda_;
};

LSPath canonicalize(LSPath path);

struct Truncation {
  Node grading;
  int max_degree;
};

constexpr std::size_t kDefaultElementCap = 5'000'000;

struct GenerateOptions {
  std::optional<Truncation> truncation;
  std::size_t cap = kDefaultElementCap;
  // Node processing order; empty means 0..n-1.
  std::vector<Node> order;
};

class Crystal {
 public:
  static constexpr std::int32_t kNone = -1;

  Crystal(const Diagram& d, DominantBase lambda, std::optional<Truncation> truncation);

  const PathModel& model() const { return model_; }
  const Diagram& diagram() const { return model_.diagram(); }
  const DominantBase& lambda() const { return model_.lambda(); }
  const std::optional<Truncation>& truncation() const { return truncation_; }
  int rank() const { return model_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const LSPath& element(std::size_t id) const { return elements_[id]; }
  const std::vector<int>& offset(std::size_t id) const { return offsets_[id]; }
  int eps(std::size_t id, Node i) const { return eps_[id * rank() + i]; }
  int phi(std::size_t id, Node i) const { return phi_[id * rank() + i]; }
  // Target of the lowering operator, or kNone (also when truncated away).
  std::int32_t lower_edge(std::size_t id, Node i) const { return lower_[id * rank() + i]; }
  std::int32_t raise_edge(std::size_t id, Node i) const { return raise_[id * rank() + i]; }
  std::optional<std::size_t> find(const LSPath& path) const;

  // Appends a canonical path; returns its id and whether it was new.
  std::pair<std::size_t, bool> insert(LSPath path);
  void set_lower_edge(std::size_t from, Node i, std::size_t to);

 private:
  PathModel model_;
  std::optional<Truncation> truncation_;
  std::vector<LSPath> elements_;
  std::vector<std::vector<int>> offsets_;
  std::vector<int> eps_, phi_;
  std::vector<std::int32_t> lower_, raise_;
  std::unordered_map<LSPath, std::size_t, LSPathHash> index_;
};

// Closure of the straight path under the lowering operators.
// Throws CapExceeded when the element count passes options.cap.
Crystal generate(const Diagram& d, const DominantBase& lambda, const GenerateOptions& options = {});

// Element counts by offset at the grading node, degrees 0..top.
std::vector<std::size_t> layer_sizes(const Crystal& c, Node grading);

// Canonical export: elements sorted by total height then path encoding.
std::string export_crystal(const Crystal& c);
Crystal import_crystal(const Diagram& d, const std::string& text);

// Loads from or stores into a directory of cached crystals.
class CrystalCache {
 public:
  explicit CrystalCache(std::string dir) : dir_(std::move(dir)) {}
  std::string path_for(const Diagram& d, const DominantBase& lambda,
                       const std::optional<Truncation>& t) const;
  std::optional<Crystal> load(const Diagram& d, const DominantBase& lambda,
                              const std::optional<Truncation>& t) const;
  void store(const Crystal& c) const;
  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

}  // namespace tbranch
