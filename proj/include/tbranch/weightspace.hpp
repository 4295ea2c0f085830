#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tbranch/diagram.hpp"
#include "tbranch/rational.hpp"

namespace tbranch {

using BigInt = boost::multiprecision::cpp_int;

// Dominant weight given by its fundamental-weight coefficients.
class DominantBase {
 public:
  DominantBase() = default;
  explicit DominantBase(std::vector<int> coeffs);  // throws on negative entries
  static DominantBase zero(int n) { return DominantBase(std::vector<int>(n, 0)); }
  static DominantBase fundamental(int n, Node v);

  int operator[](Node v) const { return coeffs_[v]; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Returns the node when this is a single fundamental weight.
  std::optional<Node> fundamental_node() const;
  bool operator==(const DominantBase&) const = default;

 private:
  std::vector<int> coeffs_;
};

// mu = lambda - sum_i c_i alpha_i.
struct WeightOffset {
  DominantBase base;
  std::vector<Rational> c;

  static WeightOffset at_base(const DominantBase& b);
};

Rational pairing(const Diagram& d, const WeightOffset& w, Node i);
// Integer version for integral offsets.
long long pairing(const Diagram& d, const DominantBase& base, const std::vector<int>& c, Node i);
WeightOffset reflect(const Diagram& d, const WeightOffset& w, Node i);

constexpr std::size_t kDefaultRootCap = 1'000'000;

// Positive roots in simple-root coordinates, sorted by height then
// lexicographically. Throws UsageError for non-finite types.
std::vector<std::vector<int>> positive_roots(const Diagram& d, std::size_t cap = kDefaultRootCap);

BigInt weyl_dimension(const Diagram& d, const DominantBase& lambda);

// Renders the weight in fundamental-weight coordinates using Bourbaki labels,
// e.g. "Lambda[1] - Lambda[5] + Lambda[6]".
std::string format_weight(const Diagram& d, const std::vector<long long>& coeffs);

}  // namespace tbranch
