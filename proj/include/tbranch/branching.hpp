#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbranch/crystal.hpp"
#include "tbranch/diagram.hpp"
#include "tbranch/weightspace.hpp"

namespace tbranch {

struct Normalizers {
  int s1 = 0;
  int s3 = 0;
  bool operator==(const Normalizers&) const = default;
};

struct BranchComponent {
  int degree = 0;
  std::vector<long long> weight;  // fundamental-weight coefficients of mu, all nodes
  std::vector<int> offset;        // lambda - mu in simple roots
  std::map<Node, int> labels;     // weight restricted to the Levi nodes
  int mult = 0;
  std::uint64_t dim = 0;          // dimension of the Levi irreducible
  std::vector<int> t1, t3;        // filled once normalizers are applied
  std::string name;
};

struct BranchTable {
  Diagram diagram;
  DominantBase lambda;
  Node grading = 0;
  std::optional<Normalizers> normalizers;
  std::optional<int> max_degree;  // set when the crystal was truncated
  std::vector<BranchComponent> rows;

  bool truncated() const { return max_degree.has_value(); }
  int top_degree() const;
  std::vector<const BranchComponent*> at_degree(int d) const;
  int component_count(int d) const;
};

// Levi-highest elements of the crystal grouped by weight.
BranchTable extract(const Crystal& c, Node grading);

int degree(const WeightOffset& w, Node grading);

// Tuple with the given consecutive differences and entry sum.
// Throws NormalizerMismatch when the sum has the wrong residue.
std::vector<int> gl_tuple(const std::vector<int>& diffs, long long sum);

std::pair<std::vector<int>, std::vector<int>> gl_tuples(const Diagram& d, const std::map<Node, int>& labels,
                                                        int degree, Normalizers s);

// Weyl dimension of the gl_n irreducible with weakly decreasing weight t.
std::uint64_t gl_dim(const std::vector<int>& t);
std::uint64_t levi_dim(const Diagram& d, const std::map<Node, int>& labels);

// Defaults for a fundamental weight at an arm-extremal node:
// z-extremal (0,-1), y-extremal (-1,0), x-extremal (1,0).
Normalizers default_normalizers(const Diagram& d, const DominantBase& lambda);

// Fills t1, t3 and names; sorts rows within each degree.
void apply_normalizers(BranchTable& table, Normalizers s);

enum class NameStyle { Unicode, Latex };
std::string schur_name(const std::vector<int>& t1, const std::vector<int>& t3,
                       NameStyle style = NameStyle::Unicode);

// A row in tuple form, as printed in tables and produced by oracles.
struct TupleRow {
  int degree = 0;
  std::vector<int> t1, t3;
  int mult = 1;
  bool operator==(const TupleRow&) const = default;
  auto operator<=>(const TupleRow&) const = default;
};

std::vector<TupleRow> tuple_rows(const BranchTable& table);
std::string describe(const TupleRow& row);

// Multiset comparison by degree; returns human-readable differences.
std::vector<std::string> compare_rows(const std::vector<TupleRow>& expected, const std::vector<TupleRow>& actual,
                                      std::optional<std::pair<int, int>> degree_range = std::nullopt);

struct SumRuleReport {
  bool ok = true;
  std::vector<std::size_t> layers;
  std::vector<std::uint64_t> table_sums;
  std::vector<std::string> violations;
};
SumRuleReport sum_rule(const BranchTable& table, const Crystal& c);

struct DualityTwist {
  int top_degree = 0;
  int c1 = 0, c3 = 0;
};

struct DualityReport {
  bool applicable = false;   // false when the twist constants are not integral
  bool ok = false;
  std::optional<DualityTwist> twist;
  std::string note;
  std::vector<std::string> mismatches;
};

std::optional<DualityTwist> duality_twist(const Diagram& d, int top_degree, Normalizers s);
TupleRow dual_row(const TupleRow& row, const DualityTwist& twist);
DualityReport duality_check(const BranchTable& table);

}  // namespace tbranch
