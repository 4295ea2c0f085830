#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tbranch {

// Canonical node id: 0 is the center u, then x1..x_{p-1}, y1..y_{q-1},
// z1..z_{r-1}.
using Node = int;

enum class Scheme {
  Canonical,  // "#0", "#1", ...
  Xyz,        // u, x1, y2, z3
  Primes,     // 0, 1, 1', 1''
  Bourbaki,   // standard labels of A/D/E diagrams
};

enum class Arm { Center, X, Y, Z };

struct TypeClass {
  enum class Kind { Finite, Affine, Indefinite };
  Kind kind = Kind::Indefinite;
  std::string name;  // "E7", "D5", "A3" for finite types, empty otherwise

  bool finite() const { return kind == Kind::Finite; }
  std::string describe() const;
};

// Ranks (f0, f1, f2, f3) of a length-three free resolution together with
// the ranks r1, r2, r3 of its differentials.
struct Format {
  int f0 = 0, f1 = 0, f2 = 0, f3 = 0;

  int r1() const { return f0; }
  int r2() const { return f1 - f0; }
  int r3() const { return f3; }

  // Throws UsageError naming the violated identity.
  void validate() const;
  static Format from_ranks(int r1, int r2, int r3);
  std::string to_string() const;
  bool operator==(const Format&) const = default;
};

class Diagram {
 public:
  // Throws UsageError unless p, q >= 1 and r >= 2.
  Diagram(int p, int q, int r);

  // Builds the T-shaped diagram of a finite A/D/E type whose z1 arm starts at
  // the given Bourbaki node.
  static Diagram from_type(std::string_view type, int grading_label);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int size() const { return p_ + q_ + r_ - 2; }

  Node center() const { return 0; }
  Node x(int i) const;  // 1 <= i <= p-1
  Node y(int j) const;  // 1 <= j <= q-1
  Node z(int k) const;  // 1 <= k <= r-1
  Node grading_node() const { return z(1); }

  Arm arm_of(Node v) const;
  int arm_index(Node v) const;  // position along the arm, 0 for the center

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Node>& neighbours(Node v) const { return adj_[v]; }
  bool adjacent(Node a, Node b) const { return cartan_[a][b] == -1; }

  // Chain x_{p-1},...,x1,u,y1,...,y_{q-1}: the gl(F1) Dynkin chain.
  std::vector<Node> f1_chain() const;
  // Chain z2,...,z_{r-1}: the gl(F3) Dynkin chain.
  std::vector<Node> f3_chain() const;
  int dim_f1() const { return p_ + q_; }
  int dim_f3() const { return r_ - 1; }

  TypeClass type_class() const { return type_; }
  Format format() const { return Format::from_ranks(p_ - 1, q_ + 1, r_ - 1); }

  bool has_bourbaki() const { return !bourbaki_.empty(); }
  std::optional<int> bourbaki(Node v) const;
  // Exchanges the roles of the x and y arms while keeping Bourbaki labels on
  // their physical nodes. Requires p == q.
  Diagram with_swapped_arms() const;
  bool arms_swapped() const { return swapped_; }

  std::string name(Node v, Scheme scheme) const;
  // Throws UsageError listing valid names when the lookup fails.
  Node lookup(Scheme scheme, std::string_view name) const;
  // Accepts "z2"/"u" (xyz), "1''" (primes), "7" (Bourbaki) or "#3".
  Node parse_node(std::string_view text) const;
  std::vector<std::string> names(Scheme scheme) const;

  // Image of a node under the involution -w0 (identity when trivial).
  Node opposition(Node v) const;

  std::string label() const;  // "T(2,3,4)"

 private:
  void build_graph();
  void assign_bourbaki(std::optional<int> z1_label);

  int p_, q_, r_;
  bool swapped_ = false;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Node>> adj_;
  std::vector<int> bourbaki_;  // canonical id -> label; empty if not A/D/E
  TypeClass type_;
};

Diagram from_format(const Format& f);
TypeClass classify(int p, int q, int r);

}  // namespace tbranch
