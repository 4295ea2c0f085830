#include "tbranch/diagram.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

struct StandardGraph {
  char family = 'A';
  int rank = 0;
  int center = 0;                      // 0 for type A
  std::vector<std::vector<int>> arms;  // labels, listed outward from center
};

StandardGraph standard_graph(char family, int rank) {
  StandardGraph g;
  g.family = family;
  g.rank = rank;
  if (family == 'D') {
    g.center = rank - 2;
    std::vector<int> longarm;
    for (int k = rank - 3; k >= 1; --k) longarm.push_back(k);
    g.arms = {longarm, {rank - 1}, {rank}};
  } else if (family == 'E') {
    g.center = 4;
    std::vector<int> longarm;
    for (int k = 5; k <= rank; ++k) longarm.push_back(k);
    g.arms = {{2}, {3, 1}, longarm};
  }
  return g;
}

std::pair<char, int> parse_type_name(std::string_view type) {
  if (type.size() < 2) throw UsageError("unknown Dynkin type '" + std::string(type) + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int rank = 0;
  auto [ptr, ec] = std::from_chars(type.data() + 1, type.data() + type.size(), rank);
  bool ok = ec == std::errc() && ptr == type.data() + type.size();
  if (ok) {
    if (family == 'A') ok = rank >= 2;
    else if (family == 'D') ok = rank >= 4;
    else if (family == 'E') ok = rank >= 6 && rank <= 8;
    else ok = false;
  }
  if (!ok) {
    throw UsageError("unknown Dynkin type '" + std::string(type) +
                     "' (expected A<n>, D<n> with n>=4, E6, E7 or E8)");
  }
  return {family, rank};
}

int parse_int(std::string_view s, bool& ok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  ok = !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
  return v;
}

}  // namespace

std::string TypeClass::describe() const {
  switch (kind) {
    case Kind::Finite: return "finite " + name;
    case Kind::Affine: return "affine";
    case Kind::Indefinite: return "indefinite";
  }
  return "";
}

void Format::validate() const {
  if (f0 < 0 || f1 < 0 || f2 < 0 || f3 < 0)
    throw UsageError("format " + to_string() + ": ranks must be nonnegative");
  if (f2 != r2() + r3())
    throw UsageError("format " + to_string() + ": f1 - f0 + f3 must equal f2 (r2 + r3 = f2)");
  if (r2() < 2)
    throw UsageError("format " + to_string() + ": r2 = f1 - f0 must be at least 2");
  if (r3() < 1)
    throw UsageError("format " + to_string() + ": r3 = f3 must be at least 1");
}

Format Format::from_ranks(int r1, int r2, int r3) {
  return Format{r1, r1 + r2, r2 + r3, r3};
}

std::string Format::to_string() const {
  std::ostringstream os;
  os << '(' << f0 << ',' << f1 << ',' << f2 << ',' << f3 << ')';
  return os.str();
}

TypeClass classify(int p, int q, int r) {
  TypeClass t;
  long long lhs = 1LL * q * r + 1LL * p * r + 1LL * p * q;
  long long rhs = 1LL * p * q * r;
  if (lhs > rhs) {
    t.kind = TypeClass::Kind::Finite;
    std::array<int, 3> s{p, q, r};
    std::sort(s.begin(), s.end());
    int n = p + q + r - 2;
    if (s[0] == 1) t.name = "A" + std::to_string(n);
    else if (s[1] == 2) t.name = "D" + std::to_string(n);
    else t.name = "E" + std::to_string(n);
  } else if (lhs == rhs) {
    t.kind = TypeClass::Kind::Affine;
  } else {
    t.kind = TypeClass::Kind::Indefinite;
  }
  return t;
}

Diagram::Diagram(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 1 || q < 1)
    throw UsageError("T(p,q,r) needs p >= 1 and q >= 1");
  if (r < 2)
    throw UsageError("T(p,q,r) needs r >= 2: the grading node z1 must exist");
  build_graph();
  type_ = classify(p, q, r);
  assign_bourbaki(std::nullopt);
}

Node Diagram::x(int i) const {
  if (i < 1 || i > p_ - 1) throw UsageError("no node x" + std::to_string(i) + " in " + label());
  return i;
}

Node Diagram::y(int j) const {
  if (j < 1 || j > q_ - 1) throw UsageError("no node y" + std::to_string(j) + " in " + label());
  return p_ - 1 + j;
}

Node Diagram::z(int k) const {
  if (k < 1 || k > r_ - 1) throw UsageError("no node z" + std::to_string(k) + " in " + label());
  return p_ + q_ - 2 + k;
}

Arm Diagram::arm_of(Node v) const {
  if (v == 0) return Arm::Center;
  if (v <= p_ - 1) return Arm::X;
  if (v <= p_ + q_ - 2) return Arm::Y;
  return Arm::Z;
}

int Diagram::arm_index(Node v) const {
  switch (arm_of(v)) {
    case Arm::Center: return 0;
    case Arm::X: return v;
    case Arm::Y: return v - (p_ - 1);
    case Arm::Z: return v - (p_ + q_ - 2);
  }
  return 0;
}

void Diagram::build_graph() {
  int n = size();
  cartan_.assign(n, std::vector<int>(n, 0));
  adj_.assign(n, {});
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](Node a, Node b) {
    cartan_[a][b] = cartan_[b][a] = -1;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  };
  for (int i = 1; i < p_; ++i) link(i == 1 ? 0 : x(i - 1), x(i));
  for (int j = 1; j < q_; ++j) link(j == 1 ? 0 : y(j - 1), y(j));
  for (int k = 1; k < r_; ++k) link(k == 1 ? 0 : z(k - 1), z(k));
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Diagram::assign_bourbaki(std::optional<int> z1_label) {
  bourbaki_.clear();
  if (!type_.finite()) return;
  auto [family, rank] = parse_type_name(type_.name);
  int n = size();

  if (family == 'A') {
    // Walk the path from one end; try both orientations.
    std::vector<Node> order;
    Node start = 0;
    for (Node v = 0; v < n; ++v) {
      if (adj_[v].size() <= 1) { start = v; break; }
    }
    Node prev = -1, cur = start;
    while (cur != -1) {
      order.push_back(cur);
      Node next = -1;
      for (Node w : adj_[cur]) if (w != prev) next = w;
      prev = cur;
      cur = next;
    }
    std::vector<int> best;
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<int> labels(n);
      for (int k = 0; k < n; ++k) labels[order[k]] = flip ? n - k : k + 1;
      if (z1_label && labels[grading_node()] != *z1_label) continue;
      if (best.empty() || labels < best) best = labels;
    }
    if (best.empty())
      throw UsageError("node " + std::to_string(*z1_label) + " cannot be z1 of " + label());
    bourbaki_ = best;
    return;
  }

  StandardGraph g = standard_graph(family, rank);
  std::array<std::vector<Node>, 3> roles;
  for (int i = 1; i < p_; ++i) roles[0].push_back(x(i));
  for (int j = 1; j < q_; ++j) roles[1].push_back(y(j));
  for (int k = 1; k < r_; ++k) roles[2].push_back(z(k));

  std::array<int, 3> perm{0, 1, 2};
  std::vector<int> best, best_key;
  do {
    bool fits = true;
    for (int role = 0; role < 3; ++role)
      fits = fits && roles[role].size() == g.arms[perm[role]].size();
    if (!fits) continue;
    std::vector<int> labels(n, 0);
    labels[0] = g.center;
    for (int role = 0; role < 3; ++role)
      for (std::size_t k = 0; k < roles[role].size(); ++k)
        labels[roles[role][k]] = g.arms[perm[role]][k];
    if (z1_label && labels[grading_node()] != *z1_label) continue;
    // E types prefer the smallest labels on x, then y. D types put the
    // largest spin label on x, then on z.
    std::vector<int> key;
    auto append = [&](int role, int sign) {
      for (Node v : roles[role]) key.push_back(sign * labels[v]);
    };
    if (family == 'E') {
      append(0, 1); append(1, 1); append(2, 1);
    } else {
      append(0, -1); append(2, -1); append(1, -1);
    }
    if (best.empty() || key < best_key) {
      best = labels;
      best_key = key;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty())
    throw UsageError("node " + std::to_string(*z1_label) + " cannot be z1 of " + label());
  bourbaki_ = best;
}

Diagram Diagram::from_type(std::string_view type, int grading_label) {
  auto [family, rank] = parse_type_name(type);
  if (grading_label < 1 || grading_label > rank)
    throw UsageError("grading node " + std::to_string(grading_label) + " is not a node of " +
                     std::string(type));
  if (family == 'A') {
    int p = 1, q, r;
    if (grading_label < rank) {
      r = grading_label + 1;
      q = rank - grading_label;
    } else {
      if (rank < 2) throw UsageError("A1 has no grading node adjacent to a center");
      r = 2;
      q = rank - 1;
    }
    Diagram d(p, q, r);
    d.assign_bourbaki(grading_label);
    return d;
  }
  StandardGraph g = standard_graph(family, rank);
  int zarm = -1;
  for (int a = 0; a < 3; ++a)
    if (g.arms[a].front() == grading_label) zarm = a;
  if (zarm < 0)
    throw UsageError("grading node " + std::to_string(grading_label) + " of " + std::string(type) +
                     " must be adjacent to the branch node " + std::to_string(g.center));
  std::vector<int> others;
  for (int a = 0; a < 3; ++a)
    if (a != zarm) others.push_back(static_cast<int>(g.arms[a].size()));
  std::sort(others.begin(), others.end());
  Diagram d(others[0] + 1, others[1] + 1, static_cast<int>(g.arms[zarm].size()) + 1);
  d.assign_bourbaki(grading_label);
  return d;
}

std::vector<Node> Diagram::f1_chain() const {
  std::vector<Node> chain;
  for (int i = p_ - 1; i >= 1; --i) chain.push_back(x(i));
  chain.push_back(center());
  for (int j = 1; j < q_; ++j) chain.push_back(y(j));
  return chain;
}

std::vector<Node> Diagram::f3_chain() const {
  std::vector<Node> chain;
  for (int k = 2; k < r_; ++k) chain.push_back(z(k));
  return chain;
}

std::optional<int> Diagram::bourbaki(Node v) const {
  if (bourbaki_.empty()) return std::nullopt;
  return bourbaki_.at(v);
}

Diagram Diagram::with_swapped_arms() const {
  if (p_ != q_) throw UsageError("arm swap needs p == q, got " + label());
  Diagram d = *this;
  d.swapped_ = !swapped_;
  if (!d.bourbaki_.empty())
    for (int i = 1; i < p_; ++i) std::swap(d.bourbaki_[x(i)], d.bourbaki_[y(i)]);
  return d;
}

std::string Diagram::name(Node v, Scheme scheme) const {
  if (v < 0 || v >= size()) throw UsageError("node id out of range");
  int k = arm_index(v);
  switch (scheme) {
    case Scheme::Canonical: return "#" + std::to_string(v);
    case Scheme::Xyz:
      switch (arm_of(v)) {
        case Arm::Center: return "u";
        case Arm::X: return "x" + std::to_string(k);
        case Arm::Y: return "y" + std::to_string(k);
        case Arm::Z: return "z" + std::to_string(k);
      }
      break;
    case Scheme::Primes:
      switch (arm_of(v)) {
        case Arm::Center: return "0";
        case Arm::X: return std::to_string(k);
        case Arm::Y: return std::to_string(k) + "'";
        case Arm::Z: return std::to_string(k) + "''";
      }
      break;
    case Scheme::Bourbaki:
      if (bourbaki_.empty()) throw UsageError(label() + " has no Bourbaki labels");
      return std::to_string(bourbaki_[v]);
  }
  return "";
}

std::vector<std::string> Diagram::names(Scheme scheme) const {
  std::vector<std::string> out;
  for (Node v = 0; v < size(); ++v) out.push_back(name(v, scheme));
  return out;
}

Node Diagram::lookup(Scheme scheme, std::string_view text) const {
  if (scheme == Scheme::Bourbaki && bourbaki_.empty())
    throw UsageError(label() + " is not of type A/D/E; Bourbaki labels are unavailable");
  for (Node v = 0; v < size(); ++v)
    if (name(v, scheme) == text) return v;
  std::string msg = "unknown node '" + std::string(text) + "' in " + label() + "; valid names:";
  for (const auto& s : names(scheme)) msg += " " + s;
  throw UsageError(msg);
}

Node Diagram::parse_node(std::string_view text) const {
  if (text.empty()) throw UsageError("empty node name");
  if (text.rfind("b:", 0) == 0) return lookup(Scheme::Bourbaki, text.substr(2));
  if (text.rfind("p:", 0) == 0) return lookup(Scheme::Primes, text.substr(2));
  if (text.front() == '#') return lookup(Scheme::Canonical, text);
  char c = text.front();
  if (c == 'u' || c == 'x' || c == 'y' || c == 'z') return lookup(Scheme::Xyz, text);
  if (text.find('\'') != std::string_view::npos) return lookup(Scheme::Primes, text);
  bool ok = false;
  parse_int(text, ok);
  if (ok) {
    if (bourbaki_.empty())
      throw UsageError("plain number '" + std::string(text) + "' needs Bourbaki labels; " + label() +
                       " has none (use xyz names or p:<n>)");
    return lookup(Scheme::Bourbaki, text);
  }
  throw UsageError("cannot parse node name '" + std::string(text) + "'");
}

Node Diagram::opposition(Node v) const {
  if (!type_.finite() || bourbaki_.empty()) return v;
  auto [family, rank] = parse_type_name(type_.name);
  int b = bourbaki_[v];
  int image = b;
  if (family == 'A') {
    image = rank + 1 - b;
  } else if (family == 'D') {
    if (rank % 2 == 1 && b >= rank - 1) image = b == rank ? rank - 1 : rank;
  } else if (rank == 6) {
    static const int theta[7] = {0, 6, 2, 5, 4, 3, 1};
    image = theta[b];
  }
  for (Node w = 0; w < size(); ++w)
    if (bourbaki_[w] == image) return w;
  throw InvariantViolation("opposition involution left the diagram");
}

std::string Diagram::label() const {
  return "T(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + ")";
}

Diagram from_format(const Format& f) {
  f.validate();
  return Diagram(f.r1() + 1, f.r2() - 1, f.r3() + 1);
}

}  // namespace tbranch
