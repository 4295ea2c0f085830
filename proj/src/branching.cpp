#include "tbranch/branching.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

long long floor_mod(long long a, long long n) {
  long long m = a % n;
  return m < 0 ? m + n : m;
}

void sort_rows(std::vector<BranchComponent>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const BranchComponent& a, const BranchComponent& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.t3 != b.t3) return a.t3 > b.t3;
    if (a.t1 != b.t1) return a.t1 > b.t1;
    return a.weight > b.weight;
  });
}

}  // namespace

int BranchTable::top_degree() const {
  int top = 0;
  for (const auto& r : rows) top = std::max(top, r.degree);
  return top;
}

std::vector<const BranchComponent*> BranchTable::at_degree(int d) const {
  std::vector<const BranchComponent*> out;
  for (const auto& r : rows)
    if (r.degree == d) out.push_back(&r);
  return out;
}

int BranchTable::component_count(int d) const {
  int n = 0;
  for (const auto& r : rows)
    if (r.degree == d) n += r.mult;
  return n;
}

BranchTable extract(const Crystal& c, Node grading) {
  const Diagram& d = c.diagram();
  int n = d.size();
  std::map<std::vector<int>, std::size_t> groups;
  std::vector<BranchComponent> rows;
  for (std::size_t id = 0; id < c.size(); ++id) {
    bool levi_highest = true;
    for (Node i = 0; i < n && levi_highest; ++i)
      if (i != grading && c.eps(id, i) != 0) levi_highest = false;
    if (!levi_highest) continue;
    const auto& off = c.offset(id);
    auto [it, fresh] = groups.emplace(off, rows.size());
    if (!fresh) {
      ++rows[it->second].mult;
      continue;
    }
    BranchComponent comp;
    comp.offset = off;
    comp.degree = off[grading];
    comp.weight.resize(n);
    for (Node i = 0; i < n; ++i) comp.weight[i] = pairing(d, c.lambda(), off, i);
    for (Node i = 0; i < n; ++i) {
      if (i == grading) continue;
      if (comp.weight[i] < 0) throw InvariantViolation("Levi-highest element with a negative Levi label");
      comp.labels[i] = static_cast<int>(comp.weight[i]);
    }
    comp.mult = 1;
    rows.push_back(std::move(comp));
  }
  BranchTable table{d, c.lambda(), grading, std::nullopt, std::nullopt, {}};
  if (c.truncation()) table.max_degree = c.truncation()->max_degree;
  for (auto& r : rows)
    if (grading == d.grading_node()) r.dim = levi_dim(d, r.labels);
  sort_rows(rows);
  table.rows = std::move(rows);
  return table;
}

int degree(const WeightOffset& w, Node grading) {
  const Rational& c = w.c.at(grading);
  if (!is_integer(c) || c < Rational(0)) throw UsageError("degree needs a nonnegative integral offset");
  return static_cast<int>(c.numerator());
}

std::vector<int> gl_tuple(const std::vector<int>& diffs, long long sum) {
  std::size_t n = diffs.size() + 1;
  std::vector<long long> base(n, 0);
  for (std::size_t k = n - 1; k-- > 0;) base[k] = base[k + 1] + diffs[k];
  long long s0 = std::accumulate(base.begin(), base.end(), 0LL);
  long long rest = sum - s0;
  if (floor_mod(rest, static_cast<long long>(n)) != 0) {
    throw NormalizerMismatch("a tuple of length " + std::to_string(n) + " with these differences has sum " +
                             std::to_string(s0) + " mod " + std::to_string(n) + ", not " + std::to_string(sum));
  }
  long long shift = rest / static_cast<long long>(n);
  std::vector<int> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<int>(base[k] + shift);
  return t;
}

std::pair<std::vector<int>, std::vector<int>> gl_tuples(const Diagram& d, const std::map<Node, int>& labels,
                                                        int deg, Normalizers s) {
  auto chain_diffs = [&](const std::vector<Node>& chain) {
    std::vector<int> diffs;
    for (Node v : chain) {
      auto it = labels.find(v);
      int lab = it == labels.end() ? 0 : it->second;
      if (lab < 0) throw UsageError("Levi labels must be nonnegative");
      diffs.push_back(lab);
    }
    return diffs;
  };
  auto d1 = chain_diffs(d.f1_chain());
  auto d3 = chain_diffs(d.f3_chain());
  std::vector<int> t1, t3;
  try {
    t1 = gl_tuple(d1, 1LL * d.p() * deg + s.s1);
  } catch (const NormalizerMismatch&) {
    long long base = 0, acc = 0;
    for (std::size_t k = d1.size(); k-- > 0;) acc += d1[k], base += acc;
    long long need = floor_mod(base - 1LL * d.p() * deg, d.dim_f1());
    throw NormalizerMismatch("s1 = " + std::to_string(s.s1) + " is incompatible with the degree-" +
                             std::to_string(deg) + " component; valid values are " + std::to_string(need) +
                             " mod " + std::to_string(d.dim_f1()));
  }
  try {
    t3 = gl_tuple(d3, 1LL * deg + s.s3);
  } catch (const NormalizerMismatch&) {
    long long base = 0, acc = 0;
    for (std::size_t k = d3.size(); k-- > 0;) acc += d3[k], base += acc;
    long long need = floor_mod(base - deg, d.dim_f3());
    throw NormalizerMismatch("s3 = " + std::to_string(s.s3) + " is incompatible with the degree-" +
                             std::to_string(deg) + " component; valid values are " + std::to_string(need) +
                             " mod " + std::to_string(d.dim_f3()));
  }
  return {t1, t3};
}

std::uint64_t gl_dim(const std::vector<int>& t) {
  for (std::size_t k = 1; k < t.size(); ++k)
    if (t[k] > t[k - 1]) throw UsageError("gl weight " + tuple_text(t) + " is not weakly decreasing");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      num *= static_cast<long long>(t[i]) - t[j] + static_cast<long long>(j - i);
      den *= static_cast<long long>(j - i);
    }
  BigInt q = num / den;
  if (q * den != num) throw InvariantViolation("gl dimension formula gave a non-integer");
  return q.convert_to<std::uint64_t>();
}

std::uint64_t levi_dim(const Diagram& d, const std::map<Node, int>& labels) {
  auto chain_tuple = [&](const std::vector<Node>& chain) {
    std::vector<int> t(chain.size() + 1, 0);
    for (std::size_t k = chain.size(); k-- > 0;) {
      auto it = labels.find(chain[k]);
      t[k] = t[k + 1] + (it == labels.end() ? 0 : it->second);
    }
    return t;
  };
  return gl_dim(chain_tuple(d.f1_chain())) * gl_dim(chain_tuple(d.f3_chain()));
}

Normalizers default_normalizers(const Diagram& d, const DominantBase& lambda) {
  auto v = lambda.fundamental_node();
  if (v) {
    if (*v == d.z(d.r() - 1)) return {0, -1};
    if (d.q() >= 2 && *v == d.y(d.q() - 1)) return {-1, 0};
    if (d.p() >= 2 && *v == d.x(d.p() - 1)) return {1, 0};
  }
  throw UsageError("default normalizers exist only for a fundamental weight at an arm-extremal node; "
                   "pass --norm s1,s3 explicitly");
}

void apply_normalizers(BranchTable& table, Normalizers s) {
  if (table.grading != table.diagram.grading_node())
    throw UsageError("gl tuples need the grading node to be z1");
  for (auto& r : table.rows) {
    auto [t1, t3] = gl_tuples(table.diagram, r.labels, r.degree, s);
    r.t1 = std::move(t1);
    r.t3 = std::move(t3);
    r.name = schur_name(r.t1, r.t3);
  }
  table.normalizers = s;
  sort_rows(table.rows);
}

std::vector<TupleRow> tuple_rows(const BranchTable& table) {
  std::vector<TupleRow> out;
  for (const auto& r : table.rows) out.push_back(TupleRow{r.degree, r.t1, r.t3, r.mult});
  return out;
}

std::string describe(const TupleRow& row) {
  std::ostringstream os;
  os << "degree " << row.degree << ": t3=" << tuple_text(row.t3) << " t1=" << tuple_text(row.t1)
     << " mult " << row.mult;
  return os.str();
}

std::vector<std::string> compare_rows(const std::vector<TupleRow>& expected, const std::vector<TupleRow>& actual,
                                      std::optional<std::pair<int, int>> range) {
  auto in_range = [&](int deg) { return !range || (deg >= range->first && deg <= range->second); };
  std::map<int, std::vector<TupleRow>> e, a;
  for (const auto& r : expected)
    if (in_range(r.degree)) e[r.degree].push_back(r);
  for (const auto& r : actual)
    if (in_range(r.degree)) a[r.degree].push_back(r);
  std::vector<int> degrees;
  for (const auto& [deg, _] : e) degrees.push_back(deg);
  for (const auto& [deg, _] : a) degrees.push_back(deg);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::vector<std::string> diffs;
  for (int deg : degrees) {
    auto& ev = e[deg];
    auto& av = a[deg];
    std::sort(ev.begin(), ev.end());
    std::sort(av.begin(), av.end());
    std::vector<TupleRow> missing, extra;
    std::set_difference(ev.begin(), ev.end(), av.begin(), av.end(), std::back_inserter(missing));
    std::set_difference(av.begin(), av.end(), ev.begin(), ev.end(), std::back_inserter(extra));
    for (const auto& r : missing) diffs.push_back("missing " + describe(r));
    for (const auto& r : extra) diffs.push_back("unexpected " + describe(r));
  }
  return diffs;
}

SumRuleReport sum_rule(const BranchTable& table, const Crystal& c) {
  SumRuleReport rep;
  rep.layers = layer_sizes(c, table.grading);
  std::size_t top = rep.layers.size();
  for (const auto& r : table.rows) top = std::max(top, static_cast<std::size_t>(r.degree) + 1);
  rep.table_sums.assign(top, 0);
  rep.layers.resize(top, 0);
  for (const auto& r : table.rows) rep.table_sums[r.degree] += static_cast<std::uint64_t>(r.mult) * r.dim;
  for (std::size_t deg = 0; deg < top; ++deg) {
    if (rep.table_sums[deg] != rep.layers[deg]) {
      rep.ok = false;
      rep.violations.push_back("degree " + std::to_string(deg) + ": components sum to " +
                               std::to_string(rep.table_sums[deg]) + " but the layer has " +
                               std::to_string(rep.layers[deg]) + " elements");
    }
  }
  return rep;
}

std::optional<DualityTwist> duality_twist(const Diagram& d, int top, Normalizers s) {
  long long n1 = 1LL * d.p() * top + 2LL * s.s1;
  long long n3 = 1LL * top + 2LL * s.s3;
  if (n1 % d.dim_f1() != 0 || n3 % d.dim_f3() != 0) return std::nullopt;
  return DualityTwist{top, static_cast<int>(n1 / d.dim_f1()), static_cast<int>(n3 / d.dim_f3())};
}

TupleRow dual_row(const TupleRow& row, const DualityTwist& tw) {
  TupleRow out;
  out.degree = tw.top_degree - row.degree;
  out.mult = row.mult;
  for (auto it = row.t1.rbegin(); it != row.t1.rend(); ++it) out.t1.push_back(tw.c1 - *it);
  for (auto it = row.t3.rbegin(); it != row.t3.rend(); ++it) out.t3.push_back(tw.c3 - *it);
  return out;
}

DualityReport duality_check(const BranchTable& table) {
  DualityReport rep;
  if (!table.normalizers) {
    rep.note = "table has no normalizers";
    return rep;
  }
  if (table.truncated()) {
    rep.note = "table is truncated";
    return rep;
  }
  rep.twist = duality_twist(table.diagram, table.top_degree(), *table.normalizers);
  if (!rep.twist) {
    rep.note = "not graded self-dual under this normalization";
    return rep;
  }
  rep.applicable = true;
  auto rows = tuple_rows(table);
  std::vector<TupleRow> image;
  for (const auto& r : rows) image.push_back(dual_row(r, *rep.twist));
  rep.mismatches = compare_rows(image, rows);
  rep.ok = rep.mismatches.empty();
  rep.note = rep.ok ? "graded self-dual" : "duality mismatch";
  return rep;
}

}  // namespace tbranch
