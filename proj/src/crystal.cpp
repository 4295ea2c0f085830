#include "tbranch/crystal.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "tbranch/errors.hpp"

namespace tbranch {

std::size_t LSPathHash::operator()(const LSPath& p) const noexcept {
  std::size_t h = p.segments.size();
  for (const auto& s : p.segments) {
    for (int v : s.dir) boost::hash_combine(h, v);
    boost::hash_combine(h, s.dur.numerator());
    boost::hash_combine(h, s.dur.denominator());
  }
  return h;
}

LSPath canonicalize(LSPath path) {
  LSPath out;
  for (auto& s : path.segments) {
    if (s.dur.numerator() == 0) continue;
    if (!out.segments.empty() && out.segments.back().dir == s.dir) {
      out.segments.back().dur += s.dur;
    } else {
      out.segments.push_back(std::move(s));
    }
  }
  return out;
}

PathModel::PathModel(const Diagram& d, DominantBase lambda) : diagram_(d), lambda_(std::move(lambda)) {
  if (lambda_.size() != d.size())
    throw UsageError("highest weight has " + std::to_string(lambda_.size()) + " coefficients, " +
                     d.label() + " has " + std::to_string(d.size()) + " nodes");
}

LSPath PathModel::straight() const {
  return LSPath{{Segment{std::vector<int>(rank(), 0), Rational(1)}}};
}

int PathModel::slope(const std::vector<int>& dir, Node i) const {
  const auto& a = diagram_.cartan()[i];
  int s = lambda_[i];
  for (int j = 0; j < rank(); ++j)
    if (a[j] != 0) s -= dir[j] * a[j];
  return s;
}

std::vector<Rational> PathModel::heights(const LSPath& path, Node i, std::vector<int>& slopes) const {
  std::vector<Rational> h;
  h.reserve(path.segments.size() + 1);
  slopes.clear();
  h.push_back(Rational(0));
  for (const auto& s : path.segments) {
    int k = slope(s.dir, i);
    slopes.push_back(k);
    h.push_back(h.back() + s.dur * k);
  }
  return h;
}

std::vector<int> PathModel::reflected(const std::vector<int>& dir, Node i, int k) const {
  std::vector<int> out = dir;
  out[i] += k;
  return out;
}

PathStats PathModel::stats(const LSPath& path, Node i) const {
  std::vector<int> slopes;
  auto h = heights(path, i, slopes);
  Rational m = *std::min_element(h.begin(), h.end());
  if (!is_integer(m) || !is_integer(h.back()))
    throw InvariantViolation("non-integral height minimum at node " + std::to_string(i));
  PathStats st;
  st.m = static_cast<int>(m.numerator());
  st.eps = -st.m;
  st.phi = static_cast<int>(h.back().numerator()) - st.m;
  return st;
}

std::optional<LSPath> PathModel::lower(const LSPath& path, Node i) const {
  std::vector<int> slopes;
  auto h = heights(path, i, slopes);
  Rational m = *std::min_element(h.begin(), h.end());
  if (h.back() - m < Rational(1)) return std::nullopt;
  std::size_t n = path.segments.size();
  std::size_t t0 = 0;
  for (std::size_t k = 0; k <= n; ++k)
    if (h[k] == m) t0 = k;
  Rational target = m + 1;
  std::size_t k1 = t0;
  while (k1 < n && h[k1 + 1] < target) ++k1;
  if (k1 >= n) throw InvariantViolation("lowering found no crossing of m+1");

  LSPath out;
  out.segments.reserve(n + 1);
  for (std::size_t k = 0; k < t0; ++k) out.segments.push_back(path.segments[k]);
  for (std::size_t k = t0; k < k1; ++k) {
    const auto& s = path.segments[k];
    out.segments.push_back(Segment{reflected(s.dir, i, slopes[k]), s.dur});
  }
  const auto& s = path.segments[k1];
  Rational delta = (target - h[k1]) / slopes[k1];
  out.segments.push_back(Segment{reflected(s.dir, i, slopes[k1]), delta});
  if (delta < s.dur) out.segments.push_back(Segment{s.dir, s.dur - delta});
  for (std::size_t k = k1 + 1; k < n; ++k) out.segments.push_back(path.segments[k]);
  return canonicalize(std::move(out));
}

std::optional<LSPath> PathModel::raise(const LSPath& path, Node i) const {
  std::vector<int> slopes;
  auto h = heights(path, i, slopes);
  Rational m = *std::min_element(h.begin(), h.end());
  if (m > Rational(-1)) return std::nullopt;
  std::size_t n = path.segments.size();
  std::size_t t0 = 0;
  while (h[t0] != m) ++t0;
  Rational target = m + 1;
  // Segment k0 is the last one (before t0) whose start lies at or above m+1.
  std::size_t k0 = t0;
  while (k0 > 0 && h[k0 - 1] < target) --k0;
  if (k0 == 0) throw InvariantViolation("raising found no crossing of m+1");
  --k0;

  LSPath out;
  out.segments.reserve(n + 1);
  for (std::size_t k = 0; k < k0; ++k) out.segments.push_back(path.segments[k]);
  const auto& s = path.segments[k0];
  Rational delta = (target - h[k0]) / slopes[k0];
  if (delta > Rational(0)) out.segments.push_back(Segment{s.dir, delta});
  out.segments.push_back(Segment{reflected(s.dir, i, slopes[k0]), s.dur - delta});
  for (std::size_t k = k0 + 1; k < t0; ++k) {
    const auto& sk = path.segments[k];
    out.segments.push_back(Segment{reflected(sk.dir, i, slopes[k]), sk.dur});
  }
  for (std::size_t k = t0; k < n; ++k) out.segments.push_back(path.segments[k]);
  return canonicalize(std::move(out));
}

std::vector<int> PathModel::endpoint(const LSPath& path) const {
  std::vector<int> out(rank(), 0);
  for (int j = 0; j < rank(); ++j) {
    Rational acc(0);
    for (const auto& s : path.segments) acc += s.dur * s.dir[j];
    if (!is_integer(acc)) throw InvariantViolation("path endpoint is not integral");
    out[j] = static_cast<int>(acc.numerator());
  }
  return out;
}

void PathModel::validate(const LSPath& path) const {
  if (path.segments.empty()) throw InvariantViolation("empty path");
  Rational total(0);
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const auto& s = path.segments[k];
    if (static_cast<int>(s.dir.size()) != rank()) throw InvariantViolation("direction has wrong rank");
    if (s.dur <= Rational(0)) throw InvariantViolation("nonpositive segment duration");
    if (k > 0 && path.segments[k - 1].dir == s.dir) throw InvariantViolation("path not canonical");
    total += s.dur;
  }
  if (total != Rational(1)) throw InvariantViolation("segment durations do not sum to 1");
  for (int v : endpoint(path))
    if (v < 0) throw InvariantViolation("negative endpoint offset");
  for (Node i = 0; i < rank(); ++i) {
    auto st = stats(path, i);
    if (st.m > 0) throw InvariantViolation("positive height minimum");
  }
}

Crystal::Crystal(const Diagram& d, DominantBase lambda, std::optional<Truncation> truncation)
    : model_(d, std::move(lambda)), truncation_(truncation) {}

std::optional<std::size_t> Crystal::find(const LSPath& path) const {
  auto it = index_.find(path);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, bool> Crystal::insert(LSPath path) {
  auto it = index_.find(path);
  if (it != index_.end()) return {it->second, false};
  std::size_t id = elements_.size();
  int n = rank();
  offsets_.push_back(model_.endpoint(path));
  for (Node i = 0; i < n; ++i) {
    auto st = model_.stats(path, i);
    eps_.push_back(st.eps);
    phi_.push_back(st.phi);
    lower_.push_back(kNone);
    raise_.push_back(kNone);
  }
  index_.emplace(path, id);
  elements_.push_back(std::move(path));
  return {id, true};
}

void Crystal::set_lower_edge(std::size_t from, Node i, std::size_t to) {
  lower_[from * rank() + i] = static_cast<std::int32_t>(to);
  raise_[to * rank() + i] = static_cast<std::int32_t>(from);
}

Crystal generate(const Diagram& d, const DominantBase& lambda, const GenerateOptions& options) {
  if (!d.type_class().finite() && !options.truncation)
    throw UsageError(d.label() + " is " + d.type_class().describe() +
                     "; generation needs a truncation degree");
  std::vector<Node> order = options.order;
  if (order.empty()) {
    order.resize(d.size());
    std::iota(order.begin(), order.end(), 0);
  }
  Crystal c(d, lambda, options.truncation);
  c.insert(c.model().straight());
  for (std::size_t id = 0; id < c.size(); ++id) {
    LSPath current = c.element(id);
    for (Node i : order) {
      if (c.phi(id, i) < 1) continue;
      if (options.truncation && i == options.truncation->grading &&
          c.offset(id)[i] + 1 > options.truncation->max_degree)
        continue;
      auto next = c.model().lower(current, i);
      if (!next) throw InvariantViolation("lowering undefined although phi >= 1");
      auto [to, fresh] = c.insert(std::move(*next));
      if (fresh && c.size() > options.cap)
        throw CapExceeded("crystal generation for " + d.label() + " passed the cap of " +
                              std::to_string(options.cap) + " elements (processed " +
                              std::to_string(id) + ")",
                          c.size());
      c.set_lower_edge(id, i, to);
    }
  }
  return c;
}

std::vector<std::size_t> layer_sizes(const Crystal& c, Node grading) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < c.size(); ++id) {
    int deg = c.offset(id)[grading];
    if (static_cast<std::size_t>(deg) >= out.size()) out.resize(deg + 1, 0);
    ++out[deg];
  }
  return out;
}

}  // namespace tbranch
