#include "tbranch/weightspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tbranch/errors.hpp"

namespace tbranch {

DominantBase::DominantBase(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int c : coeffs_)
    if (c < 0) throw UsageError("highest weight must be dominant (nonnegative coefficients)");
}

DominantBase DominantBase::fundamental(int n, Node v) {
  std::vector<int> c(n, 0);
  c.at(v) = 1;
  return DominantBase(std::move(c));
}

bool DominantBase::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

std::optional<Node> DominantBase::fundamental_node() const {
  std::optional<Node> found;
  for (int v = 0; v < size(); ++v) {
    if (coeffs_[v] == 0) continue;
    if (coeffs_[v] != 1 || found) return std::nullopt;
    found = v;
  }
  return found;
}

WeightOffset WeightOffset::at_base(const DominantBase& b) {
  return WeightOffset{b, std::vector<Rational>(b.size(), Rational(0))};
}

Rational pairing(const Diagram& d, const WeightOffset& w, Node i) {
  const auto& a = d.cartan()[i];
  Rational s(w.base[i]);
  for (int j = 0; j < d.size(); ++j)
    if (a[j] != 0) s -= w.c[j] * a[j];
  return s;
}

long long pairing(const Diagram& d, const DominantBase& base, const std::vector<int>& c, Node i) {
  const auto& a = d.cartan()[i];
  long long s = base[i];
  for (int j = 0; j < d.size(); ++j) s -= static_cast<long long>(c[j]) * a[j];
  return s;
}

WeightOffset reflect(const Diagram& d, const WeightOffset& w, Node i) {
  WeightOffset out = w;
  out.c[i] += pairing(d, w, i);
  return out;
}

std::vector<std::vector<int>> positive_roots(const Diagram& d, std::size_t cap) {
  if (!d.type_class().finite())
    throw UsageError("positive roots are enumerated only for finite types; " + d.label() + " is " +
                     d.type_class().describe());
  int n = d.size();
  const auto& a = d.cartan();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pr = 0;
        for (int j = 0; j < n; ++j) pr += a[i][j] * beta[j];
        if (pr >= 0) continue;
        std::vector<int> img = beta;
        img[i] -= pr;
        if (seen.insert(img).second) {
          if (seen.size() > cap)
            throw CapExceeded("positive root enumeration exceeded cap " + std::to_string(cap),
                              seen.size());
          next.push_back(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> roots(seen.begin(), seen.end());
  auto height = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const auto& l, const auto& r) {
    int hl = height(l), hr = height(r);
    return hl != hr ? hl < hr : l < r;
  });
  return roots;
}

BigInt weyl_dimension(const Diagram& d, const DominantBase& lambda) {
  auto roots = positive_roots(d);
  BigInt num = 1, den = 1;
  for (const auto& beta : roots) {
    long long top = 0, bottom = 0;
    for (int j = 0; j < d.size(); ++j) {
      top += static_cast<long long>(beta[j]) * (lambda[j] + 1);
      bottom += beta[j];
    }
    num *= top;
    den *= bottom;
  }
  if (num % den != 0) throw InvariantViolation("Weyl dimension formula gave a non-integer");
  return num / den;
}

std::string format_weight(const Diagram& d, const std::vector<long long>& coeffs) {
  std::map<int, long long> terms;
  std::map<int, std::string> labels;
  for (Node v = 0; v < d.size(); ++v) {
    if (coeffs[v] == 0) continue;
    int key = d.has_bourbaki() ? *d.bourbaki(v) : v;
    terms[key] = coeffs[v];
    labels[key] = d.has_bourbaki() ? std::to_string(key) : d.name(v, Scheme::Xyz);
  }
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "Lambda[" + labels[key] + "]";
    first = false;
  }
  return out;
}

}  // namespace tbranch
