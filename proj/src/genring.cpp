#include "tbranch/genring.hpp"

#include <algorithm>

#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

std::vector<int> add_parts(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

// 1-based part, zero past the end.
int part(const std::vector<int>& lam, int i) {
  return i >= 1 && i <= static_cast<int>(lam.size()) ? lam[i - 1] : 0;
}

void check_partition(const std::vector<int>& lam, int max_parts, const char* what) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 0) throw UsageError(std::string(what) + " has a negative part");
    if (i > 0 && lam[i] > lam[i - 1]) throw UsageError(std::string(what) + " is not weakly decreasing");
  }
  int parts = static_cast<int>(std::count_if(lam.begin(), lam.end(), [](int x) { return x > 0; }));
  if (parts > max_parts)
    throw UsageError(std::string(what) + " has " + std::to_string(parts) + " parts, at most " +
                     std::to_string(std::max(max_parts, 0)) + " allowed for this format");
}

void check_decreasing(const std::vector<int>& t, const char* what) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] > t[i - 1]) throw UsageError(std::string("invalid sextuple for this format: ") + what + " is not weakly decreasing");
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<int> ones(int n, int k) {
  std::vector<int> t(n, 0);
  for (int i = 0; i < k && i < n; ++i) t[i] = 1;
  return t;
}

std::vector<int> reduce(const std::vector<int>& t) {
  std::vector<int> out = t;
  if (!out.empty())
    for (int& x : out) x -= t.back();
  return out;
}

Sextuple unit(char which, int k = 1) {
  Sextuple mu;
  std::vector<int> p(k, 1);
  switch (which) {
    case 'a': mu.a = 1; break;
    case 'b': mu.b = 1; break;
    case 'c': mu.c = 1; break;
    case 'A': mu.alpha = p; break;
    case 'B': mu.beta = p; break;
    case 'G': mu.gamma = p; break;
  }
  return mu;
}

}  // namespace

Sextuple Sextuple::operator+(const Sextuple& o) const {
  return Sextuple{a + o.a, b + o.b, c + o.c, add_parts(alpha, o.alpha), add_parts(beta, o.beta),
                  add_parts(gamma, o.gamma)};
}

std::string Sextuple::to_string() const {
  auto part_text = [](const std::vector<int>& lam) {
    std::vector<int> nz;
    for (int x : lam)
      if (x > 0) nz.push_back(x);
    return nz.empty() ? std::string("()") : tuple_text(nz);
  };
  return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", c=" + std::to_string(c) +
         ", alpha=" + part_text(alpha) + ", beta=" + part_text(beta) + ", gamma=" + part_text(gamma) + ")";
}

void validate(const Sextuple& mu, const Format& f) {
  f.validate();
  if (mu.a < 0) throw UsageError("sextuple needs a >= 0");
  check_partition(mu.alpha, f.r3() - 1, "alpha");
  check_partition(mu.beta, f.r2() - 1, "beta");
  check_partition(mu.gamma, f.r1() - 1, "gamma");
}

std::vector<int> sigma(const Sextuple& mu, const Format& f) {
  validate(mu, f);
  int s = mu.a - mu.b + mu.c;
  std::vector<int> out;
  for (int i = 1; i <= f.r3() - 1; ++i) out.push_back(s + part(mu.alpha, i));
  out.push_back(s);
  check_decreasing(out, "sigma");
  return out;
}

std::vector<int> tau(const Sextuple& mu, const Format& f) {
  validate(mu, f);
  std::vector<int> out;
  for (int i = 1; i <= f.r1() - 1; ++i) out.push_back(mu.c + part(mu.gamma, i));
  out.push_back(mu.c);
  out.push_back(mu.c - mu.b);
  for (int j = f.r2() - 1; j >= 1; --j) out.push_back(mu.c - mu.b - part(mu.beta, j));
  check_decreasing(out, "tau");
  return out;
}

std::vector<int> theta(const Sextuple& mu, const Format& f) {
  validate(mu, f);
  int s = mu.b - mu.c;
  std::vector<int> out;
  for (int j = 1; j <= f.r2() - 1; ++j) out.push_back(s + part(mu.beta, j));
  out.push_back(s);
  out.push_back(s - mu.a);
  for (int i = f.r3() - 1; i >= 1; --i) out.push_back(s - mu.a - part(mu.alpha, i));
  check_decreasing(out, "theta");
  return out;
}

std::vector<int> phi(const Sextuple& mu, const Format& f) {
  validate(mu, f);
  std::vector<int> out(f.f0 - f.r1(), 0);
  out.push_back(-mu.c);
  for (int k = f.r1() - 1; k >= 1; --k) out.push_back(-mu.c - part(mu.gamma, k));
  check_decreasing(out, "phi");
  return out;
}

DominantBase weight_of(const std::vector<int>& sig, const std::vector<int>& ta, int a, const Diagram& d) {
  int r = d.r();
  if (static_cast<int>(sig.size()) != r - 1)
    throw UsageError("sigma needs " + std::to_string(r - 1) + " entries for " + d.label());
  if (static_cast<int>(ta.size()) != d.dim_f1())
    throw UsageError("tau needs " + std::to_string(d.dim_f1()) + " entries for " + d.label());
  std::vector<int> coeffs(d.size(), 0);
  coeffs[d.z(1)] = a;
  for (int i = 1; i <= r - 2; ++i) coeffs[d.z(i + 1)] = sig[r - 2 - i] - sig[r - 1 - i];
  auto chain = d.f1_chain();
  for (std::size_t k = 0; k + 1 < ta.size(); ++k) coeffs[chain[k]] = ta[k] - ta[k + 1];
  for (Node v = 0; v < d.size(); ++v)
    if (coeffs[v] < 0)
      throw UsageError("label " + std::to_string(coeffs[v]) + " at " + d.name(v, Scheme::Xyz) +
                       " is negative: not a valid lowest-weight datum");
  return DominantBase(coeffs);
}

DominantBase weight_of(const Sextuple& mu, const Format& f, const Diagram& d) {
  return weight_of(sigma(mu, f), tau(mu, f), mu.a, d);
}

std::vector<GeneratorEntry> generator_list(const Format& f) {
  f.validate();
  std::vector<GeneratorEntry> out;
  bool cyclic = f.r1() == 1;
  auto add = [&](int family, int param, Sextuple mu) {
    GeneratorEntry e;
    e.family = family;
    e.param = param;
    e.mu = std::move(mu);
    bool first = param <= 1;
    e.six_set = first;
    if (cyclic && family != 5 && first) {
      e.cyclic_set = true;
      if (family == 1 && f.r3() == 1) e.redundant = true;
      if (family == 2 && f.r3() > 1) e.redundant = true;
      if (e.redundant) e.note = "redundant for r3 " + std::string(f.r3() == 1 ? "= 1" : "> 1");
      if (family == 6) e.note = "the variable a1";
    }
    out.push_back(std::move(e));
  };
  for (int i = 1; i <= f.r3() - 1; ++i) add(1, i, unit('A', i));
  add(2, 0, unit('a'));
  for (int j = 1; j <= f.r2() - 1; ++j) add(3, j, unit('B', j));
  add(4, 0, unit('b'));
  for (int k = 1; k <= f.r1() - 1; ++k) add(5, k, unit('G', k));
  add(6, 0, unit('c'));
  return out;
}

std::string to_string(Role r) {
  switch (r) {
    case Role::D3: return "d3";
    case Role::D2: return "d2";
    case Role::D1: return "d1";
    case Role::A2: return "a2";
  }
  return "";
}

std::vector<CriticalWeight> critical_weights(const Format& f) {
  f.validate();
  Diagram d = from_format(f);
  std::vector<std::pair<Role, Sextuple>> picks;
  picks.emplace_back(Role::D3, f.r3() == 1 ? unit('a') : unit('A'));
  picks.emplace_back(Role::D2, unit('B'));
  if (f.r1() == 1) picks.emplace_back(Role::A2, unit('b'));
  else picks.emplace_back(Role::D1, unit('G'));
  std::vector<CriticalWeight> out;
  for (auto& [role, mu] : picks) {
    DominantBase lambda = weight_of(mu, f, d);
    auto node = lambda.fundamental_node();
    if (!node) throw InvariantViolation("critical weight is not fundamental");
    out.push_back(CriticalWeight{role, mu, lambda, *node, mu.a + 1});
  }
  return out;
}

DegreeOneReport verify_degree_one(const BranchTable& table, Role role) {
  const Diagram& d = table.diagram;
  int r1 = d.p() - 1, n1 = d.dim_f1(), n3 = d.dim_f3();
  DegreeOneReport rep;
  rep.role = role;
  rep.predicted.degree = 1;
  switch (role) {
    case Role::D3:
      rep.predicted.t1 = ones(n1, r1 + 1);
      rep.predicted.t3 = std::vector<int>(n3, 0);
      rep.full_tensor = "F₂*⊗";
      break;
    case Role::D2:
      rep.predicted.t1 = ones(n1, r1);
      rep.predicted.t3 = ones(n3, 1);
      rep.full_tensor = "F₂⊗";
      break;
    case Role::D1:
    case Role::A2:
      rep.predicted.t1 = ones(n1, r1 + 2);
      rep.predicted.t3 = ones(n3, 1);
      rep.full_tensor = "F₀*⊗";
      break;
  }
  rep.predicted_name = schur_name(rep.predicted.t1, rep.predicted.t3);
  rep.full_tensor += rep.predicted_name;
  if (!table.normalizers) {
    rep.message = "table has no normalizers";
    return rep;
  }
  for (const auto& row : tuple_rows(table))
    if (row.degree == 1) rep.found.push_back(row);
  rep.ok = rep.found.size() == 1 && rep.found[0] == rep.predicted;
  if (rep.ok) {
    rep.message = "degree 1 is " + rep.predicted_name + " (F0 and F2 factors not compared)";
  } else {
    rep.message = "expected " + rep.predicted_name + ", found";
    if (rep.found.empty()) rep.message += " nothing";
    for (const auto& row : rep.found) rep.message += " " + describe(row);
  }
  return rep;
}

TopReport top_components(const Format& f, const std::vector<const BranchTable*>& tables) {
  TopReport rep;
  auto crit = critical_weights(f);
  if (tables.size() != crit.size()) throw UsageError("top_components needs one table per critical weight");
  Diagram d = from_format(f);
  bool dynkin = d.type_class().finite();
  rep.applicable = dynkin && f.r1() == 1;
  if (f.r1() == 1 && f.r2() == 4 && f.r3() == 2) rep.exceptional = true;
  if (f.r1() == 1 && f.r3() == 1 && (f.r2() + 1) % 2 == 1) rep.exceptional = true;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    const BranchTable& t = *tables[k];
    if (t.truncated()) throw UsageError("top_components needs untruncated tables");
    TopEntry e;
    e.role = crit[k].role;
    e.degree = t.top_degree();
    for (const auto& row : tuple_rows(t))
      if (row.degree == e.degree) e.rows.push_back(row);
    for (const auto& row : e.rows) e.name += (e.name.empty() ? "" : " + ") + schur_name(row.t1, row.t3);
    std::vector<int> want1(d.dim_f1(), 0), want3(d.dim_f3(), 0);
    switch (e.role) {
      case Role::D3:
        if (want3.size() > 1) want3[0] = 1;
        e.expected = "F₃* up to det";
        break;
      case Role::D2:
        want1[0] = 1;
        e.expected = "F₁ up to det";
        break;
      default:
        want1 = ones(d.dim_f1(), d.dim_f1() - 1);
        e.expected = "F₁* up to det";
        break;
    }
    e.ok = e.rows.size() == 1 && e.rows[0].mult == 1 && reduce(e.rows[0].t1) == want1 &&
           reduce(e.rows[0].t3) == want3;
    rep.entries.push_back(std::move(e));
  }
  if (!rep.applicable) {
    rep.ok = true;
    rep.status = dynkin ? "not applicable: the top complex is stated for p = 2" : "not applicable: infinite type";
  } else if (rep.exceptional) {
    rep.ok = true;
    rep.status = "exceptional format " + f.to_string() + " (ranks " + std::to_string(f.r1()) + "," +
                 std::to_string(f.r2()) + "," + std::to_string(f.r3()) + "): reported, not checked";
  } else {
    rep.ok = std::all_of(rep.entries.begin(), rep.entries.end(), [](const TopEntry& e) { return e.ok; });
    rep.status = rep.ok ? "top components fit F3* -> F2 -> F1* -> F0 (F0 and F2 factors not compared)"
                        : "top components do not fit F3* -> F2 -> F1* -> F0";
  }
  return rep;
}

nlohmann::json to_json(const GeneratorEntry& e, const Format& f, const Diagram& d) {
  nlohmann::json j;
  j["family"] = e.family;
  if (e.param) j["param"] = e.param;
  j["mu"] = {{"a", e.mu.a}, {"b", e.mu.b}, {"c", e.mu.c},
             {"alpha", e.mu.alpha}, {"beta", e.mu.beta}, {"gamma", e.mu.gamma}};
  j["sigma"] = sigma(e.mu, f);
  j["tau"] = tau(e.mu, f);
  j["theta"] = theta(e.mu, f);
  j["phi"] = phi(e.mu, f);
  j["t"] = e.mu.a + 1;
  j["lambda"] = weight_of(e.mu, f, d).coeffs();
  j["six_set"] = e.six_set;
  j["cyclic_set"] = e.cyclic_set;
  j["redundant"] = e.redundant;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

namespace {
nlohmann::json row_json(const TupleRow& r) {
  return {{"degree", r.degree}, {"t1", r.t1}, {"t3", r.t3}, {"mult", r.mult}};
}
}  // namespace

nlohmann::json to_json(const DegreeOneReport& r) {
  nlohmann::json found = nlohmann::json::array();
  for (const auto& row : r.found) found.push_back(row_json(row));
  return {{"role", to_string(r.role)}, {"ok", r.ok}, {"predicted", row_json(r.predicted)},
          {"predicted_name", r.predicted_name}, {"full_tensor", r.full_tensor}, {"found", found},
          {"message", r.message}};
}

nlohmann::json to_json(const TopReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : e.rows) rows.push_back(row_json(row));
    entries.push_back({{"role", to_string(e.role)}, {"degree", e.degree}, {"rows", rows},
                       {"name", e.name}, {"expected", e.expected}, {"ok", e.ok}});
  }
  return {{"applicable", r.applicable}, {"exceptional", r.exceptional}, {"ok", r.ok},
          {"status", r.status}, {"entries", entries}};
}

}  // namespace tbranch
