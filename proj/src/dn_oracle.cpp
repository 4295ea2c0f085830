#include "tbranch/oracle.hpp"

#include <numeric>

#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

struct Term {
  int degree;
  std::vector<int> t1;  // literal gl(F1) weight
  std::vector<int> t3;  // literal weight on F3*
};

std::vector<int> wedge(int n, int k) {
  std::vector<int> t(n, 0);
  for (int i = 0; i < k; ++i) t[i] = 1;
  return t;
}

std::vector<int> wedge_dual(int n, int k) {
  std::vector<int> t(n, 0);
  for (int i = 0; i < k; ++i) t[n - 1 - i] = -1;
  return t;
}

long long total(const std::vector<int>& t) { return std::accumulate(t.begin(), t.end(), 0LL); }

Diagram oracle_diagram(DnFamily family, int n) {
  std::string type = "D" + std::to_string(n);
  switch (family) {
    case DnFamily::OneNN1: return Diagram::from_type(type, n - 1);
    case DnFamily::One4N: return Diagram::from_type(type, n - 3);
    case DnFamily::Mirror: return from_format(Format{n - 3, n, 4, 1});
  }
  throw UsageError("unknown D_n family");
}

int bourbaki_node(DnWeight w, int n) {
  switch (w) {
    case DnWeight::Omega1: return 1;
    case DnWeight::OmegaNm1: return n - 1;
    case DnWeight::OmegaN: return n;
  }
  return 1;
}

// (1,n,n,1) closed forms with F1 as given; `dual` exchanges F1 and F1*.
std::vector<Term> vector_terms(int n, bool spin_even, bool omega1, bool dual, std::vector<std::string>& notes) {
  auto f1 = [&](int k) { return dual ? wedge_dual(n, k) : wedge(n, k); };
  auto f1_star = [&]() { return dual ? wedge(n, 1) : wedge_dual(n, 1); };
  std::vector<Term> terms;
  if (omega1) {
    terms.push_back({0, f1_star(), {0}});
    terms.push_back({1, f1(1), {1}});
    return terms;
  }
  if (n % 2 == 1) notes.push_back("summation bound n/2 read as floor(n/2) for odd n");
  if (spin_even) {
    // S_{1-k}F3* (x) wedge^{2k} F1
    for (int k = 0; 2 * k <= n; ++k) terms.push_back({k, f1(2 * k), {1 - k}});
  } else {
    // S_{-k}F3 (x) wedge^{2k+1} F1
    for (int k = 0; 2 * k + 1 <= n; ++k) terms.push_back({k, f1(2 * k + 1), {k}});
  }
  return terms;
}

}  // namespace

std::string to_string(DnFamily f) {
  switch (f) {
    case DnFamily::OneNN1: return "(1,n,n,1)";
    case DnFamily::One4N: return "(1,4,n,n-3)";
    case DnFamily::Mirror: return "(n-3,n,4,1)";
  }
  return "";
}

std::string to_string(DnWeight w) {
  switch (w) {
    case DnWeight::Omega1: return "omega_1";
    case DnWeight::OmegaNm1: return "omega_{n-1}";
    case DnWeight::OmegaN: return "omega_n";
  }
  return "";
}

DnOracle dn_oracle(DnFamily family, int n, DnWeight which) {
  if (n < 4) throw UsageError("D_n needs n >= 4");
  if (family == DnFamily::Mirror && n < 5) throw UsageError("the format (n-3,n,4,1) needs n >= 5");
  Diagram d = oracle_diagram(family, n);
  Node v = d.lookup(Scheme::Bourbaki, std::to_string(bourbaki_node(which, n)));
  DominantBase lambda = DominantBase::fundamental(d.size(), v);
  DnOracle out{family, n, which, d, lambda, default_normalizers(d, lambda), {}, true, {}};

  std::vector<Term> terms;
  std::vector<std::string>& notes = out.notes;
  switch (family) {
    case DnFamily::OneNN1:
      terms = vector_terms(n, which == DnWeight::OmegaNm1, which == DnWeight::Omega1, false, notes);
      break;
    case DnFamily::Mirror:
      terms = vector_terms(n, which == DnWeight::OmegaN, which == DnWeight::Omega1, true, notes);
      break;
    case DnFamily::One4N: {
      int m = n - 3;
      if (which == DnWeight::Omega1) {
        terms.push_back({0, wedge(4, 0), wedge_dual(m, 1)});
        terms.push_back({1, wedge(4, 2), wedge(m, 0)});
        terms.push_back({2, wedge(4, 4), wedge(m, 1)});
      } else {
        bool on_dual = which == DnWeight::OmegaN;  // wedge^j F3* versus wedge^j F3
        for (int j = 0; j <= m; ++j) {
          std::vector<int> t1 = j % 2 == 0 ? wedge(4, 1) : wedge_dual(4, 1);
          if (on_dual) terms.push_back({j, t1, wedge(m, j)});
          else terms.push_back({m - j, t1, wedge_dual(m, j)});
        }
      }
      break;
    }
  }

  const Normalizers& s = out.normalizers;
  for (const auto& term : terms) {
    long long n1 = d.dim_f1(), n3 = d.dim_f3();
    long long need1 = 1LL * d.p() * term.degree + s.s1 - total(term.t1);
    long long need3 = 1LL * term.degree + s.s3 - total(term.t3);
    if (need1 % n1 != 0 || need3 % n3 != 0) {
      out.consistent = false;
      notes.push_back("summand at degree " + std::to_string(term.degree) + " (" + schur_name(term.t1, term.t3) +
                      ") admits no integral twist under s1=" + std::to_string(s.s1) +
                      ", s3=" + std::to_string(s.s3));
      continue;
    }
    TupleRow row;
    row.degree = term.degree;
    for (int x : term.t1) row.t1.push_back(x + static_cast<int>(need1 / n1));
    for (int x : term.t3) row.t3.push_back(x + static_cast<int>(need3 / n3));
    row.mult = 1;
    out.rows.push_back(std::move(row));
  }
  return out;
}

DnOracle dn_oracle(const Format& f, DnWeight which) {
  f.validate();
  if (f.f0 == 1 && f.f1 == f.f2 && f.f3 == 1) return dn_oracle(DnFamily::OneNN1, f.f1, which);
  if (f.f0 == 1 && f.f1 == 4 && f.f3 == f.f2 - 3) return dn_oracle(DnFamily::One4N, f.f2, which);
  if (f.f2 == 4 && f.f3 == 1 && f.f0 == f.f1 - 3) return dn_oracle(DnFamily::Mirror, f.f1, which);
  throw UsageError("format " + f.to_string() + " is not one of the D_n formats (1,n,n,1), (1,4,n,n-3), (n-3,n,4,1)");
}

}  // namespace tbranch
