#pragma once

#include <string>
#include <vector>

#include "tbranch/branching.hpp"
#include "tbranch/diagram.hpp"

namespace tbranch {

enum class DnFamily {
  OneNN1,  // (1,n,n,1)
  One4N,   // (1,4,n,n-3)
  Mirror,  // (n-3,n,4,1), the first format with F1 and F1* exchanged
};
enum class DnWeight { Omega1, OmegaNm1, OmegaN };

std::string to_string(DnFamily f);
std::string to_string(DnWeight w);

struct DnOracle {
  DnFamily family;
  int n;
  DnWeight which;
  Diagram diagram;
  DominantBase lambda;
  Normalizers normalizers;
  std::vector<TupleRow> rows;
  // False when some summand admits no integral gl twist at its degree.
  bool consistent = true;
  std::vector<std::string> notes;
};

// Expected graded decomposition of V(omega) from the closed forms.
// Summand degrees: list position for omega_1, the summation index k
// for the (1,n,n,1) sums, j for exterior powers of F3*, and m - j for
// exterior powers of F3 (m = dim F3). Each summand is then twisted by
// powers of det F1 and det F3* to meet the table normalizers.
DnOracle dn_oracle(DnFamily family, int n, DnWeight which);
// Resolves the family from the format; (1,4,4,1) resolves to OneNN1.
DnOracle dn_oracle(const Format& f, DnWeight which);

}  // namespace tbranch
