#include <doctest.h>

#include "tbranch/errors.hpp"
#include "tbranch/oracle.hpp"

using namespace tbranch;

namespace {

std::vector<std::string> names(const DnOracle& o) {
  std::vector<std::string> out;
  for (const auto& r : o.rows) out.push_back(schur_name(r.t1, r.t3));
  return out;
}

std::vector<TupleRow> computed(const DnOracle& o) {
  BranchTable t = extract(generate(o.diagram, o.lambda), o.diagram.grading_node());
  apply_normalizers(t, o.normalizers);
  return tuple_rows(t);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("closed forms for omega_1") {
    DnOracle a = dn_oracle(Format{1, 5, 5, 1}, DnWeight::Omega1);
    CHECK(a.family == DnFamily::OneNN1);
    CHECK(names(a) == std::vector<std::string>{"F₁*", "F₃*⊗F₁"});
    CHECK(a.rows[0].degree == 0);
    CHECK(a.rows[1].degree == 1);
    DnOracle b = dn_oracle(Format{1, 4, 6, 3}, DnWeight::Omega1);
    CHECK(b.family == DnFamily::One4N);
    CHECK(names(b) == std::vector<std::string>{"F₃", "⋀²F₁", "F₃*⊗⋀⁴F₁"});
  }

  TEST_CASE("(1,4,4,1) resolves to the first family") {
    DnOracle o = dn_oracle(Format{1, 4, 4, 1}, DnWeight::OmegaN);
    CHECK(o.family == DnFamily::OneNN1);
    CHECK(o.n == 4);
    CHECK(o.consistent);
    CHECK(compare_rows(o.rows, computed(o)).empty());
  }

  TEST_CASE("unsupported formats") {
    CHECK_THROWS_AS(dn_oracle(Format{1, 5, 7, 3}, DnWeight::Omega1), UsageError);
    CHECK_THROWS_AS(dn_oracle(DnFamily::OneNN1, 3, DnWeight::Omega1), UsageError);
    CHECK_THROWS_AS(dn_oracle(DnFamily::Mirror, 4, DnWeight::Omega1), UsageError);
    CHECK(dn_oracle(Format{2, 5, 4, 1}, DnWeight::Omega1).family == DnFamily::Mirror);
  }

  TEST_CASE("consistent closed forms match the crystal") {
    for (auto fam : {DnFamily::OneNN1, DnFamily::One4N}) {
      for (int n = 4; n <= 8; ++n) {
        for (auto w : {DnWeight::Omega1, DnWeight::OmegaNm1, DnWeight::OmegaN}) {
          DnOracle o = dn_oracle(fam, n, w);
          if (!o.consistent) continue;
          auto diff = compare_rows(o.rows, computed(o));
          CHECK_MESSAGE(diff.empty(), to_string(fam) << " n=" << n << " " << to_string(w));
        }
      }
    }
  }

  TEST_CASE("mirror family matches the crystal") {
    for (int n = 5; n <= 8; ++n)
      for (auto w : {DnWeight::Omega1, DnWeight::OmegaNm1, DnWeight::OmegaN}) {
        DnOracle o = dn_oracle(DnFamily::Mirror, n, w);
        REQUIRE(o.consistent);
        CHECK_MESSAGE(compare_rows(o.rows, computed(o)).empty(), "n=" << n << " " << to_string(w));
      }
  }

  TEST_CASE("non-integral twists are flagged") {
    for (int n = 4; n <= 8; ++n) {
      DnOracle o = dn_oracle(DnFamily::One4N, n, DnWeight::OmegaNm1);
      CHECK(o.consistent == (n % 2 == 0));
      if (!o.consistent) {
        bool noted = false;
        for (const auto& s : o.notes) noted = noted || s.find("admits no integral twist") != std::string::npos;
        CHECK(noted);
      }
    }
    DnOracle odd = dn_oracle(DnFamily::OneNN1, 5, DnWeight::OmegaN);
    bool floor_note = false;
    for (const auto& s : odd.notes) floor_note = floor_note || s.find("floor") != std::string::npos;
    CHECK(floor_note);
  }

  TEST_CASE("names") {
    CHECK(to_string(DnFamily::One4N) == "(1,4,n,n-3)");
    CHECK(to_string(DnWeight::OmegaNm1) == "omega_{n-1}");
  }
}
