#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "tbranch/diagram.hpp"
#include "tbranch/errors.hpp"
#include "tbranch/rational.hpp"

using namespace tbranch;

namespace {

// Standard E_n / D_n edge lists in Bourbaki labels.
std::vector<std::pair<int, int>> standard_edges(char kind, int n) {
  std::vector<std::pair<int, int>> e;
  if (kind == 'E') {
    e = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int k = 5; k < n; ++k) e.emplace_back(k, k + 1);
  } else if (kind == 'D') {
    for (int k = 1; k < n - 1; ++k) e.emplace_back(k, k + 1);
    e.emplace_back(n - 2, n);
  } else {
    for (int k = 1; k < n; ++k) e.emplace_back(k, k + 1);
  }
  return e;
}

void check_bourbaki_iso(const Diagram& d, char kind, int n) {
  REQUIRE(d.has_bourbaki());
  REQUIRE(d.size() == n);
  std::set<std::pair<int, int>> want;
  for (auto [a, b] : standard_edges(kind, n)) want.insert({std::min(a, b), std::max(a, b)});
  std::set<std::pair<int, int>> got;
  for (Node a = 0; a < d.size(); ++a)
    for (Node b : d.neighbours(a)) {
      int la = *d.bourbaki(a), lb = *d.bourbaki(b);
      got.insert({std::min(la, lb), std::max(la, lb)});
    }
  CHECK(got == want);
}

Rational determinant(std::vector<std::vector<int>> a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == Rational(0)) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("build_diagram examples") {
    Diagram e7(2, 3, 4);
    CHECK(e7.size() == 7);
    CHECK(e7.type_class().name == "E7");
    CHECK(*e7.bourbaki(e7.z(1)) == 5);
    check_bourbaki_iso(e7, 'E', 7);

    Diagram e6(2, 3, 3);
    CHECK(e6.size() == 6);
    CHECK(e6.type_class().name == "E6");
    CHECK(*e6.bourbaki(e6.z(1)) == 5);
    check_bourbaki_iso(e6, 'E', 6);

    Diagram aff(3, 3, 3);
    CHECK(aff.size() == 7);
    CHECK(aff.type_class().kind == TypeClass::Kind::Affine);
    CHECK_FALSE(aff.has_bourbaki());
  }

  TEST_CASE("r < 2 is rejected with a grading message") {
    try {
      Diagram d(2, 3, 1);
      FAIL("no error");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("grading") != std::string::npos);
    }
    CHECK_THROWS_AS(Diagram(0, 3, 3), UsageError);
  }

  TEST_CASE("from_format examples") {
    Diagram e7 = from_format(Format{1, 5, 7, 3});
    CHECK(e7.p() == 2);
    CHECK(e7.q() == 3);
    CHECK(e7.r() == 4);
    CHECK(e7.type_class().name == "E7");

    Diagram e8 = from_format(Format{2, 8, 7, 1});
    CHECK(e8.type_class().name == "E8");
    CHECK(e8.p() == 3);
    CHECK(e8.q() == 5);
    CHECK(e8.r() == 2);

    for (int n = 4; n <= 8; ++n) {
      Diagram d = from_format(Format{1, n, n, 1});
      CHECK(d.type_class().name == "D" + std::to_string(n));
      CHECK(d.p() == 2);
      CHECK(d.q() == n - 2);
      CHECK(d.r() == 2);
    }
  }

  TEST_CASE("format round trip and inconsistent formats") {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q)
        for (int r = 2; r <= 5; ++r) {
          Diagram d(p, q, r);
          Format f = d.format();
          CHECK_NOTHROW(f.validate());
          Diagram back = from_format(f);
          CHECK(back.p() == p);
          CHECK(back.q() == q);
          CHECK(back.r() == r);
          CHECK(back.format() == f);
        }
    try {
      Format{1, 5, 6, 3}.validate();
      FAIL("no error");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("f2") != std::string::npos);
    }
  }

  TEST_CASE("cartan matrix") {
    Diagram d4(2, 2, 2);
    const auto& a = d4.cartan();
    CHECK(a[d4.center()] == std::vector<int>{2, -1, -1, -1});
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 4; ++q)
        for (int r = 2; r <= 4; ++r) {
          Diagram d(p, q, r);
          const auto& m = d.cartan();
          for (Node i = 0; i < d.size(); ++i) {
            CHECK(m[i][i] == 2);
            int off = 0;
            for (Node j = 0; j < d.size(); ++j) {
              CHECK(m[i][j] == m[j][i]);
              if (j != i) off += m[i][j];
            }
            CHECK(off == -static_cast<int>(d.neighbours(i).size()));
          }
        }
  }

  TEST_CASE("E7 cartan matrix matches the Bourbaki table") {
    // Rows of the standard E7 Cartan matrix in Bourbaki order.
    const int e7[7][7] = {{2, 0, -1, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0},  {-1, 0, 2, -1, 0, 0, 0},
                          {0, -1, -1, 2, -1, 0, 0}, {0, 0, 0, -1, 2, -1, 0}, {0, 0, 0, 0, -1, 2, -1},
                          {0, 0, 0, 0, 0, -1, 2}};
    Diagram d(2, 3, 4);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        Node a = d.lookup(Scheme::Bourbaki, std::to_string(i));
        Node b = d.lookup(Scheme::Bourbaki, std::to_string(j));
        CHECK(d.cartan()[a][b] == e7[i - 1][j - 1]);
      }
  }

  TEST_CASE("node lookup examples") {
    Diagram e7(2, 3, 4);
    CHECK(*e7.bourbaki(e7.lookup(Scheme::Xyz, "z1")) == 5);
    Diagram e8a3 = Diagram::from_type("E8", 3);
    CHECK(*e8a3.bourbaki(e8a3.lookup(Scheme::Xyz, "z2")) == 1);
    for (auto pqr : {std::array<int, 3>{2, 3, 4}, {3, 3, 3}, {2, 2, 5}}) {
      Diagram d(pqr[0], pqr[1], pqr[2]);
      Node u = d.lookup(Scheme::Xyz, "u");
      CHECK(d.neighbours(u).size() == 3);
    }
  }

  TEST_CASE("names round trip in every scheme") {
    for (auto [type, grade] : std::vector<std::pair<std::string, int>>{{"E6", 5}, {"E7", 5}, {"E8", 3}, {"D6", 5}}) {
      Diagram d = Diagram::from_type(type, grade);
      for (auto s : {Scheme::Canonical, Scheme::Xyz, Scheme::Primes, Scheme::Bourbaki})
        for (Node v = 0; v < d.size(); ++v) CHECK(d.lookup(s, d.name(v, s)) == v);
      for (Node v = 0; v < d.size(); ++v) {
        CHECK(d.parse_node(d.name(v, Scheme::Xyz)) == v);
        CHECK(d.parse_node(d.name(v, Scheme::Bourbaki)) == v);
        CHECK(d.parse_node(d.name(v, Scheme::Canonical)) == v);
        CHECK(d.parse_node("p:" + d.name(v, Scheme::Primes)) == v);
      }
    }
  }

  TEST_CASE("unknown names list the valid ones") {
    Diagram d(2, 3, 4);
    try {
      d.lookup(Scheme::Xyz, "w3");
      FAIL("no error");
    } catch (const UsageError& e) {
      std::string msg = e.what();
      CHECK(msg.find("z3") != std::string::npos);
      CHECK(msg.find("y2") != std::string::npos);
    }
    Diagram aff(3, 3, 3);
    CHECK_THROWS_AS(aff.parse_node("3"), UsageError);
  }

  TEST_CASE("from_type places z1 at the grading node") {
    for (auto [type, grades] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"E6", {2, 3, 5}}, {"E7", {2, 3, 5}}, {"E8", {2, 3, 5}}, {"D5", {2, 4, 5}}, {"D7", {4, 6, 7}}}) {
      for (int g : grades) {
        Diagram d = Diagram::from_type(type, g);
        CHECK(*d.bourbaki(d.grading_node()) == g);
        CHECK(d.type_class().name == type);
        char kind = type[0];
        check_bourbaki_iso(d, kind, std::stoi(type.substr(1)));
      }
    }
    CHECK_THROWS_AS(Diagram::from_type("E7", 6), UsageError);
  }

  TEST_CASE("arm swap is a graph isomorphism") {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        Diagram a(p, q, 3), b(q, p, 3);
        auto perm = [&](Node v) -> Node {
          switch (a.arm_of(v)) {
            case Arm::X: return b.y(a.arm_index(v));
            case Arm::Y: return b.x(a.arm_index(v));
            case Arm::Z: return b.z(a.arm_index(v));
            default: return b.center();
          }
        };
        for (Node i = 0; i < a.size(); ++i)
          for (Node j = 0; j < a.size(); ++j) CHECK(a.cartan()[i][j] == b.cartan()[perm(i)][perm(j)]);
      }
    Diagram e6 = Diagram::from_type("E6", 2);
    Diagram sw = e6.with_swapped_arms();
    CHECK(sw.arms_swapped());
    for (Node v = 0; v < e6.size(); ++v) CHECK(sw.lookup(Scheme::Bourbaki, e6.name(v, Scheme::Bourbaki)) >= 0);
    CHECK(*sw.bourbaki(sw.x(1)) == *e6.bourbaki(e6.y(1)));
    CHECK_THROWS_AS(Diagram(2, 3, 4).with_swapped_arms(), UsageError);
  }

  TEST_CASE("deleting z1 leaves paths of p+q-1 and r-2 nodes") {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q)
        for (int r = 2; r <= 5; ++r) {
          Diagram d(p, q, r);
          Node cut = d.z(1);
          std::vector<int> comp(d.size(), -1);
          std::vector<int> sizes;
          for (Node s = 0; s < d.size(); ++s) {
            if (s == cut || comp[s] >= 0) continue;
            int id = static_cast<int>(sizes.size());
            sizes.push_back(0);
            std::vector<Node> stack{s};
            comp[s] = id;
            int max_deg = 0;
            while (!stack.empty()) {
              Node v = stack.back();
              stack.pop_back();
              ++sizes[id];
              int deg = 0;
              for (Node w : d.neighbours(v)) {
                if (w == cut) continue;
                ++deg;
                if (comp[w] < 0) {
                  comp[w] = id;
                  stack.push_back(w);
                }
              }
              max_deg = std::max(max_deg, deg);
            }
            CHECK(max_deg <= 2);
          }
          std::vector<int> want{p + q - 1};
          if (r > 2) want.push_back(r - 2);
          std::sort(sizes.begin(), sizes.end());
          std::sort(want.begin(), want.end());
          CHECK(sizes == want);
          CHECK(static_cast<int>(d.f1_chain().size()) == p + q - 1);
          CHECK(static_cast<int>(d.f3_chain().size()) == r - 2);
        }
  }

  TEST_CASE("classification agrees with the determinant sign") {
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q)
        for (int r = 2; r <= 6; ++r) {
          Diagram d(p, q, r);
          Rational det = determinant(d.cartan());
          auto kind = d.type_class().kind;
          if (det > Rational(0)) CHECK(kind == TypeClass::Kind::Finite);
          else if (det == Rational(0)) CHECK(kind == TypeClass::Kind::Affine);
          else CHECK(kind == TypeClass::Kind::Indefinite);
        }
  }

  TEST_CASE("opposition involution") {
    Diagram e6 = Diagram::from_type("E6", 5);
    auto op = [&](int k) { return *e6.bourbaki(e6.opposition(e6.lookup(Scheme::Bourbaki, std::to_string(k)))); };
    CHECK(op(1) == 6);
    CHECK(op(3) == 5);
    CHECK(op(2) == 2);
    CHECK(op(4) == 4);
    Diagram e7(2, 3, 4);
    for (Node v = 0; v < e7.size(); ++v) CHECK(e7.opposition(v) == v);
    Diagram d5 = Diagram::from_type("D5", 4);
    auto op5 = [&](int k) { return *d5.bourbaki(d5.opposition(d5.lookup(Scheme::Bourbaki, std::to_string(k)))); };
    CHECK(op5(4) == 5);
    CHECK(op5(1) == 1);
  }
}
