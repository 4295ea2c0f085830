#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "tbranch/errors.hpp"
#include "tbranch/golden.hpp"
#include "tbranch/render.hpp"
#include "tbranch/runspec.hpp"

using namespace tbranch;
namespace fs = std::filesystem;

namespace {

BranchTable e7_table(int k) {
  Diagram d(2, 3, 4);
  DominantBase lam = DominantBase::fundamental(7, d.lookup(Scheme::Bourbaki, std::to_string(k)));
  BranchTable t = extract(generate(d, lam), d.grading_node());
  apply_normalizers(t, default_normalizers(d, lam));
  return t;
}

const GoldenTable& golden(const Corpus& c, const std::string& id) {
  for (const auto& g : c.tables)
    if (g.id == id) return g;
  throw std::runtime_error("no golden table " + id);
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("tbranch-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("text table") {
    std::string s = render(e7_table(7), OutFormat::Text);
    CHECK(s.rfind("T(2,3,4) E7, lambda = Lambda[7], grading 5, s1 = 0, s3 = -1\n", 0) == 0);
    CHECK(s.find("deg  component              t3        t1           mult  dim\n") != std::string::npos);
    CHECK(s.find("0    F₃                     (0,0,-1)  (0,0,0,0,0)  1     3\n") != std::string::npos);
    CHECK(s.find("5    S_{2,1,1}F₃*⊗S_{2⁵}F₁  (2,1,1)   (2,2,2,2,2)  1     3\n") != std::string::npos);
  }

  TEST_CASE("json table") {
    auto j = table_json(e7_table(2));
    for (const char* k : {"lambda", "grading", "s1", "s3", "rows"}) CHECK(j.contains(k));
    REQUIRE(j["rows"].size() == 24);
    for (const char* k : {"degree", "labels", "t1", "t3", "mult", "dim", "name"}) CHECK(j["rows"][0].contains(k));
    CHECK(j["s1"] == 1);
    CHECK(nlohmann::json::parse(render(e7_table(2), OutFormat::Json)) == j);
  }

  TEST_CASE("csv and latex") {
    std::string csv = render(e7_table(7), OutFormat::Csv);
    CHECK(csv.rfind("degree,labels,t3,t1,mult,dim,name\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    std::string tex = render(e7_table(7), OutFormat::Latex);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("F_3^*\\otimes \\bigwedge^{4}F_1") != std::string::npos);
    BranchTable bare = extract(generate(Diagram(2, 3, 4), DominantBase::fundamental(7, 0)), 4);
    CHECK_THROWS_AS(render(bare, OutFormat::Latex), UsageError);
    CHECK_NOTHROW(render(bare, OutFormat::Text));
  }

  TEST_CASE("output is deterministic") {
    CHECK(render(e7_table(1), OutFormat::Text) == render(e7_table(1), OutFormat::Text));
    CHECK(render(e7_table(1), OutFormat::Csv) == render(e7_table(1), OutFormat::Csv));
  }

  TEST_CASE("format names and widths") {
    CHECK(parse_out_format("csv") == OutFormat::Csv);
    CHECK_THROWS_AS(parse_out_format("xml"), UsageError);
    CHECK(display_width("F₃*⊗⋀⁴F₁") == 8);
    CHECK(display_width("abc") == 3);
  }
}

TEST_SUITE("golden") {
  TEST_CASE("corpus contents") {
    Corpus c = load_corpus(builtin_corpus_dir());
    CHECK(c.tables.size() == 24);
    CHECK(c.listings.size() == 1);
    int e6 = 0, e7 = 0, e8 = 0, incomplete = 0;
    for (const auto& g : c.tables) {
      e6 += g.type == "E6";
      e7 += g.type == "E7";
      e8 += g.type == "E8";
      incomplete += !g.complete;
      CHECK(g.format == golden_diagram(g).format());
    }
    CHECK(e6 == 6);
    CHECK(e7 == 9);
    CHECK(e8 == 9);
    CHECK(incomplete == 3);
    CHECK(c.listings[0].lines.size() == 6);
  }

  TEST_CASE("errata are applied on load") {
    Corpus c = load_corpus(builtin_corpus_dir());
    const auto& g = golden(c, "E6-a2-V2");
    REQUIRE(g.errata.size() == 1);
    bool printed = false, corrected = false;
    for (const auto& r : g.rows) {
      printed = printed || r.t1 == std::vector<int>{2, 2, 2, 0, 0, 0};
      corrected = corrected || r.t1 == std::vector<int>{2, 1, 1, 1, 1, 0};
    }
    CHECK_FALSE(printed);
    CHECK(corrected);
  }

  TEST_CASE("null t3 entries are filled") {
    Corpus c = load_corpus(builtin_corpus_dir());
    const auto& g = golden(c, "E6-a2-V2");
    for (const auto& r : golden_rows(g, Normalizers{0, 0})) {
      REQUIRE(r.t3.size() == 1);
      CHECK(r.t3[0] == r.degree);
    }
  }

  TEST_CASE("small tables verify") {
    Corpus c = load_corpus(builtin_corpus_dir());
    for (const char* id : {"E6-a5-V1", "E6-a2-V2", "E7-a5-V7"}) {
      TableCheck r = verify_table(golden(c, id));
      CHECK_MESSAGE(r.ok, id);
      CHECK(r.elements == r.weyl_dim);
    }
    auto l = verify_listing(c.listings[0]);
    CHECK(l.ok);
    CHECK(l.produced.front() == "0 , Lambda[7]");
  }

  TEST_CASE("a mismatching row is reported") {
    Corpus c = load_corpus(builtin_corpus_dir());
    GoldenTable g = golden(c, "E7-a5-V7");
    g.rows.back().mult = 2;
    TableCheck r = verify_table(g);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.messages.empty());
  }

  TEST_CASE("malformed corpus files") {
    fs::path dir = scratch_dir("corpus");
    std::ofstream(dir / "bad.json") << "{ \"kind\": \"branching-table\", ";
    try {
      load_corpus(dir.string());
      FAIL("no error");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("bad.json") != std::string::npos);
    }
    CHECK_THROWS_AS(load_corpus((dir / "missing").string()), UsageError);
    fs::remove_all(dir);
  }
}

TEST_SUITE("runspec") {
  TEST_CASE("format parsing") {
    CHECK(parse_format({1, 5, 7, 3}) == Format{1, 5, 7, 3});
    CHECK(parse_format({1, 4, 3}) == Format{1, 5, 7, 3});
    CHECK_THROWS_AS(parse_format({1, 5}), UsageError);
    CHECK_THROWS_AS(parse_format({1, 5, 7, 4}), UsageError);
    CHECK(parse_normalizers("0,-1") == Normalizers{0, -1});
    CHECK_THROWS_AS(parse_normalizers("0"), UsageError);
  }

  TEST_CASE("resolution") {
    RunSpec s;
    s.type = "E6";
    s.grade = "5";
    s.hw = "6";
    s.lowest = true;
    Resolved r = resolve(s);
    CHECK(r.lambda.fundamental_node() == r.diagram.lookup(Scheme::Bourbaki, "1"));
    REQUIRE(r.normalizers);
    RunSpec two = s;
    two.pqr = {2, 3, 3};
    CHECK_THROWS_AS(resolve(two), UsageError);
    RunSpec none;
    none.hw = "1";
    CHECK_THROWS_AS(resolve(none), UsageError);
    RunSpec affine;
    affine.pqr = {3, 3, 3};
    affine.hw = "z2";
    CHECK_THROWS_AS(resolve(affine), UsageError);
    affine.trunc = 2;
    CHECK(resolve(affine).truncation->max_degree == 2);
  }

  TEST_CASE("cache round trip") {
    fs::path dir = scratch_dir("cache");
    Diagram d(2, 3, 3);
    DominantBase lam = DominantBase::fundamental(6, d.lookup(Scheme::Bourbaki, "1"));
    Crystal cold = obtain_crystal(d, lam, std::nullopt, kDefaultElementCap, dir.string());
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
    Crystal hot = obtain_crystal(d, lam, std::nullopt, kDefaultElementCap, dir.string());
    CHECK(export_crystal(cold) == export_crystal(hot));
    fs::remove_all(dir);
  }
}
