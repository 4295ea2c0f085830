#include "tbranch/golden.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "tbranch/errors.hpp"
#include "tbranch/runspec.hpp"

namespace tbranch {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j) {
  if (j.is_null()) return {};
  return j.get<std::vector<int>>();
}

TupleRow parse_row(const json& j, int degree) {
  TupleRow r;
  r.degree = degree;
  r.t1 = int_list(j.at("t1"));
  r.t3 = j.contains("t3") ? int_list(j.at("t3")) : std::vector<int>{};
  r.mult = j.value("mult", 1);
  return r;
}

GoldenTable parse_table(const json& j) {
  GoldenTable g;
  g.id = j.at("id").get<std::string>();
  g.type = j.at("type").get<std::string>();
  g.title = j.value("title", "");
  g.note = j.value("note", "");
  g.grading = j.at("grading").get<int>();
  auto f = j.at("format").get<std::vector<int>>();
  if (f.size() != 4) throw UsageError("format must have four entries");
  g.format = Format{f[0], f[1], f[2], f[3]};
  g.highest_weight = j.at("highest_weight").get<int>();
  if (!j.at("dimension").is_null()) g.dimension = j.at("dimension").get<std::uint64_t>();
  if (!j.at("graded_components").is_null()) g.graded_components = j.at("graded_components").get<int>();
  auto pr = j.at("printed_degrees").get<std::vector<int>>();
  if (pr.size() != 2) throw UsageError("printed_degrees must be [first, last]");
  g.printed_from = pr[0];
  g.printed_to = pr[1];
  g.complete = j.at("complete").get<bool>();
  for (const auto& row : j.at("rows")) {
    g.rows.push_back(parse_row(row, row.at("degree").get<int>()));
    g.names.push_back(row.value("name", ""));
  }
  if (j.contains("errata")) {
    for (const auto& e : j.at("errata")) {
      Erratum er;
      er.degree = e.at("degree").get<int>();
      er.printed = parse_row(e.at("printed"), er.degree);
      er.corrected = parse_row(e.at("corrected"), er.degree);
      er.evidence = e.value("evidence", "");
      bool applied = false;
      for (auto& row : g.rows) {
        if (row.degree == er.degree && row.t1 == er.printed.t1 && row.mult == er.printed.mult &&
            (er.printed.t3.empty() || row.t3 == er.printed.t3)) {
          row.t1 = er.corrected.t1;
          if (!er.corrected.t3.empty()) row.t3 = er.corrected.t3;
          row.mult = er.corrected.mult;
          applied = true;
          break;
        }
      }
      if (!applied) throw UsageError("erratum at degree " + std::to_string(er.degree) + " matches no printed row");
      g.errata.push_back(std::move(er));
    }
  }
  return g;
}

AppendixListing parse_listing(const json& j) {
  AppendixListing a;
  a.id = j.at("id").get<std::string>();
  a.type = j.at("type").get<std::string>();
  a.grading = j.at("grading").get<int>();
  a.highest_weight = j.at("highest_weight").get<int>();
  a.levi_nodes = j.at("levi_nodes").get<std::vector<int>>();
  a.lines = j.at("lines").get<std::vector<std::string>>();
  return a;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string builtin_corpus_dir() { return std::string(TBRANCH_DATA_DIR) + "/golden"; }

Corpus load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw UsageError("corpus directory " + dir + " not found");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Corpus c;
  for (const auto& p : files) {
    std::ifstream in(p);
    try {
      json j = json::parse(in);
      std::string kind = j.at("kind").get<std::string>();
      if (kind == "branching-table") c.tables.push_back(parse_table(j));
      else if (kind == "appendix-listing") c.listings.push_back(parse_listing(j));
      else throw UsageError("unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
      throw UsageError(p.string() + ": " + e.what());
    } catch (const UsageError& e) {
      throw UsageError(p.string() + ": " + e.what());
    }
  }
  if (c.tables.empty() && c.listings.empty()) throw UsageError("no golden files in " + dir);
  return c;
}

Diagram golden_diagram(const GoldenTable& g) {
  Diagram d = Diagram::from_type(g.type, g.grading);
  if (!(d.format() == g.format))
    throw UsageError(g.id + ": format " + g.format.to_string() + " does not match " + d.label() + " (" +
                     d.format().to_string() + ")");
  return d;
}

DominantBase golden_lambda(const GoldenTable& g, const Diagram& d) {
  return DominantBase::fundamental(d.size(), d.lookup(Scheme::Bourbaki, std::to_string(g.highest_weight)));
}

std::vector<TupleRow> golden_rows(const GoldenTable& g, const Normalizers& s) {
  std::vector<TupleRow> out = g.rows;
  for (auto& r : out)
    if (r.t3.empty()) r.t3 = {r.degree + s.s3};
  return out;
}

std::vector<TupleRow> completed_rows(const GoldenTable& g, const Diagram& d, const Normalizers& s, int top) {
  std::vector<TupleRow> rows = golden_rows(g, s);
  if (g.complete) return rows;
  auto twist = duality_twist(d, top, s);
  if (!twist) throw UsageError(g.id + ": incomplete table is not graded self-dual under its normalizers");
  std::vector<TupleRow> out = rows;
  for (const auto& r : rows) {
    int image = top - r.degree;
    if (image > g.printed_to) out.push_back(dual_row(r, *twist));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TableCheck check_table(const GoldenTable& g, const BranchTable& t, const Crystal& c) {
  TableCheck res;
  res.id = g.id;
  const Diagram& d = t.diagram;
  std::vector<std::string> fails, info;
  res.elements = c.size();
  res.computed_components = t.top_degree() + 1;
  if (!t.normalizers) throw UsageError(g.id + ": no default normalizers for this weight");
  const Normalizers& s = *t.normalizers;

  BigInt wd = weyl_dimension(d, t.lambda);
  res.weyl_dim = static_cast<std::uint64_t>(wd);
  if (wd != BigInt(c.size()))
    fails.push_back("Weyl dimension " + wd.str() + " but the crystal has " + std::to_string(c.size()) + " elements");
  if (g.dimension && *g.dimension != c.size())
    fails.push_back("dimension " + std::to_string(*g.dimension) + " expected, crystal has " + std::to_string(c.size()));
  if (g.graded_components && *g.graded_components != res.computed_components)
    fails.push_back(std::to_string(*g.graded_components) + " graded components expected, computed " +
                    std::to_string(res.computed_components));

  auto sr = sum_rule(t, c);
  for (const auto& v : sr.violations) fails.push_back("sum rule: " + v);

  auto actual = tuple_rows(t);
  for (const auto& m : compare_rows(golden_rows(g, s), actual, std::make_pair(g.printed_from, g.printed_to)))
    fails.push_back(m);

  res.duality = duality_check(t);
  if (!g.complete) {
    int top = g.graded_components ? *g.graded_components - 1 : t.top_degree();
    std::vector<TupleRow> full;
    try {
      full = completed_rows(g, d, s, top);
    } catch (const UsageError& e) {
      fails.push_back(e.what());
    }
    if (!full.empty()) {
      res.duality_completed_rows = static_cast<int>(full.size() - g.rows.size());
      auto diffs = compare_rows(full, actual);
      for (const auto& m : diffs) fails.push_back("after completion by duality: " + m);
      info.push_back("degrees " + std::to_string(g.printed_to + 1) + ".." + std::to_string(top) +
                     " completed by duality (" + std::to_string(res.duality_completed_rows) + " rows, " +
                     std::to_string(diffs.size()) + " mismatches)");
    }
    if (!res.duality->ok) fails.push_back("computed table is not graded self-dual: " + res.duality->note);
  } else if (res.duality->applicable) {
    info.push_back(res.duality->ok ? "graded self-dual" : "self-duality fails: " + res.duality->note);
  } else {
    info.push_back(res.duality->note);
  }
  for (const auto& e : g.errata)
    info.push_back("erratum applied at degree " + std::to_string(e.degree) + ": " + describe(e.printed) + " read as " +
                   describe(e.corrected));

  res.ok = fails.empty();
  res.messages = fails;
  res.messages.insert(res.messages.end(), info.begin(), info.end());
  return res;
}

TableCheck verify_table(const GoldenTable& g, const std::string& cache_dir) {
  auto t0 = std::chrono::steady_clock::now();
  Diagram d = golden_diagram(g);
  DominantBase lambda = golden_lambda(g, d);
  Crystal c = obtain_crystal(d, lambda, std::nullopt, kDefaultElementCap, cache_dir);
  BranchTable t = extract(c, d.grading_node());
  apply_normalizers(t, default_normalizers(d, lambda));
  TableCheck res = check_table(g, t, c);
  res.seconds = since(t0);
  return res;
}

std::vector<std::string> listing_lines(const BranchTable& t) {
  std::vector<std::pair<int, std::string>> rows;
  for (const auto& r : t.rows)
    for (int k = 0; k < r.mult; ++k) rows.emplace_back(r.degree, format_weight(t.diagram, r.weight));
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> out;
  for (const auto& [deg, w] : rows) out.push_back(std::to_string(deg) + " , " + w);
  return out;
}

ListingCheck verify_listing(const AppendixListing& a) {
  auto t0 = std::chrono::steady_clock::now();
  ListingCheck res;
  res.id = a.id;
  Diagram d = Diagram::from_type(a.type, a.grading);
  std::vector<int> levi;
  for (Node v = 0; v < d.size(); ++v)
    if (v != d.grading_node()) levi.push_back(*d.bourbaki(v));
  std::sort(levi.begin(), levi.end());
  std::vector<int> want = a.levi_nodes;
  std::sort(want.begin(), want.end());
  if (levi != want) res.messages.push_back("Levi nodes differ from the listing");
  DominantBase lambda =
      DominantBase::fundamental(d.size(), d.lookup(Scheme::Bourbaki, std::to_string(a.highest_weight)));
  Crystal c = generate(d, lambda);
  BranchTable t = extract(c, d.grading_node());
  res.produced = listing_lines(t);
  res.seconds = since(t0);
  if (res.produced.size() != a.lines.size())
    res.messages.push_back(std::to_string(a.lines.size()) + " lines expected, " + std::to_string(res.produced.size()) +
                           " produced");
  for (std::size_t k = 0; k < std::min(res.produced.size(), a.lines.size()); ++k)
    if (res.produced[k] != a.lines[k])
      res.messages.push_back("line " + std::to_string(k + 1) + ": expected '" + a.lines[k] + "', got '" +
                             res.produced[k] + "'");
  res.ok = res.messages.empty();
  return res;
}

}  // namespace tbranch
