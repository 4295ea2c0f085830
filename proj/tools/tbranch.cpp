#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbranch/errors.hpp"
#include "tbranch/genring.hpp"
#include "tbranch/golden.hpp"
#include "tbranch/runspec.hpp"

using namespace tbranch;
namespace fs = std::filesystem;

namespace {

struct Options {
  RunSpec spec;
  std::string norm, out = "text", corpus, only, output;
};

void add_source(CLI::App* app, Options& o) {
  app->add_option("--pqr", o.spec.pqr, "arm parameters p,q,r")->delimiter(',')->expected(3);
  app->add_option("--format", o.spec.format, "ranks f0,f1,f2,f3 or differential ranks r1,r2,r3")
      ->delimiter(',')
      ->expected(3, 4);
  app->add_option("--type", o.spec.type, "finite type such as D5, E6, E7, E8");
  app->add_flag("--swap-arms", o.spec.swap_arms, "exchange the x and y arms (p = q only)");
}

void add_weight(CLI::App* app, Options& o) {
  app->add_option("--hw", o.spec.hw, "highest-weight node: z2, u, 1'', 7 (Bourbaki) or #3")->required();
  app->add_option("--grade", o.spec.grade, "grading node (z1); with --type its Bourbaki label");
  app->add_flag("--lowest", o.spec.lowest, "read --hw as a lowest-weight label");
  app->add_option("--trunc", o.spec.trunc, "keep degrees up to this bound");
  app->add_option("--norm", o.norm, "normalizers s1,s3");
  app->add_option("--cap", o.spec.cap, "element cap for crystal generation");
}

void add_cache(CLI::App* app, Options& o) {
  app->add_option("--cache", o.spec.cache_dir, "crystal cache directory (default $TBRANCH_CACHE)");
}

void finish(Options& o) {
  if (!o.norm.empty()) o.spec.norm = parse_normalizers(o.norm);
  o.spec.out = parse_out_format(o.out);
  if (o.spec.cache_dir.empty())
    if (const char* env = std::getenv("TBRANCH_CACHE")) o.spec.cache_dir = env;
}

Crystal crystal_for(const Resolved& r, const Options& o) {
  return obtain_crystal(r.diagram, r.lambda, r.truncation, o.spec.cap, o.spec.cache_dir);
}

int cmd_table(Options& o) {
  Resolved r = resolve(o.spec);
  Crystal c = crystal_for(r, o);
  BranchTable t = compute_table(r, c);
  std::cout << render(t, o.spec.out);
  return 0;
}

int cmd_verify(Options& o) {
  std::string dir = o.corpus.empty() ? builtin_corpus_dir() : o.corpus;
  Corpus corpus = load_corpus(dir);
  int passed = 0, failed = 0, run = 0, lpassed = 0, lrun = 0;
  for (const auto& a : corpus.listings) {
    if (!o.only.empty() && a.id.rfind(o.only, 0) != 0) continue;
    ++lrun;
    auto res = verify_listing(a);
    std::cout << (res.ok ? "PASS " : "FAIL ") << a.id << ": " << res.produced.size() << " lines";
    std::cout << (res.ok ? " matched" : "") << "\n";
    for (const auto& m : res.messages) std::cout << "  " << m << "\n";
    if (res.ok) ++lpassed;
    else ++failed;
  }
  for (const auto& g : corpus.tables) {
    if (!o.only.empty() && g.id.rfind(o.only, 0) != 0) continue;
    ++run;
    auto res = verify_table(g, o.spec.cache_dir);
    std::cout << (res.ok ? "PASS " : "FAIL ") << g.id << " " << g.title << ": " << res.elements << " elements, "
              << res.computed_components << " graded components\n";
    for (const auto& m : res.messages) std::cout << "  " << m << "\n";
    if (res.ok) ++passed;
    else ++failed;
  }
  if (run + lrun == 0) throw UsageError("no golden file matches '" + o.only + "'");
  std::cout << passed << "/" << run << " tables passed, " << lpassed << "/" << lrun << " listings matched\n";
  return failed ? 1 : 0;
}

int cmd_dims(Options& o) {
  Resolved r = resolve(o.spec);
  if (!r.diagram.type_class().finite()) throw UsageError("dims needs a finite type");
  if (r.truncation) throw UsageError("dims does not take --trunc");
  Crystal c = crystal_for(r, o);
  BranchTable t = compute_table(r, c);
  BigInt wd = weyl_dimension(r.diagram, r.lambda);
  auto report = sum_rule(t, c);
  std::uint64_t table_total = 0;
  for (auto v : report.table_sums) table_total += v;
  bool ok = wd == BigInt(c.size()) && report.ok && table_total == c.size();
  if (o.spec.out == OutFormat::Json) {
    nlohmann::json j = {{"weyl_dimension", wd.str()}, {"crystal_elements", c.size()},
                        {"graded_components", report.layers.size()}, {"layers", report.layers},
                        {"table_sums", report.table_sums}, {"ok", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "weyl dimension: " << wd << "\n";
    std::cout << "crystal elements: " << c.size() << "\n";
    std::cout << "graded components: " << report.layers.size() << "\n";
    std::cout << "layers:";
    for (auto v : report.layers) std::cout << " " << v;
    std::cout << "\ntable sums:";
    for (auto v : report.table_sums) std::cout << " " << v;
    std::cout << "\n" << (ok ? "consistent" : "INCONSISTENT") << "\n";
    for (const auto& v : report.violations) std::cout << "  " << v << "\n";
  }
  return ok ? 0 : 1;
}

Format genring_format(const Options& o) {
  if (!o.spec.format.empty() && o.spec.pqr.empty() && o.spec.type.empty()) return parse_format(o.spec.format);
  return resolve_diagram(o.spec).format();
}

int cmd_generators(Options& o) {
  Format f = genring_format(o);
  Diagram d = from_format(f);
  auto list = generator_list(f);
  if (o.spec.out == OutFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : list) j.push_back(to_json(e, f, d));
    std::cout << nlohmann::json{{"format", f.to_string()}, {"generators", j}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "format " << f.to_string() << ", " << d.label() << "\n";
  for (const auto& e : list) {
    std::cout << "(" << e.family << ")";
    if (e.param) std::cout << " " << (e.family == 1 ? "i" : e.family == 3 ? "j" : "k") << "=" << e.param;
    DominantBase w = weight_of(e.mu, f, d);
    std::cout << " " << e.mu.to_string() << " -> " << format_weight(d, {w.coeffs().begin(), w.coeffs().end()});
    if (e.six_set) std::cout << " [six]";
    if (e.cyclic_set) std::cout << " [cyclic]";
    if (!e.note.empty()) std::cout << " (" << e.note << ")";
    std::cout << "\n";
  }
  return 0;
}

std::string node_text(const Diagram& d, Node v) {
  std::string s = d.name(v, Scheme::Xyz);
  if (d.has_bourbaki()) s = d.name(v, Scheme::Bourbaki) + " (" + s + ")";
  return s;
}

int cmd_critical(Options& o) {
  Format f = genring_format(o);
  Diagram d = from_format(f);
  auto crit = critical_weights(f);
  if (o.spec.out == OutFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : crit)
      j.push_back({{"role", to_string(c.role)}, {"mu", c.mu.to_string()}, {"lambda", c.lambda.coeffs()},
                   {"node", d.name(c.node, Scheme::Xyz)},
                   {"bourbaki", d.has_bourbaki() ? nlohmann::json(*d.bourbaki(c.node)) : nlohmann::json(nullptr)},
                   {"t", c.t}});
    std::cout << nlohmann::json{{"format", f.to_string()}, {"critical", j}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "format " << f.to_string() << ", " << d.label() << "\n";
  for (const auto& c : crit)
    std::cout << to_string(c.role) << ": " << c.mu.to_string() << " -> node " << node_text(d, c.node) << ", t = " << c.t
              << "\n";
  return 0;
}

BranchTable critical_table(const Diagram& d, const CriticalWeight& c, std::optional<int> trunc, const Options& o) {
  std::optional<Truncation> t;
  if (trunc) t = Truncation{d.grading_node(), *trunc};
  Crystal cr = obtain_crystal(d, c.lambda, t, o.spec.cap, o.spec.cache_dir);
  BranchTable table = extract(cr, d.grading_node());
  apply_normalizers(table, default_normalizers(d, c.lambda));
  return table;
}

int cmd_degree_one(Options& o) {
  Format f = genring_format(o);
  Diagram d = from_format(f);
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  if (o.spec.out != OutFormat::Json) std::cout << "format " << f.to_string() << ", " << d.label() << "\n";
  for (const auto& c : critical_weights(f)) {
    auto rep = verify_degree_one(critical_table(d, c, 1, o), c.role);
    ok = ok && rep.ok;
    if (o.spec.out == OutFormat::Json) all.push_back(to_json(rep));
    else
      std::cout << (rep.ok ? "PASS " : "FAIL ") << "W_1(" << to_string(c.role) << ") = " << rep.full_tensor << ": "
                << rep.message << "\n";
  }
  if (o.spec.out == OutFormat::Json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_top(Options& o) {
  Format f = genring_format(o);
  Diagram d = from_format(f);
  if (!d.type_class().finite()) throw UsageError("top-complex needs a Dynkin format; " + d.label() + " is " +
                                                 d.type_class().describe());
  std::vector<BranchTable> tables;
  auto crit = critical_weights(f);
  for (const auto& c : crit) tables.push_back(critical_table(d, c, std::nullopt, o));
  std::vector<const BranchTable*> ptr;
  for (const auto& t : tables) ptr.push_back(&t);
  auto rep = top_components(f, ptr);
  if (o.spec.out == OutFormat::Json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "format " << f.to_string() << ", " << d.label() << ": " << rep.status << "\n";
    for (const auto& e : rep.entries)
      std::cout << "  W_top(" << to_string(e.role) << ") at degree " << e.degree << ": " << e.name << "; expected "
                << e.expected << (rep.applicable && !rep.exceptional ? (e.ok ? " (ok)" : " (mismatch)") : "")
                << "\n";
  }
  return rep.ok ? 0 : 1;
}

std::string require_cache(const Options& o) {
  if (o.spec.cache_dir.empty()) throw UsageError("no cache directory: pass --cache or set TBRANCH_CACHE");
  return o.spec.cache_dir;
}

int cmd_cache_list(Options& o) {
  std::string dir = require_cache(o);
  if (!fs::is_directory(dir)) return 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) std::cout << p.filename().string() << "  " << fs::file_size(p) << "\n";
  return 0;
}

int cmd_cache_clear(Options& o) {
  std::string dir = require_cache(o);
  int removed = 0;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir)) {
      auto name = e.path().filename().string();
      if (name.rfind("crystal-", 0) == 0 && e.path().extension() == ".json") removed += fs::remove(e.path());
    }
  std::cout << "removed " << removed << " cached crystals\n";
  return 0;
}

int cmd_cache_export(Options& o) {
  Resolved r = resolve(o.spec);
  Crystal c = crystal_for(r, o);
  std::string text = export_crystal(c);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.output);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Levi branching for T-shaped Kac-Moody diagrams"};
  app.require_subcommand(1);
  Options o;
  int (*run)(Options&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(Options&)) { sub->callback([&run, fn] { run = fn; }); };

  auto* table = app.add_subcommand("table", "compute a graded branching table");
  add_source(table, o);
  add_weight(table, o);
  add_cache(table, o);
  table->add_option("--out", o.out, "text, json, csv or latex");
  bind(table, cmd_table);

  auto* verify = app.add_subcommand("verify", "check the golden corpus");
  verify->add_option("--corpus", o.corpus, "directory of golden JSON files (default: bundled corpus)");
  verify->add_option("--only", o.only, "restrict to ids with this prefix, e.g. E7");
  add_cache(verify, o);
  bind(verify, cmd_verify);

  auto* dims = app.add_subcommand("dims", "Weyl dimension, crystal size and layer sizes");
  add_source(dims, o);
  add_weight(dims, o);
  add_cache(dims, o);
  dims->add_option("--out", o.out, "text or json");
  bind(dims, cmd_dims);

  auto* gen = app.add_subcommand("genring", "generic ring weight combinatorics");
  add_source(gen, o);
  add_cache(gen, o);
  gen->add_option("--out", o.out, "text or json");
  gen->add_option("--cap", o.spec.cap, "element cap for crystal generation");
  gen->require_subcommand(1);
  gen->fallthrough();
  bind(gen->add_subcommand("list-generators", "generator families and conjectured minimal sets"), cmd_generators);
  bind(gen->add_subcommand("critical", "the three critical weights"), cmd_critical);
  bind(gen->add_subcommand("verify-degree-one", "first graded components of the critical representations"),
       cmd_degree_one);
  bind(gen->add_subcommand("top-complex", "top graded components of the critical representations"), cmd_top);

  auto* cache = app.add_subcommand("cache", "manage the crystal cache");
  add_cache(cache, o);
  cache->require_subcommand(1);
  cache->fallthrough();
  bind(cache->add_subcommand("list", "list cached crystals"), cmd_cache_list);
  bind(cache->add_subcommand("clear", "remove cached crystals"), cmd_cache_clear);
  auto* exp = cache->add_subcommand("export", "print the canonical export of a crystal");
  add_source(exp, o);
  add_weight(exp, o);
  exp->add_option("--output", o.output, "write to this file instead of stdout");
  bind(exp, cmd_cache_export);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    finish(o);
    return run ? run(o) : 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
