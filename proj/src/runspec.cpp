#include "tbranch/runspec.hpp"

#include "tbranch/errors.hpp"

namespace tbranch {

Format parse_format(const std::vector<int>& n) {
  Format f;
  if (n.size() == 4) f = Format{n[0], n[1], n[2], n[3]};
  else if (n.size() == 3) f = Format::from_ranks(n[0], n[1], n[2]);
  else throw UsageError("--format takes four ranks f0,f1,f2,f3 or three differential ranks r1,r2,r3");
  f.validate();
  return f;
}

Diagram resolve_diagram(const RunSpec& s) {
  int sources = !s.pqr.empty() + !s.format.empty() + !s.type.empty();
  if (sources != 1) throw UsageError("give exactly one of --pqr, --format, --type");
  std::optional<Diagram> d;
  if (!s.pqr.empty()) {
    if (s.pqr.size() != 3) throw UsageError("--pqr takes three integers p,q,r");
    d.emplace(s.pqr[0], s.pqr[1], s.pqr[2]);
  } else if (!s.format.empty()) {
    d.emplace(from_format(parse_format(s.format)));
  } else {
    if (s.grade.empty()) throw UsageError("--type needs --grade, the Bourbaki label of the grading node");
    int label = 0;
    try {
      label = std::stoi(s.grade);
    } catch (const std::exception&) {
      throw UsageError("--grade with --type must be a Bourbaki label, got '" + s.grade + "'");
    }
    d.emplace(Diagram::from_type(s.type, label));
  }
  if (s.swap_arms) d.emplace(d->with_swapped_arms());
  if (!s.grade.empty() && s.type.empty()) {
    Node g = d->parse_node(s.grade);
    if (g != d->grading_node())
      throw UsageError("grading node " + s.grade + " is not z1 of " + d->label() +
                       "; the grading is always at z1 (use --type with --grade to choose it)");
  }
  return *d;
}

Resolved resolve(const RunSpec& s) {
  Diagram d = resolve_diagram(s);
  if (s.hw.empty()) throw UsageError("--hw is required");
  Node v = d.parse_node(s.hw);
  if (s.lowest) v = d.opposition(v);
  Resolved r{d, DominantBase::fundamental(d.size(), v), std::nullopt, s.norm};
  if (s.trunc) {
    if (*s.trunc < 0) throw UsageError("--trunc must be nonnegative");
    r.truncation = Truncation{d.grading_node(), *s.trunc};
  }
  if (!d.type_class().finite() && !r.truncation)
    throw UsageError(d.label() + " is " + d.type_class().describe() + "; pass --trunc");
  if (!r.normalizers) {
    try {
      r.normalizers = default_normalizers(d, r.lambda);
    } catch (const UsageError&) {
      // No default for this weight: the table stays in label form.
    }
  }
  return r;
}

Normalizers parse_normalizers(const std::string& s) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("--norm takes two integers s1,s3, got '" + s + "'");
    return v;
  };
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--norm takes two integers s1,s3, got '" + s + "'");
  return Normalizers{to_int(s.substr(0, comma)), to_int(s.substr(comma + 1))};
}

Crystal obtain_crystal(const Diagram& d, const DominantBase& lambda, const std::optional<Truncation>& t,
                       std::size_t cap, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    CrystalCache cache(cache_dir);
    if (auto c = cache.load(d, lambda, t)) return std::move(*c);
    GenerateOptions opt;
    opt.truncation = t;
    opt.cap = cap;
    Crystal c = generate(d, lambda, opt);
    cache.store(c);
    return c;
  }
  GenerateOptions opt;
  opt.truncation = t;
  opt.cap = cap;
  return generate(d, lambda, opt);
}

BranchTable compute_table(const Resolved& r, const Crystal& c) {
  BranchTable t = extract(c, r.diagram.grading_node());
  if (r.normalizers) apply_normalizers(t, *r.normalizers);
  return t;
}

}  // namespace tbranch
