#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tbranch/crystal.hpp"
#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

constexpr int kCacheVersion = 1;

using nlohmann::json;

std::vector<long long> encode(const LSPath& p) {
  std::vector<long long> key;
  for (const auto& s : p.segments) {
    key.insert(key.end(), s.dir.begin(), s.dir.end());
    key.push_back(s.dur.numerator());
    key.push_back(s.dur.denominator());
  }
  return key;
}

json diagram_json(const Diagram& d) {
  return json{{"p", d.p()}, {"q", d.q()}, {"r", d.r()}, {"swapped", d.arms_swapped()}};
}

}  // namespace

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("malformed fraction '" + text + "'");
  }
}

std::string export_crystal(const Crystal& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> height(c.size());
  std::vector<std::vector<long long>> keys(c.size());
  for (std::size_t id = 0; id < c.size(); ++id) {
    const auto& off = c.offset(id);
    height[id] = std::accumulate(off.begin(), off.end(), 0);
    keys[id] = encode(c.element(id));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return keys[a] < keys[b];
  });
  std::vector<std::size_t> rank_of(c.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = k;

  json elements = json::array();
  for (std::size_t id : order) {
    json segs = json::array();
    for (const auto& s : c.element(id).segments) segs.push_back(json::array({s.dir, to_string(s.dur)}));
    elements.push_back(std::move(segs));
  }
  std::vector<std::array<std::size_t, 3>> edges;
  for (std::size_t id = 0; id < c.size(); ++id)
    for (Node i = 0; i < c.rank(); ++i)
      if (auto to = c.lower_edge(id, i); to != Crystal::kNone)
        edges.push_back({rank_of[id], static_cast<std::size_t>(i), rank_of[static_cast<std::size_t>(to)]});
  std::sort(edges.begin(), edges.end());
  json e = json::array();
  for (const auto& ed : edges) e.push_back(ed);

  json doc;
  doc["kind"] = "tbranch-crystal";
  doc["version"] = kCacheVersion;
  doc["diagram"] = diagram_json(c.diagram());
  doc["lambda"] = c.lambda().coeffs();
  if (c.truncation())
    doc["truncation"] = json{{"grading", c.truncation()->grading}, {"max_degree", c.truncation()->max_degree}};
  else
    doc["truncation"] = nullptr;
  doc["elements"] = std::move(elements);
  doc["edges"] = std::move(e);
  return doc.dump() + "\n";
}

Crystal import_crystal(const Diagram& d, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw UsageError(std::string("crystal file is not valid JSON: ") + ex.what());
  }
  try {
    if (doc.at("kind") != "tbranch-crystal") throw UsageError("not a crystal file");
    if (doc.at("version") != kCacheVersion)
      throw UsageError("crystal file version " + doc.at("version").dump() + " is not supported");
    if (doc.at("diagram") != diagram_json(d)) throw UsageError("crystal file belongs to another diagram");
    DominantBase lambda(doc.at("lambda").get<std::vector<int>>());
    std::optional<Truncation> trunc;
    if (!doc.at("truncation").is_null())
      trunc = Truncation{doc["truncation"].at("grading").get<int>(), doc["truncation"].at("max_degree").get<int>()};
    Crystal c(d, lambda, trunc);
    for (const auto& el : doc.at("elements")) {
      LSPath p;
      for (const auto& seg : el)
        p.segments.push_back(Segment{seg.at(0).get<std::vector<int>>(), parse_rational(seg.at(1).get<std::string>())});
      c.model().validate(p);
      if (!c.insert(std::move(p)).second) throw UsageError("crystal file repeats an element");
    }
    for (const auto& ed : doc.at("edges")) {
      auto from = ed.at(0).get<std::size_t>(), to = ed.at(2).get<std::size_t>();
      auto i = ed.at(1).get<int>();
      if (from >= c.size() || to >= c.size() || i < 0 || i >= c.rank())
        throw UsageError("crystal file has an edge out of range");
      c.set_lower_edge(from, i, to);
    }
    if (c.size() == 0 || c.element(0) != c.model().straight())
      throw UsageError("crystal file does not start at the highest-weight path");
    return c;
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed crystal file: ") + ex.what());
  }
}

std::string CrystalCache::path_for(const Diagram& d, const DominantBase& lambda,
                                   const std::optional<Truncation>& t) const {
  std::ostringstream name;
  name << "crystal-p" << d.p() << "q" << d.q() << "r" << d.r() << (d.arms_swapped() ? "s" : "") << "-l";
  for (int k = 0; k < lambda.size(); ++k) name << (k ? "." : "") << lambda[k];
  if (t) name << "-t" << t->grading << "." << t->max_degree;
  name << ".json";
  return (std::filesystem::path(dir_) / name.str()).string();
}

std::optional<Crystal> CrystalCache::load(const Diagram& d, const DominantBase& lambda,
                                          const std::optional<Truncation>& t) const {
  std::ifstream in(path_for(d, lambda, t), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return import_crystal(d, buf.str());
}

void CrystalCache::store(const Crystal& c) const {
  std::filesystem::create_directories(dir_);
  auto target = path_for(c.diagram(), c.lambda(), c.truncation());
  auto tmp = target + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UsageError("cannot write cache file " + tmp);
    out << export_crystal(c);
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace tbranch
