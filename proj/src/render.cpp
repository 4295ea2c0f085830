#include "tbranch/render.hpp"

#include <algorithm>
#include <sstream>

#include "tbranch/errors.hpp"

namespace tbranch {

namespace {

template <class T>
std::string tuple_text(const std::vector<T>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string node_name(const Diagram& d, Node v) {
  return d.has_bourbaki() ? d.name(v, Scheme::Bourbaki) : d.name(v, Scheme::Xyz);
}

std::string labels_text(const Diagram& d, const BranchComponent& row) {
  std::string s;
  for (const auto& [v, k] : row.labels) {
    if (k == 0) continue;
    if (!s.empty()) s += " ";
    s += node_name(d, v) + ":" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::string pad(const std::string& s, std::size_t w) {
  std::size_t n = display_width(s);
  return n >= w ? s : s + std::string(w - n, ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string header_line(const BranchTable& t) {
  const Diagram& d = t.diagram;
  std::string s = d.label();
  if (!d.type_class().name.empty()) s += " " + d.type_class().name;
  s += ", lambda = " + format_weight(d, {t.lambda.coeffs().begin(), t.lambda.coeffs().end()});
  s += ", grading " + node_name(d, t.grading);
  if (t.normalizers) s += ", s1 = " + std::to_string(t.normalizers->s1) + ", s3 = " + std::to_string(t.normalizers->s3);
  if (t.truncated()) s += ", truncated at degree " + std::to_string(*t.max_degree);
  return s;
}

std::string render_text(const BranchTable& t) {
  std::vector<std::vector<std::string>> cells;
  bool tuples = t.normalizers.has_value();
  if (tuples) cells.push_back({"deg", "component", "t3", "t1", "mult", "dim"});
  else cells.push_back({"deg", "labels", "weight", "mult", "dim"});
  int last = -1;
  for (const auto& row : t.rows) {
    std::string deg = row.degree == last ? "" : std::to_string(row.degree);
    last = row.degree;
    if (tuples)
      cells.push_back({deg, row.name, tuple_text(row.t3), tuple_text(row.t1), std::to_string(row.mult),
                       std::to_string(row.dim)});
    else
      cells.push_back({deg, labels_text(t.diagram, row), format_weight(t.diagram, row.weight),
                       std::to_string(row.mult), std::to_string(row.dim)});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], display_width(line[k]));
  std::ostringstream out;
  out << header_line(t) << "\n";
  for (const auto& line : cells) {
    std::string s;
    for (std::size_t k = 0; k < line.size(); ++k) s += (k ? "  " : "") + pad(line[k], width[k]);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  }
  return out.str();
}

std::string render_csv(const BranchTable& t) {
  std::ostringstream out;
  out << "degree,labels,t3,t1,mult,dim,name\n";
  for (const auto& row : t.rows)
    out << row.degree << "," << csv_field(labels_text(t.diagram, row)) << "," << csv_field(tuple_text(row.t3))
        << "," << csv_field(tuple_text(row.t1)) << "," << row.mult << "," << row.dim << "," << csv_field(row.name)
        << "\n";
  return out.str();
}

std::string render_latex(const BranchTable& t) {
  if (!t.normalizers) throw UsageError("LaTeX output needs normalizers (pass --norm)");
  std::ostringstream out;
  out << "\\begin{tabular}{|c|c|c|c|c|}\n\\hline\n";
  out << "& representation & $F_3^*$ & $F_1$ & mult \\\\ \\hline\n";
  int last = -1;
  for (const auto& row : t.rows) {
    if (row.degree != last) out << "{\\bf " << row.degree << "}";
    last = row.degree;
    out << " & $" << schur_name(row.t1, row.t3, NameStyle::Latex) << "$ & " << tuple_text(row.t3) << " & "
        << tuple_text(row.t1) << " & " << row.mult << " \\\\ \\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

OutFormat parse_out_format(const std::string& s) {
  if (s == "text") return OutFormat::Text;
  if (s == "json") return OutFormat::Json;
  if (s == "csv") return OutFormat::Csv;
  if (s == "latex") return OutFormat::Latex;
  throw UsageError("unknown output format '" + s + "' (text, json, csv, latex)");
}

nlohmann::json table_json(const BranchTable& t) {
  const Diagram& d = t.diagram;
  nlohmann::json j;
  j["diagram"] = {{"p", d.p()}, {"q", d.q()}, {"r", d.r()}, {"type", d.type_class().name}};
  j["lambda"] = t.lambda.coeffs();
  j["grading"] = node_name(d, t.grading);
  j["s1"] = t.normalizers ? nlohmann::json(t.normalizers->s1) : nlohmann::json(nullptr);
  j["s3"] = t.normalizers ? nlohmann::json(t.normalizers->s3) : nlohmann::json(nullptr);
  j["truncated"] = t.truncated();
  if (t.truncated()) j["max_degree"] = *t.max_degree;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [v, k] : row.labels) labels[node_name(d, v)] = k;
    nlohmann::json r;
    r["degree"] = row.degree;
    r["labels"] = labels;
    r["weight"] = format_weight(d, row.weight);
    if (t.normalizers) {
      r["t1"] = row.t1;
      r["t3"] = row.t3;
      r["name"] = row.name;
    }
    r["mult"] = row.mult;
    r["dim"] = row.dim;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string render(const BranchTable& t, OutFormat f) {
  switch (f) {
    case OutFormat::Text: return render_text(t);
    case OutFormat::Json: return table_json(t).dump(2) + "\n";
    case OutFormat::Csv: return render_csv(t);
    case OutFormat::Latex: return render_latex(t);
  }
  return "";
}

}  // namespace tbranch
