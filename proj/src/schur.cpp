#include <algorithm>
#include <string>
#include <vector>

#include "tbranch/branching.hpp"

namespace tbranch {

namespace {

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(k), out;
  for (char c : s) out += c == '-' ? std::string("⁻") : std::string(digits[c - '0']);
  return out;
}

std::string power(int k, NameStyle style) {
  return style == NameStyle::Latex ? "^{" + std::to_string(k) + "}" : superscript(k);
}

struct Space {
  std::string base, dual;
};

Space space(bool f3, NameStyle style) {
  if (style == NameStyle::Latex) return f3 ? Space{"F_3^*", "F_3"} : Space{"F_1", "F_1^*"};
  return f3 ? Space{"F₃*", "F₃"} : Space{"F₁", "F₁*"};
}

// Parts of a partition, with exponents for repeated parts when it has at least four parts.
std::string partition_text(const std::vector<int>& parts, NameStyle style) {
  std::string out;
  bool runs = parts.size() >= 4;
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t j = k;
    while (runs && j + 1 < parts.size() && parts[j + 1] == parts[k]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(parts[k]);
    if (j > k) out += power(static_cast<int>(j - k + 1), style);
    k = j + 1;
  }
  return out;
}

std::string schur(const std::string& sub, const std::string& sp) { return "S_{" + sub + "}" + sp; }

std::string wedge(int k, const std::string& sp, NameStyle style) {
  if (style == NameStyle::Latex) return "\\bigwedge^{" + std::to_string(k) + "}" + sp;
  return "⋀" + superscript(k) + sp;
}

std::string render_partition(const std::vector<int>& parts, const std::string& sp, NameStyle style) {
  if (parts.size() == 1 && parts[0] == 1) return sp;
  if (std::all_of(parts.begin(), parts.end(), [](int x) { return x == 1; }))
    return wedge(static_cast<int>(parts.size()), sp, style);
  return schur(partition_text(parts, style), sp);
}

std::string factor(const std::vector<int>& t, bool f3, NameStyle style) {
  Space sp = space(f3, style);
  if (std::all_of(t.begin(), t.end(), [](int x) { return x == 0; })) return "";
  if (t.size() == 1) {
    int k = t[0];
    const std::string& s = k > 0 ? sp.base : sp.dual;
    int mag = k > 0 ? k : -k;
    if (mag == 1) return s;
    return "(" + s + ")" + power(mag, style);
  }
  if (t.back() >= 0) {
    std::vector<int> parts;
    for (int x : t)
      if (x > 0) parts.push_back(x);
    return render_partition(parts, sp.base, style);
  }
  if (t.front() <= 0) {
    std::vector<int> parts;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      if (*it < 0) parts.push_back(-*it);
    return render_partition(parts, sp.dual, style);
  }
  std::string sub;
  for (std::size_t k = 0; k < t.size(); ++k) sub += (k ? "," : "") + std::to_string(t[k]);
  return schur(sub, sp.base);
}

}  // namespace

std::string schur_name(const std::vector<int>& t1, const std::vector<int>& t3, NameStyle style) {
  std::string a = factor(t3, true, style), b = factor(t1, false, style);
  if (a.empty() && b.empty()) return style == NameStyle::Latex ? "\\mathbb{C}" : "ℂ";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + (style == NameStyle::Latex ? "\\otimes " : "⊗") + b;
}

}  // namespace tbranch
