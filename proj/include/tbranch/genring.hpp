#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tbranch/branching.hpp"
#include "tbranch/diagram.hpp"
#include "tbranch/weightspace.hpp"

namespace tbranch {

// mu = (a, b, c, alpha, beta, gamma) for a format with ranks r1, r2, r3.
struct Sextuple {
  int a = 0, b = 0, c = 0;
  std::vector<int> alpha, beta, gamma;

  Sextuple operator+(const Sextuple& o) const;
  bool operator==(const Sextuple&) const = default;
  std::string to_string() const;
};

// alpha has at most r3-1 parts, beta at most r2-1, gamma at most r1-1.
void validate(const Sextuple& mu, const Format& f);

std::vector<int> sigma(const Sextuple& mu, const Format& f);  // length r3
std::vector<int> tau(const Sextuple& mu, const Format& f);    // length f1
std::vector<int> theta(const Sextuple& mu, const Format& f);  // length f2
std::vector<int> phi(const Sextuple& mu, const Format& f);    // length f0

// Node labels from sigma (third arm), tau (center and first two arms) and a (z1).
DominantBase weight_of(const std::vector<int>& sigma, const std::vector<int>& tau, int a, const Diagram& d);
DominantBase weight_of(const Sextuple& mu, const Format& f, const Diagram& d);

struct GeneratorEntry {
  int family = 0;  // 1..6
  int param = 0;   // i, j or k for families 1, 3, 5
  Sextuple mu;
  bool six_set = false;     // in the conjectured six-generator set
  bool cyclic_set = false;  // in the conjectured set for r1 = 1
  bool redundant = false;   // flagged redundant within the cyclic set
  std::string note;
};

std::vector<GeneratorEntry> generator_list(const Format& f);

enum class Role { D3, D2, D1, A2 };
std::string to_string(Role r);

struct CriticalWeight {
  Role role;
  Sextuple mu;
  DominantBase lambda;
  Node node;  // the single fundamental node of lambda
  int t = 1;  // a + 1
};

// W(d3), W(d2) and W(d1), with the substitutions for r3 = 1 and r1 = 1.
std::vector<CriticalWeight> critical_weights(const Format& f);

struct DegreeOneReport {
  Role role;
  bool ok = false;
  TupleRow predicted;
  std::string predicted_name;  // F1/F3 shape
  std::string full_tensor;     // including the F0/F2 factors
  std::vector<TupleRow> found;
  std::string message;
};

// Table must carry default normalizers.
DegreeOneReport verify_degree_one(const BranchTable& table, Role role);

struct TopEntry {
  Role role;
  int degree = 0;
  std::vector<TupleRow> rows;
  std::string name;
  std::string expected;  // sl-level shape
  bool ok = false;
};

struct TopReport {
  bool applicable = false;
  bool exceptional = false;
  bool ok = false;
  std::string status;
  std::vector<TopEntry> entries;
};

// Tables in the order of critical_weights(f).
TopReport top_components(const Format& f, const std::vector<const BranchTable*>& tables);

nlohmann::json to_json(const GeneratorEntry& e, const Format& f, const Diagram& d);
nlohmann::json to_json(const DegreeOneReport& r);
nlohmann::json to_json(const TopReport& r);

}  // namespace tbranch
