#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbranch/branching.hpp"

namespace tbranch {

struct Erratum {
  int degree = 0;
  TupleRow printed, corrected;
  std::string evidence;
};

// A transcribed branching table. Rows carry errata corrections already.
struct GoldenTable {
  std::string id, type, title, note;
  int grading = 0;         // Bourbaki label of z1
  Format format;
  int highest_weight = 0;  // k of the crystal B(Lambda_k) that generates the table
  std::optional<std::uint64_t> dimension;
  std::optional<int> graded_components;
  int printed_from = 0, printed_to = 0;
  bool complete = true;
  std::vector<TupleRow> rows;  // t3 empty when the golden file leaves it null
  std::vector<std::string> names;
  std::vector<Erratum> errata;
};

struct AppendixListing {
  std::string id, type;
  int grading = 0, highest_weight = 0;
  std::vector<int> levi_nodes;
  std::vector<std::string> lines;
};

struct Corpus {
  std::vector<GoldenTable> tables;
  std::vector<AppendixListing> listings;
};

// Throws UsageError with the file name on malformed input.
Corpus load_corpus(const std::string& dir);
std::string builtin_corpus_dir();

// Diagram and weight a golden table is generated from.
Diagram golden_diagram(const GoldenTable& g);
DominantBase golden_lambda(const GoldenTable& g, const Diagram& d);

struct TableCheck {
  std::string id;
  bool ok = true;
  std::size_t elements = 0;
  std::uint64_t weyl_dim = 0;
  int computed_components = 0;
  int duality_completed_rows = 0;
  std::optional<DualityReport> duality;
  std::vector<std::string> messages;  // failures first
  double seconds = 0;
};

// Fills missing null t3 entries (one-dimensional F3) from the degree and normalizer.
std::vector<TupleRow> golden_rows(const GoldenTable& g, const Normalizers& s);
// Printed rows plus their duality images for degrees beyond the printed range.
std::vector<TupleRow> completed_rows(const GoldenTable& g, const Diagram& d, const Normalizers& s, int top);

TableCheck check_table(const GoldenTable& g, const BranchTable& computed, const Crystal& c);
TableCheck verify_table(const GoldenTable& g, const std::string& cache_dir = "");

struct ListingCheck {
  std::string id;
  bool ok = false;
  std::vector<std::string> produced;
  std::vector<std::string> messages;
  double seconds = 0;
};

// Degree/weight lines of the Levi-highest elements, sorted by degree.
std::vector<std::string> listing_lines(const BranchTable& t);
ListingCheck verify_listing(const AppendixListing& a);

}  // namespace tbranch
