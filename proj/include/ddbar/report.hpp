// One Report value per invocation, rendered either as aligned text tables or
// as JSON. Both renderings read the same fields.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ddbar/catalog.hpp"
#include "ddbar/diagnostics.hpp"

namespace ddbar {

struct ReportOptions {
  std::optional<std::pair<int, int>> degrees;  // inclusive
  int window = 2;                              // shear window for symplectic models
};

struct BidegreeRow {
  Bidegree at;
  std::size_t dim = 0;
  std::size_t dolbeault = 0;
  std::size_t conj_dolbeault = 0;
  std::size_t bott_chern = 0;
  std::size_t aeppli = 0;
};

struct DegreeRow {
  DegreeReport values;
  bool has_S = false;  // false without a top degree
};

struct ComplexSection {
  std::vector<BidegreeRow> bidegrees;
  std::vector<DegreeRow> degrees;
  std::vector<std::pair<int, VarouchasDims>> varouchas;
  LemmaVerdict lemma;
  std::optional<bool> kss;
  std::optional<Strip> strip;
};

struct SymplecticRow {
  int k = 0;
  std::size_t betti = 0;
  TsengYauDims dims;
};

struct SymplecticSection {
  int window = 2;
  std::vector<SymplecticRow> degrees;
  std::vector<ParityBound> parity;
  bool hard_lefschetz = false;
  bool shear_consistent = false;
};

struct Report {
  std::string name;
  ModelKind kind = ModelKind::ComplexStructure;
  std::string provenance;
  std::optional<ComplexSection> complex;
  std::optional<SymplecticSection> symplectic;
};

/// Parses "k1..k2" (or a single "k").
std::pair<int, int> parse_degree_range(const std::string& text);

ComplexSection complex_section(const DoubleComplex& c, const std::optional<StructureModel>& model,
                               const ReportOptions& opts);
SymplecticSection symplectic_section(const SymplecticModel& m, const ReportOptions& opts);

/// The complex section for complex-structure and raw entries, the symplectic
/// section for symplectic ones.
Report build_report(const CatalogEntry& e, const ReportOptions& opts = {});

std::string render_text(const Report& r);
nlohmann::ordered_json render_json(const Report& r);

std::string lemma_line(const LemmaVerdict& v);

}  // namespace ddbar
