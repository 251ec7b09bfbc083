// Built-in models and the JSON model file formats.
//
// Every file carries a top-level "format" of "structure", "symplectic" or
// "bicomplex". Scalars are written "a/b" (real) or ["re","im"].
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ddbar/bicomplex.hpp"
#include "ddbar/liemodel.hpp"
#include "ddbar/symplectic.hpp"

namespace ddbar {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ModelKind { ComplexStructure, Symplectic, RawBicomplex };

std::string to_string(ModelKind kind);

struct CatalogEntry {
  std::string key;
  ModelKind kind = ModelKind::ComplexStructure;
  std::variant<StructureModel, SymplecticModel, DoubleComplex> payload;
  std::string provenance;
};

const std::vector<CatalogEntry>& builtins();
std::optional<CatalogEntry> find_builtin(const std::string& key);

/// Parses without validating the mathematics; throws ParseError naming the
/// offending field.
CatalogEntry parse_entry(const nlohmann::json& doc, const std::string& source);
CatalogEntry parse_file(const std::filesystem::path& path);
/// parse_file followed by full validation (ModelError / ValidationError).
CatalogEntry load(const std::filesystem::path& path);
/// A built-in key, or else a path to a model file.
CatalogEntry resolve(const std::string& target);

/// Every structural identity relevant to the entry's kind.
std::vector<CheckResult> check_entry(const CatalogEntry& e);
/// Throws on the first failing identity.
void validate_entry(const CatalogEntry& e);

nlohmann::ordered_json serialize(const CatalogEntry& e);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// The complex a report is computed on: the compiled structure model or the
/// raw bicomplex itself. Throws CapabilityError for symplectic entries.
DoubleComplex complex_of(const CatalogEntry& e);

}  // namespace ddbar
