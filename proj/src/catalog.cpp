#include "ddbar/catalog.hpp"

#include <fstream>
#include <sstream>

namespace ddbar {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::ComplexStructure: return "complex-structure";
    case ModelKind::Symplectic: return "symplectic";
    case ModelKind::RawBicomplex: return "raw-bicomplex";
  }
  return "unknown";
}

namespace {

StructureTerm holo_term(int coeff, Generator a, Generator b) { return {Scalar(coeff), a, b}; }

Generator phi(int i) { return {i - 1, false}; }
Generator phibar(int i) { return {i - 1, true}; }

StructureModel torus(int n) {
  StructureModel m;
  m.name = "torus" + std::to_string(2 * n);
  m.n = n;
  m.equations.assign(static_cast<std::size_t>(n), {});
  return m;
}

StructureModel iwasawa() {
  StructureModel m;
  m.name = "iwasawa";
  m.n = 3;
  m.equations = {{}, {}, {holo_term(-1, phi(1), phi(2))}};
  return m;
}

StructureModel kodaira_primary() {
  StructureModel m;
  m.name = "kodaira-primary";
  m.n = 2;
  m.equations = {{}, {holo_term(1, phi(1), phibar(1))}};
  return m;
}

RealTerm rt(int coeff, int j, int k) { return {Rational(coeff), j - 1, k - 1}; }

SymplecticModel kodaira_thurston() {
  SymplecticModel m;
  m.name = "kt-symplectic";
  m.dim = 4;
  m.equations = {{}, {}, {}, {rt(1, 1, 2)}};
  m.omega = {rt(1, 1, 3), rt(1, 2, 4)};
  return m;
}

SymplecticModel symplectic_torus4() {
  SymplecticModel m;
  m.name = "torus4-symplectic";
  m.dim = 4;
  m.equations.assign(4, {});
  m.omega = {rt(1, 1, 3), rt(1, 2, 4)};
  return m;
}

SymplecticModel symplectic_torus6() {
  SymplecticModel m;
  m.name = "torus6-symplectic";
  m.dim = 6;
  m.equations.assign(6, {});
  m.omega = {rt(1, 1, 2), rt(1, 3, 4), rt(1, 5, 6)};
  return m;
}

std::vector<CatalogEntry> make_builtins() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string key, ModelKind kind, auto payload, std::string provenance) {
    out.push_back({std::move(key), kind, std::move(payload), std::move(provenance)});
  };
  add("iwasawa", ModelKind::ComplexStructure, iwasawa(),
      "Iwasawa manifold: complex Heisenberg group modulo Gaussian integers; "
      "holomorphically parallelizable structure d phi^3 = -phi^1 ^ phi^2");
  add("kodaira-primary", ModelKind::ComplexStructure, kodaira_primary(),
      "primary Kodaira surface as a nilmanifold; d phi^2 = phi^1 ^ phibar^1 (constant normalized to 1)");
  add("torus2", ModelKind::ComplexStructure, torus(1), "complex torus C/Z^2, all invariant forms closed");
  add("torus4", ModelKind::ComplexStructure, torus(2), "complex torus C^2/Z^4, all invariant forms closed");
  add("torus6", ModelKind::ComplexStructure, torus(3), "complex torus C^3/Z^6, all invariant forms closed");
  add("kt-symplectic", ModelKind::Symplectic, kodaira_thurston(),
      "Kodaira-Thurston nilmanifold (Heisenberg x S^1): d e^4 = e^1 ^ e^2, omega = e^13 + e^24");
  add("torus4-symplectic", ModelKind::Symplectic, symplectic_torus4(),
      "flat torus T^4 with omega = e^13 + e^24");
  add("torus6-symplectic", ModelKind::Symplectic, symplectic_torus6(),
      "flat torus T^6 with omega = e^12 + e^34 + e^56");
  return out;
}

ordered_json scalar_ordered(const Scalar& s) { return ordered_json::array({s.re().str(), s.im().str()}); }

std::string field_path(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t i) { return parent + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("field \"" + path + "\": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(field_path(path, key), "missing");
  return *it;
}

int require_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer()) fail(field_path(path, key), "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) fail(field_path(path, key), "expected a string");
  return v.get<std::string>();
}

const json& require_array(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) fail(field_path(path, key), "expected an array");
  return v;
}

Scalar scalar_at(const json& j, const std::string& path) {
  try {
    return scalar_from_json(j);
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Rational rational_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string \"a/b\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

int generator_index(const std::string& key, int limit, const std::string& path) {
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    fail(path, "generator key \"" + key + "\" is not an integer");
  }
  if (index < 1 || index > limit) fail(path, "generator key " + key + " out of range 1.." + std::to_string(limit));
  return index;
}

StructureModel parse_structure(const json& doc) {
  StructureModel m;
  m.name = require_string(doc, "name", "");
  m.n = require_int(doc, "n", "");
  if (m.n < 1 || m.n > 15) fail("n", "must be in 1..15");
  m.equations.assign(static_cast<std::size_t>(m.n), {});
  const json& d = require(doc, "d", "");
  if (!d.is_object()) fail("d", "expected an object keyed by generator index");
  for (const auto& [key, terms] : d.items()) {
    const std::string path = "d." + key;
    const int index = generator_index(key, m.n, path);
    if (!terms.is_array()) fail(path, "expected an array of terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tpath = index_path(path, t);
      const Scalar coeff = scalar_at(require(terms[t], "coeff", tpath), field_path(tpath, "coeff"));
      const json& word = require_array(terms[t], "word", tpath);
      if (word.size() != 2) fail(field_path(tpath, "word"), "words must have length 2 (Lie-algebra structure equations)");
      Generator g[2];
      for (std::size_t w = 0; w < 2; ++w) {
        if (!word[w].is_string()) fail(index_path(field_path(tpath, "word"), w), "expected a generator string");
        try {
          g[w] = parse_generator(word[w].get<std::string>(), m.n);
        } catch (const ModelError& e) {
          fail(index_path(field_path(tpath, "word"), w), e.what());
        }
      }
      m.equations[static_cast<std::size_t>(index - 1)].push_back({coeff, g[0], g[1]});
    }
  }
  return m;
}

std::vector<RealTerm> parse_real_terms(const json& terms, int dim, const std::string& path) {
  if (!terms.is_array()) fail(path, "expected an array of terms");
  std::vector<RealTerm> out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = index_path(path, t);
    RealTerm term;
    term.coeff = rational_at(require(terms[t], "coeff", tpath), field_path(tpath, "coeff"));
    const json& word = require_array(terms[t], "word", tpath);
    if (word.size() != 2 || !word[0].is_number_integer() || !word[1].is_number_integer()) {
      fail(field_path(tpath, "word"), "expected [j, k] with integer indices");
    }
    term.first = word[0].get<int>() - 1;
    term.second = word[1].get<int>() - 1;
    if (term.first < 0 || term.second >= dim || term.first >= term.second) {
      fail(field_path(tpath, "word"), "indices must satisfy 1 <= j < k <= " + std::to_string(dim));
    }
    out.push_back(term);
  }
  return out;
}

SymplecticModel parse_symplectic(const json& doc) {
  SymplecticModel m;
  m.name = require_string(doc, "name", "");
  m.dim = require_int(doc, "dim", "");
  if (m.dim < 2 || m.dim > 30 || m.dim % 2 != 0) fail("dim", "must be even and in 2..30");
  m.equations.assign(static_cast<std::size_t>(m.dim), {});
  const json& d = require(doc, "d", "");
  if (!d.is_object()) fail("d", "expected an object keyed by generator index");
  for (const auto& [key, terms] : d.items()) {
    const std::string path = "d." + key;
    const int index = generator_index(key, m.dim, path);
    m.equations[static_cast<std::size_t>(index - 1)] = parse_real_terms(terms, m.dim, path);
  }
  m.omega = parse_real_terms(require(doc, "omega", ""), m.dim, "omega");
  return m;
}

void parse_matrices(const json& doc, const std::string& key, DoubleComplex& c) {
  if (!doc.contains(key) || doc.at(key).is_null()) return;
  const json& list = doc.at(key);
  if (!list.is_array()) fail(key, "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = index_path(key, i);
    const Bidegree from{require_int(list[i], "p", path), require_int(list[i], "q", path)};
    Bidegree target = from;
    if (key == "del") target.p += 1;
    if (key == "delbar") target.q += 1;
    if (key == "conjugation") target = {from.q, from.p};
    const std::size_t rows = c.dim(target);
    const std::size_t cols = c.dim(from);
    const json& entries = require_array(list[i], "entries", path);
    if (entries.size() != rows * cols) {
      fail(field_path(path, "entries"), "shape error: " + key + " at " + to_string(from) + " needs " +
                                            std::to_string(rows) + "x" + std::to_string(cols) + " = " +
                                            std::to_string(rows * cols) + " entries, got " +
                                            std::to_string(entries.size()));
    }
    std::vector<Scalar> values;
    values.reserve(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e) {
      values.push_back(scalar_at(entries[e], index_path(field_path(path, "entries"), e)));
    }
    Matrix m(rows, cols, std::move(values));
    if (key == "del") c.set_del(from, std::move(m));
    if (key == "delbar") c.set_delbar(from, std::move(m));
    if (key == "conjugation") c.set_conjugation(from, std::move(m));
  }
}

DoubleComplex parse_bicomplex(const json& doc) {
  DoubleComplex c;
  if (doc.contains("field")) {
    const json& f = doc.at("field");
    if (!f.is_string() || f.get<std::string>() != "Q(i)") fail("field", "only \"Q(i)\" is supported");
  }
  if (doc.contains("topDegree") && !doc.at("topDegree").is_null()) {
    if (!doc.at("topDegree").is_number_integer()) fail("topDegree", "expected an integer or null");
    c.set_top_degree(doc.at("topDegree").get<int>());
  }
  const json& spaces = require_array(doc, "spaces", "");
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const std::string path = index_path("spaces", i);
    const int dim = require_int(spaces[i], "dim", path);
    if (dim < 0) fail(field_path(path, "dim"), "must be non-negative");
    c.set_dim({require_int(spaces[i], "p", path), require_int(spaces[i], "q", path)}, static_cast<std::size_t>(dim));
  }
  parse_matrices(doc, "del", c);
  parse_matrices(doc, "delbar", c);
  parse_matrices(doc, "conjugation", c);
  return c;
}

ordered_json matrices_to_json(const std::map<Bidegree, Matrix>& table) {
  ordered_json list = ordered_json::array();
  for (const auto& [b, m] : table) {
    if (m.is_zero()) continue;
    ordered_json item;
    item["p"] = b.p;
    item["q"] = b.q;
    ordered_json entries = ordered_json::array();
    for (const auto& s : m.entries()) entries.push_back(scalar_ordered(s));
    item["entries"] = std::move(entries);
    list.push_back(std::move(item));
  }
  return list;
}

ordered_json real_terms_to_json(const std::vector<RealTerm>& terms) {
  ordered_json list = ordered_json::array();
  for (const auto& t : terms) {
    ordered_json item;
    item["coeff"] = t.coeff.str();
    item["word"] = {t.first + 1, t.second + 1};
    list.push_back(std::move(item));
  }
  return list;
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) { return json::array({s.re().str(), s.im().str()}); }

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
    return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
  }
  throw std::invalid_argument("expected a scalar \"a/b\" or [\"re\",\"im\"]");
}

const std::vector<CatalogEntry>& builtins() {
  static const std::vector<CatalogEntry> entries = make_builtins();
  return entries;
}

std::optional<CatalogEntry> find_builtin(const std::string& key) {
  for (const auto& e : builtins()) {
    if (e.key == key) return e;
  }
  return std::nullopt;
}

CatalogEntry parse_entry(const nlohmann::json& doc, const std::string& source) {
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");
  const std::string format = require_string(doc, "format", "");
  CatalogEntry e;
  e.provenance = doc.contains("provenance") && doc.at("provenance").is_string()
                     ? doc.at("provenance").get<std::string>()
                     : "loaded from " + source;
  try {
    if (format == "structure") {
      e.kind = ModelKind::ComplexStructure;
      auto m = parse_structure(doc);
      e.key = m.name;
      e.payload = std::move(m);
    } else if (format == "symplectic") {
      e.kind = ModelKind::Symplectic;
      auto m = parse_symplectic(doc);
      e.key = m.name;
      e.payload = std::move(m);
    } else if (format == "bicomplex") {
      e.kind = ModelKind::RawBicomplex;
      e.key = require_string(doc, "name", "");
      e.payload = parse_bicomplex(doc);
    } else {
      fail("format", "expected \"structure\", \"symplectic\" or \"bicomplex\", got \"" + format + "\"");
    }
  } catch (const ParseError& err) {
    throw ParseError(source + ": " + err.what());
  } catch (const DimensionMismatch& err) {
    throw ParseError(source + ": shape error: " + err.what());
  }
  return e;
}

CatalogEntry parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
  return parse_entry(doc, path.string());
}

CatalogEntry load(const std::filesystem::path& path) {
  CatalogEntry e = parse_file(path);
  validate_entry(e);
  return e;
}

CatalogEntry resolve(const std::string& target) {
  if (auto e = find_builtin(target)) return *e;
  return load(target);
}

std::vector<CheckResult> check_entry(const CatalogEntry& e) {
  switch (e.kind) {
    case ModelKind::ComplexStructure: return check_structure(std::get<StructureModel>(e.payload));
    case ModelKind::Symplectic: {
      auto out = check_symplectic(std::get<SymplecticModel>(e.payload));
      bool ok = true;
      for (const auto& r : out) ok = ok && r.ok;
      if (ok) {
        const DoubleComplex sheared = shear(compile_symplectic(std::get<SymplecticModel>(e.payload)), 2);
        for (auto& r : check_identities(sheared)) {
          r.identity = "shear: " + r.identity;
          out.push_back(std::move(r));
        }
      }
      return out;
    }
    case ModelKind::RawBicomplex: return check_identities(std::get<DoubleComplex>(e.payload));
  }
  return {};
}

void validate_entry(const CatalogEntry& e) {
  for (const auto& r : check_entry(e)) {
    if (r.ok) continue;
    const std::string message = r.identity + (r.detail.empty() ? "" : ": " + r.detail);
    if (e.kind == ModelKind::RawBicomplex) throw ValidationError(message);
    throw ModelError(message);
  }
}

nlohmann::ordered_json serialize(const CatalogEntry& e) {
  ordered_json doc;
  switch (e.kind) {
    case ModelKind::ComplexStructure: {
      const auto& m = std::get<StructureModel>(e.payload);
      doc["format"] = "structure";
      doc["name"] = m.name;
      doc["provenance"] = e.provenance;
      doc["n"] = m.n;
      ordered_json d = ordered_json::object();
      for (std::size_t i = 0; i < m.equations.size(); ++i) {
        if (m.equations[i].empty()) continue;
        ordered_json terms = ordered_json::array();
        for (const auto& t : m.equations[i]) {
          ordered_json item;
          item["coeff"] = scalar_ordered(t.coeff);
          item["word"] = {generator_token(t.first), generator_token(t.second)};
          terms.push_back(std::move(item));
        }
        d[std::to_string(i + 1)] = std::move(terms);
      }
      doc["d"] = std::move(d);
      break;
    }
    case ModelKind::Symplectic: {
      const auto& m = std::get<SymplecticModel>(e.payload);
      doc["format"] = "symplectic";
      doc["name"] = m.name;
      doc["provenance"] = e.provenance;
      doc["dim"] = m.dim;
      ordered_json d = ordered_json::object();
      for (std::size_t i = 0; i < m.equations.size(); ++i) {
        if (!m.equations[i].empty()) d[std::to_string(i + 1)] = real_terms_to_json(m.equations[i]);
      }
      doc["d"] = std::move(d);
      doc["omega"] = real_terms_to_json(m.omega);
      break;
    }
    case ModelKind::RawBicomplex: {
      const auto& c = std::get<DoubleComplex>(e.payload);
      doc["format"] = "bicomplex";
      doc["name"] = e.key;
      doc["provenance"] = e.provenance;
      doc["field"] = "Q(i)";
      doc["topDegree"] = c.top_degree() ? ordered_json(*c.top_degree()) : ordered_json(nullptr);
      ordered_json spaces = ordered_json::array();
      for (const auto& [b, dim] : c.dims()) spaces.push_back({{"p", b.p}, {"q", b.q}, {"dim", dim}});
      doc["spaces"] = std::move(spaces);
      doc["del"] = matrices_to_json(c.del_entries());
      doc["delbar"] = matrices_to_json(c.delbar_entries());
      if (c.has_conjugation()) doc["conjugation"] = matrices_to_json(c.conjugation_entries());
      break;
    }
  }
  return doc;
}

DoubleComplex complex_of(const CatalogEntry& e) {
  switch (e.kind) {
    case ModelKind::ComplexStructure: return compile(std::get<StructureModel>(e.payload)).complex;
    case ModelKind::RawBicomplex: return std::get<DoubleComplex>(e.payload);
    case ModelKind::Symplectic: break;
  }
  throw CapabilityError("\"" + e.key + "\" is a symplectic model, not a complex structure or bicomplex");
}

}  // namespace ddbar
