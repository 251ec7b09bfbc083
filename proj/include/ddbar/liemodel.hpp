// Complex structure equations of nilpotent / solvable Lie algebras and the
// finite double complex of invariant forms they determine.
//
// Generators phi^1..phi^n sit on bits 0..n-1 of a Monomial and their
// conjugates on bits n..2n-1. A monomial phi^I ^ phibar^J therefore lists the
// holomorphic indices first, each block increasing, and all Koszul signs come
// from that order. The basis of B^{p,q} enumerates I (size p) in
// lexicographic order, and J (size q) lexicographically within each I.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/exterior.hpp"

namespace ddbar {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  int index = 0;  // 0-based
  bool conjugate = false;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Parses "3" (phi^3) or "c3" (phibar^3); indices are 1-based in text.
Generator parse_generator(std::string_view token, int n);
std::string generator_token(Generator g);

struct StructureTerm {
  Scalar coeff;
  Generator first;
  Generator second;
};

struct StructureModel {
  std::string name;
  int n = 0;
  /// equations[i] lists the terms of d phi^{i+1}; empty means closed.
  std::vector<std::vector<StructureTerm>> equations;
};

struct CompiledModel {
  StructureModel model;
  OddDerivation d{{}};
  DoubleComplex complex;
  std::map<Bidegree, std::vector<Monomial>> bases;

  int n() const { return model.n; }
  int generators() const { return 2 * model.n; }
  Monomial top_monomial() const { return (Monomial{1} << generators()) - 1; }
  Bidegree bidegree_of(Monomial m) const;

  /// Coordinates of a form homogeneous of bidegree `at`.
  std::vector<Scalar> coordinates(const Form& f, Bidegree at) const;
  Form form(Bidegree at, std::span<const Scalar> coords) const;
};

/// The exterior differential: Leibniz extension of the structure equations,
/// with d phibar^i the conjugate of d phi^i.
OddDerivation model_differential(const StructureModel& m);

/// Per-identity structural checks: well-formedness, d^2 = 0 on generators,
/// integrability, the identities of the compiled complex, Stokes.
std::vector<CheckResult> check_structure(const StructureModel& m);

/// Throws ModelError when d^2 != 0 on a generator, or when some d phi^i has a
/// (0,2) component (the bidegree splitting would not give a double complex).
/// The result passes validate().
CompiledModel compile(const StructureModel& m);

Form wedge_forms(const Form& a, const Form& b);
/// Coefficient of phi^{1..n} ^ phibar^{1..n}.
Scalar integrate(const CompiledModel& m, const Form& f);

/// Bidegree (1,0) and (0,1) components of d.
Form del(const CompiledModel& m, const Form& f);
Form delbar(const CompiledModel& m, const Form& f);

/// integrate(d eta) = 0 for every (2n-1)-monomial eta. Returns the first
/// failing monomial, if any.
std::optional<Monomial> stokes_violation(const CompiledModel& m);

/// Bott-Chern class representatives in total degree k, bidegree by bidegree
/// in increasing p.
std::vector<Form> bott_chern_representatives(const CompiledModel& m, int k);

struct PairingMatrix {
  int k = 0;
  Matrix entries;  // h^k_BC x h^{2n-k}_BC
};

/// Matrix of ([a],[b]) -> integral of a ^ b. Throws ModelError if the Stokes
/// check fails.
PairingMatrix kss_pairing(const CompiledModel& m, int k);
/// True iff every pairing matrix is square and of full rank.
bool kss_property(const CompiledModel& m);

}  // namespace ddbar
