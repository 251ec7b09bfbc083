// Symplectic Lie-algebra models: the co-differential d^Lambda, the sheared
// double complex B^{p,q} = Lambda^{p-q} (x) beta^q, Tseng-Yau cohomologies and
// the Hard Lefschetz condition.
//
// Conventions: Lambda = (1/2) sum_{j,k} pi^{jk} i_{e_j} i_{e_k} with pi the
// inverse of omega's coefficient matrix, and d^Lambda = Lambda d - d Lambda.
// Flipping the sign of d^Lambda changes no kernel or image.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/exterior.hpp"
#include "ddbar/liemodel.hpp"

namespace ddbar {

/// coeff * e^{first} ^ e^{second}, 0-based indices with first < second.
struct RealTerm {
  Rational coeff;
  int first = 0;
  int second = 0;
};

struct SymplecticModel {
  std::string name;
  int dim = 0;  // 2n
  /// equations[i] lists the terms of d e^{i+1}; empty means closed.
  std::vector<std::vector<RealTerm>> equations;
  std::vector<RealTerm> omega;
};

struct SymplecticComplex {
  SymplecticModel model;
  OddDerivation d{{}};
  Form omega;
  Matrix poisson;  // inverse of omega's antisymmetric coefficient matrix
  std::vector<std::vector<Monomial>> bases;  // by degree 0..2n
  std::vector<Matrix> d_matrix;              // degree k -> k+1
  std::vector<Matrix> d_lambda_matrix;       // degree k -> k-1

  int dim() const { return model.dim; }
  int half_dim() const { return model.dim / 2; }
  /// Zero-shaped when k is out of range.
  Matrix d_at(int k) const;
  Matrix d_lambda_at(int k) const;
  std::size_t space_dim(int k) const;
};

/// Checks d^2 = 0, d omega = 0, omega non-degenerate, (d^Lambda)^2 = 0 and
/// d d^Lambda + d^Lambda d = 0; throws ModelError naming the first failure.
SymplecticComplex compile_symplectic(const SymplecticModel& m);

/// Results of every structural check, in order, for reporting.
std::vector<CheckResult> check_symplectic(const SymplecticModel& m);

Form lambda_contract(const SymplecticComplex& s, const Form& a);
Form d_lambda(const SymplecticComplex& s, const Form& a);

/// B^{p,q} = Lambda^{p-q} beta^q for q in 0..window, del = d, delbar = d^Lambda.
DoubleComplex shear(const SymplecticComplex& s, int window);

struct TsengYauDims {
  std::size_t plus = 0;   // (ker d cap ker d^Lambda) / im d d^Lambda
  std::size_t times = 0;  // ker d d^Lambda / (im d + im d^Lambda)
  friend bool operator==(const TsengYauDims&, const TsengYauDims&) = default;
};

/// Computed directly on (Lambda^*, d, d^Lambda), then cross-checked against
/// Bott-Chern / Aeppli of the shear complex at an interior column.
TsengYauDims tseng_yau(const SymplecticComplex& s, int k);

std::size_t symplectic_betti(const SymplecticComplex& s, int k);

struct ParityBound {
  int parity = 0;
  std::int64_t plus_sum = 0;
  std::int64_t times_sum = 0;
  std::int64_t bound = 0;  // 2(2n+1) * sum of Betti numbers
  std::int64_t plus_slack = 0;
  std::int64_t times_slack = 0;
  bool holds() const { return plus_slack >= 0 && times_slack >= 0; }
};

std::vector<ParityBound> check_symplectic_bound(const SymplecticComplex& s);

/// [omega^k ^ .]: H^{n-k} -> H^{n+k} bijective for every k in 0..n.
bool hard_lefschetz(const SymplecticComplex& s);

}  // namespace ddbar
