// Headline numerical invariants of a double complex and the three
// del-delbar-Lemma detectors.
#pragma once

#include <cstdint>
#include <optional>

#include "ddbar/bicomplex.hpp"

namespace ddbar {

/// Total-degree cohomology dimensions at degree k together with
///   S^k = c_k (h^k_dbar + h^{k+1}_dbar) - h^k_A,   c_k = min{k+1, 2n-k+1}
///   N^k = h^k_A - h^k_BC
///   Delta^k = h^k_A + h^k_BC - 2 b_k
struct DegreeReport {
  int k = 0;
  std::int64_t betti = 0;
  std::int64_t dolbeault = 0;
  std::int64_t conj_dolbeault = 0;
  std::int64_t bott_chern = 0;
  std::int64_t aeppli = 0;
  std::int64_t refined_constant = 0;
  std::int64_t S = 0;
  std::int64_t N = 0;
  std::int64_t Delta = 0;
};

/// min{k+1, (2n-k)+1} for a complex of top degree 2n.
std::int64_t refined_constant(int top_degree, int k);

/// Needs the top degree; throws CapabilityError without it.
DegreeReport degree_report(const DoubleComplex& c, int k);

struct BoundCheck {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::int64_t slack = 0;  // rhs - lhs
};

/// h^k_A <= c_k (h^k_dbar + h^{k+1}_dbar). Needs conjugation and top degree.
BoundCheck check_upper_bound_aeppli(const DoubleComplex& c, int k);
/// h^k_BC <= c_k (h^k_dbar + h^{k-1}_dbar). Needs conjugation and top degree.
BoundCheck check_upper_bound_bott_chern(const DoubleComplex& c, int k);

struct AlgebraicBoundCheck {
  Strip strip;
  BoundCheck aeppli;
  BoundCheck bott_chern;
  bool holds() const { return aeppli.holds && bott_chern.holds; }
};

/// The strip-supported bound with both Dolbeault and conjugate-Dolbeault
/// cohomology on the right-hand side, constant N+1.
AlgebraicBoundCheck check_algebraic_upper_bound(const DoubleComplex& c, int k);

struct LemmaVerdict {
  bool by_natural_map = false;  // H_BC -> H_A injective in every degree
  bool by_delta = false;        // Delta^k = 0 for all k
  bool by_bc_equals_a = false;  // h^k_BC = h^k_A for all k
  bool agree() const { return by_natural_map == by_delta && by_delta == by_bc_equals_a; }
  bool holds() const { return by_natural_map && by_delta && by_bc_equals_a; }
};

LemmaVerdict lemma_verdict(const DoubleComplex& c);

}  // namespace ddbar
