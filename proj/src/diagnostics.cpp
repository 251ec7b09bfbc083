#include "ddbar/diagnostics.hpp"

#include <algorithm>

namespace ddbar {

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

int require_top_degree(const DoubleComplex& c, const char* what) {
  if (!c.top_degree()) throw CapabilityError(std::string(what) + " needs a complex with a top degree 2n");
  return *c.top_degree();
}

void require_manifold_type(const DoubleComplex& c, const char* what) {
  require_top_degree(c, what);
  if (!c.has_conjugation()) throw CapabilityError(std::string(what) + " needs a conjugation-equipped complex");
}

std::int64_t dolbeault_total(const DoubleComplex& c, int k) {
  std::int64_t total = 0;
  for (Bidegree b : c.support_in_degree(k)) total += as_int(dolbeault(c, b).dim);
  return total;
}

std::int64_t conj_dolbeault_total(const DoubleComplex& c, int k) {
  std::int64_t total = 0;
  for (Bidegree b : c.support_in_degree(k)) total += as_int(conj_dolbeault(c, b).dim);
  return total;
}

std::int64_t aeppli_total(const DoubleComplex& c, int k) {
  std::int64_t total = 0;
  for (Bidegree b : c.support_in_degree(k)) total += as_int(aeppli(c, b).dim);
  return total;
}

std::int64_t bott_chern_total(const DoubleComplex& c, int k) {
  std::int64_t total = 0;
  for (Bidegree b : c.support_in_degree(k)) total += as_int(bott_chern(c, b).dim);
  return total;
}

BoundCheck make_check(std::int64_t lhs, std::int64_t rhs) { return {lhs <= rhs, lhs, rhs, rhs - lhs}; }

}  // namespace

std::int64_t refined_constant(int top_degree, int k) {
  return std::min<std::int64_t>(k + 1, (top_degree - k) + 1);
}

DegreeReport degree_report(const DoubleComplex& c, int k) {
  const int top = require_top_degree(c, "degree report");
  const DegreeDims dims = degree_dims(c, k);
  DegreeReport r;
  r.k = k;
  r.betti = as_int(dims.betti);
  r.dolbeault = as_int(dims.dolbeault);
  r.conj_dolbeault = as_int(dims.conj_dolbeault);
  r.bott_chern = as_int(dims.bott_chern);
  r.aeppli = as_int(dims.aeppli);
  r.refined_constant = refined_constant(top, k);
  r.S = r.refined_constant * (r.dolbeault + dolbeault_total(c, k + 1)) - r.aeppli;
  r.N = r.aeppli - r.bott_chern;
  r.Delta = r.aeppli + r.bott_chern - 2 * r.betti;
  return r;
}

BoundCheck check_upper_bound_aeppli(const DoubleComplex& c, int k) {
  require_manifold_type(c, "Aeppli upper bound");
  const std::int64_t constant = refined_constant(*c.top_degree(), k);
  return make_check(aeppli_total(c, k), constant * (dolbeault_total(c, k) + dolbeault_total(c, k + 1)));
}

BoundCheck check_upper_bound_bott_chern(const DoubleComplex& c, int k) {
  require_manifold_type(c, "Bott-Chern upper bound");
  const std::int64_t constant = refined_constant(*c.top_degree(), k);
  return make_check(bott_chern_total(c, k), constant * (dolbeault_total(c, k) + dolbeault_total(c, k - 1)));
}

AlgebraicBoundCheck check_algebraic_upper_bound(const DoubleComplex& c, int k) {
  const auto strip = strip_support(c);
  if (!strip) throw CapabilityError("algebraic upper bound needs strip support");
  const std::int64_t factor = strip->width + 1;
  auto both = [&](int degree) { return dolbeault_total(c, degree) + conj_dolbeault_total(c, degree); };
  AlgebraicBoundCheck out;
  out.strip = *strip;
  out.aeppli = make_check(aeppli_total(c, k), factor * (both(k) + both(k + 1)));
  out.bott_chern = make_check(bott_chern_total(c, k), factor * (both(k) + both(k - 1)));
  return out;
}

LemmaVerdict lemma_verdict(const DoubleComplex& c) {
  LemmaVerdict v{true, true, true};
  const auto range = c.degree_range();
  if (!range) return v;
  for (int k = range->first; k <= range->second; ++k) {
    const std::int64_t bc = bott_chern_total(c, k);
    const std::int64_t a = aeppli_total(c, k);
    const std::int64_t b = as_int(de_rham(c, k).dim);
    if (as_int(natural_map_ranks(c, k).bc_to_aeppli) != bc) v.by_natural_map = false;
    if (a + bc - 2 * b != 0) v.by_delta = false;
    if (a != bc) v.by_bc_equals_a = false;
  }
  return v;
}

}  // namespace ddbar
