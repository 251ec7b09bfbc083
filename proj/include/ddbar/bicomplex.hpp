// Bounded double complexes and their cohomologies.
//
// Conventions:
//  * del maps (p,q) -> (p+1,q), delbar maps (p,q) -> (p,q+1), and the two
//    anticommute, so d = del + delbar squares to zero on the total complex.
//  * The composite del.delbar into (p,q) is del(p-1,q) * delbar(p-1,q-1).
//  * Bidegrees without an entry are zero spaces; missing matrices are zero.
//  * The optional conjugation sigma: B^{p,q} -> B^{q,p} is conjugate-linear,
//    sigma(v) = S * conj(v) with S the stored matrix.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddbar/linalg.hpp"

namespace ddbar {

struct Bidegree {
  int p = 0;
  int q = 0;
  int total() const { return p + q; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(Bidegree b);

/// A structural identity of the complex fails; the message names it and the
/// bidegree where it fails.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation needs structure the complex does not carry (conjugation,
/// top degree, a strip).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DoubleComplex {
 public:
  DoubleComplex() = default;

  void set_dim(Bidegree at, std::size_t dim);
  /// Matrix shapes are checked against the current dims.
  void set_del(Bidegree from, Matrix m);
  void set_delbar(Bidegree from, Matrix m);
  void set_conjugation(Bidegree from, Matrix m);
  void set_top_degree(std::optional<int> top) { top_degree_ = top; }
  void enable_conjugation() { has_conjugation_ = true; }

  std::size_t dim(Bidegree at) const;
  /// Zero matrix of the right shape when absent.
  Matrix del(Bidegree from) const;
  Matrix delbar(Bidegree from) const;
  /// del.delbar from (p,q) into (p+1,q+1).
  Matrix del_delbar(Bidegree from) const;
  Matrix conjugation(Bidegree from) const;

  bool has_conjugation() const { return has_conjugation_; }
  std::optional<int> top_degree() const { return top_degree_; }

  /// Bidegrees of positive dimension, ordered.
  std::vector<Bidegree> support() const;
  /// Bidegrees of positive dimension with p+q = k, ordered by p.
  std::vector<Bidegree> support_in_degree(int k) const;
  /// [min, max] of p+q over the support; nullopt when empty.
  std::optional<std::pair<int, int>> degree_range() const;

  const std::map<Bidegree, std::size_t>& dims() const { return dims_; }
  const std::map<Bidegree, Matrix>& del_entries() const { return del_; }
  const std::map<Bidegree, Matrix>& delbar_entries() const { return delbar_; }
  const std::map<Bidegree, Matrix>& conjugation_entries() const { return conj_; }

 private:
  std::map<Bidegree, std::size_t> dims_;
  std::map<Bidegree, Matrix> del_;
  std::map<Bidegree, Matrix> delbar_;
  std::map<Bidegree, Matrix> conj_;
  bool has_conjugation_ = false;
  std::optional<int> top_degree_;
};

struct CheckResult {
  std::string identity;
  bool ok = true;
  std::string detail;
};

/// Every structural identity, one entry per identity kind; failures name the
/// first offending bidegree.
std::vector<CheckResult> check_identities(const DoubleComplex& c);
/// Throws ValidationError with the first failing identity.
void validate(const DoubleComplex& c);

/// Transforms by an invertible change of basis P(p,q) on each bidegree
/// (new coordinates = P * old); bidegrees without an entry keep their basis.
DoubleComplex change_basis(const DoubleComplex& c, const std::map<Bidegree, Matrix>& basis_change);

struct CohomologySpace {
  Subspace numerator;
  Subspace denominator;
  std::size_t dim = 0;
};

CohomologySpace dolbeault(const DoubleComplex& c, Bidegree at);
CohomologySpace conj_dolbeault(const DoubleComplex& c, Bidegree at);
CohomologySpace bott_chern(const DoubleComplex& c, Bidegree at);
CohomologySpace aeppli(const DoubleComplex& c, Bidegree at);
CohomologySpace de_rham(const DoubleComplex& c, int k);

/// Rank-nullity versions of the dimensions above, used as a second path.
std::size_t dolbeault_dim_by_ranks(const DoubleComplex& c, Bidegree at);
std::size_t bott_chern_dim_by_ranks(const DoubleComplex& c, Bidegree at);
std::size_t aeppli_dim_by_ranks(const DoubleComplex& c, Bidegree at);

/// The total complex in degree k: ordered bidegrees of Tot^k and the
/// differential d: Tot^k -> Tot^{k+1}.
struct TotalDegree {
  std::vector<Bidegree> blocks;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
  std::size_t offset(Bidegree b) const;
};
TotalDegree total_degree(const DoubleComplex& c, int k);
Matrix total_differential(const DoubleComplex& c, int k);

struct VarouchasDims {
  std::size_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  VarouchasDims& operator+=(const VarouchasDims& o);
  friend bool operator==(const VarouchasDims&, const VarouchasDims&) = default;
};

struct VarouchasTable {
  std::map<Bidegree, VarouchasDims> at;
  VarouchasDims get(Bidegree b) const;
  VarouchasDims total(int k) const;
};

VarouchasDims varouchas_at(const DoubleComplex& c, Bidegree at);
VarouchasTable varouchas(const DoubleComplex& c);

/// Ranks of the natural maps between cohomologies in total degree k.
struct NaturalMapRanks {
  std::size_t bc_to_dolbeault = 0;
  std::size_t bc_to_conj_dolbeault = 0;
  std::size_t bc_to_de_rham = 0;
  std::size_t dolbeault_to_aeppli = 0;
  std::size_t conj_dolbeault_to_aeppli = 0;
  std::size_t de_rham_to_aeppli = 0;
  std::size_t bc_to_aeppli = 0;
};
NaturalMapRanks natural_map_ranks(const DoubleComplex& c, int k);

/// Total-degree sums over p+q = k.
struct DegreeDims {
  std::size_t dolbeault = 0;
  std::size_t conj_dolbeault = 0;
  std::size_t bott_chern = 0;
  std::size_t aeppli = 0;
  std::size_t betti = 0;
};
DegreeDims degree_dims(const DoubleComplex& c, int k);

struct Strip {
  int slope = 0;  // l
  int width = 0;  // N
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Smallest N, with some l in {0..N}, such that B^{p,q} = 0 unless
/// l*q <= p <= l*q + N. Among equally narrow strips the steepest is returned.
std::optional<Strip> strip_support(const DoubleComplex& c);

}  // namespace ddbar
