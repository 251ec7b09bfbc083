// Exterior algebra on finitely many degree-one generators.
//
// A monomial is a bitmask over generator indices; the canonical monomial
// e^{i1} ^ ... ^ e^{ik} lists its indices increasingly. Complex models put the
// holomorphic generators phi^1..phi^n on bits 0..n-1 and their conjugates on
// bits n..2n-1, so "holomorphic before anti-holomorphic" falls out of the bit
// order.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ddbar/exactnum.hpp"
#include "ddbar/linalg.hpp"

namespace ddbar {

using Monomial = std::uint32_t;

int monomial_degree(Monomial m);

/// Sign of a ^ b relative to the canonical monomial a|b; 0 when they share a
/// generator.
int wedge_sign(Monomial a, Monomial b);

/// All degree-k monomials on `generators` generators, in lexicographic order
/// of their increasing index lists.
std::vector<Monomial> monomials_of_degree(int generators, int k);

class Form {
 public:
  Form() = default;
  explicit Form(int generators) : generators_(generators) {}
  static Form monomial(int generators, Monomial m, Scalar coeff = Scalar(1));
  /// The generator e^index (0-based).
  static Form generator(int generators, int index, Scalar coeff = Scalar(1));
  static Form constant(int generators, Scalar c) { return monomial(generators, 0, std::move(c)); }

  int generators() const { return generators_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;
  /// Adds c * m, dropping terms that cancel.
  void add_term(Monomial m, const Scalar& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);
  Form operator-() const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  int generators_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Graded-commutative exterior product.
Form wedge(const Form& a, const Form& b);

/// Graded derivation of odd degree determined by its values on generators:
/// D(x ^ y) = Dx ^ y + (-1)^{deg x} x ^ Dy. Both the exterior differential
/// and contraction with a vector are of this kind.
class OddDerivation {
 public:
  explicit OddDerivation(std::vector<Form> generator_images);

  int generators() const { return static_cast<int>(images_.size()); }
  const Form& on_generator(int index) const { return images_[static_cast<std::size_t>(index)]; }
  Form apply(Monomial m) const;
  Form operator()(const Form& f) const;

 private:
  std::vector<Form> images_;
};

/// Coordinates of `f` in the given monomial basis; throws DimensionMismatch
/// if `f` has a term outside it.
std::vector<Scalar> coordinates(const Form& f, std::span<const Monomial> basis);
Form from_coordinates(int generators, std::span<const Monomial> basis, std::span<const Scalar> coords);

/// Matrix of a linear operator on forms between two monomial bases.
Matrix operator_matrix(const std::function<Form(Monomial)>& op, std::span<const Monomial> source,
                       std::span<const Monomial> target);

}  // namespace ddbar
