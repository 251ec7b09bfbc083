#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddbar/linalg.hpp"

using namespace ddbar;

namespace {

std::vector<Scalar> e(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v[i] = Scalar(1);
  return v;
}

Subspace span_of(std::size_t n, const std::vector<std::vector<Scalar>>& cols) {
  return Subspace::span(Matrix::from_columns(n, cols));
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::zero(4, 2)) == 0);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(rank(Matrix{{1, Scalar::i()}, {Scalar::i(), -1}}) == 1);
}

TEST_CASE("kernel") {
  CHECK(kernel_basis(Matrix::zero(3, 3)).dim() == 3);
  CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
  const Subspace k = kernel_basis(Matrix{{1, 1}});
  CHECK(k.dim() == 1);
  CHECK(k.contains(std::vector<Scalar>{1, -1}));
  CHECK(kernel_basis(Matrix(0, 4)).dim() == 4);
}

TEST_CASE("image") {
  CHECK(image_basis(Matrix::identity(4)).dim() == 4);
  CHECK(image_basis(Matrix::zero(3, 2)).dim() == 0);
  CHECK(image_basis(Matrix{{1}, {2}}).dim() == 1);
}

TEST_CASE("sum") {
  const Subspace e1 = span_of(2, {e(2, 0)});
  const Subspace e2 = span_of(2, {e(2, 1)});
  CHECK(sum(e1, e2).dim() == 2);
  CHECK(sum(e1, e1).dim() == 1);
  CHECK(sum(e1, span_of(2, {{1, 1}})).dim() == 2);
  CHECK_THROWS_AS(sum(e1, Subspace(3)), DimensionMismatch);
}

TEST_CASE("intersect") {
  const Subspace a = span_of(3, {e(3, 0), e(3, 1)});
  const Subspace b = span_of(3, {e(3, 1), e(3, 2)});
  const Subspace i = intersect(a, b);
  CHECK(i.dim() == 1);
  CHECK(i == span_of(3, {e(3, 1)}));
  CHECK(intersect(a, a) == a);
  CHECK(intersect(span_of(2, {e(2, 0)}), span_of(2, {e(2, 1)})).dim() == 0);
}

TEST_CASE("quotient dimension") {
  const Subspace five = Subspace::whole(5);
  const Subspace two = span_of(5, {e(5, 0), e(5, 3)});
  CHECK(quotient_dim(five, two) == 3);
  CHECK(quotient_dim(two, two) == 0);
  CHECK(quotient_dim(two, Subspace(5)) == 2);
  CHECK_THROWS_AS(quotient_dim(two, span_of(5, {e(5, 1)})), NotContained);
}

TEST_CASE("quotient representatives extend the denominator") {
  const Subspace big = Subspace::whole(3);
  const Subspace small = span_of(3, {{1, 1, 0}});
  const Matrix reps = quotient_representatives(big, small);
  CHECK(reps.cols() == 2);
  CHECK(Subspace::span(reps.hconcat(small.basis())).dim() == 3);
}

TEST_CASE("induced map rank") {
  const Subspace whole = Subspace::whole(2);
  const Subspace e1 = span_of(2, {e(2, 0)});
  const Subspace e2 = span_of(2, {e(2, 1)});
  CHECK(induced_map_rank(Matrix::identity(2), whole, e1, whole, e1) == 1);
  CHECK(induced_map_rank(Matrix::zero(2, 2), whole, Subspace(2), whole, Subspace(2)) == 0);
  // srcDen = e1 is not sent into dstDen = e2, so there is no induced map
  CHECK_THROWS_AS(induced_map_rank(Matrix::identity(2), whole, e1, whole, e2), NotContained);
  // swap then quotient: e2 survives
  CHECK(induced_map_rank(Matrix{{0, 1}, {1, 0}}, whole, e1, whole, e2) == 1);
  // the map does not send srcDen into dstDen
  CHECK_THROWS_AS(induced_map_rank(Matrix::identity(2), whole, e1, e1, Subspace(2)), NotContained);
}

TEST_CASE("inverse") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(m * inverse(m) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), DivisionByZero);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Rational(entry(rng)), Rational(t % 3 == 0 ? entry(rng) : 0));
    }
    const Subspace k = kernel_basis(m);
    CHECK(k.dim() + image_basis(m).dim() == c);
    CHECK((m * k.basis()).is_zero());
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("pivoting is deterministic") {
  const Matrix m{{0, 1, 1}, {0, 2, 2}, {1, 0, 1}};
  const Echelon a = row_reduce(m);
  const Echelon b = row_reduce(m);
  CHECK(a.reduced == b.reduced);
  CHECK(a.pivots == std::vector<std::size_t>{0, 1});
}
