// Random small conjugation-equipped double complexes.
//
// C is a direct sum of dots, squares and zigzags placed in [0,2]x[0,2];
// B = C (+) mirror(C), with sigma swapping the two summands. A random
// invertible change of basis then hides the decomposition.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/linalg.hpp"

namespace randcx {

using ddbar::Bidegree;
using ddbar::DoubleComplex;
using ddbar::Matrix;
using ddbar::Scalar;

struct Vec {
  Bidegree at;
};

struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  bool bar = false;  // false: del, true: delbar
  Scalar coeff;
};

struct Shape {
  std::vector<Vec> vecs;
  std::vector<Arrow> arrows;
};

constexpr int kMax = 2;  // n = 2, bidegrees in [0,2]^2

inline bool inside(Bidegree b) { return b.p >= 0 && b.q >= 0 && b.p <= kMax && b.q <= kMax; }

inline Shape dot(Bidegree at) { return {{{at}}, {}}; }

inline Shape square(Bidegree at) {
  Shape s;
  s.vecs = {{at}, {{at.p + 1, at.q}}, {{at.p, at.q + 1}}, {{at.p + 1, at.q + 1}}};
  s.arrows = {{0, 1, false, Scalar(1)}, {0, 2, true, Scalar(1)}, {1, 3, true, Scalar(1)}, {2, 3, false, Scalar(-1)}};
  return s;
}

// Sources s_i at (p-i, q+i), i < m; targets t_i at (p-i+1, q+i), i <= m;
// del s_i = t_i, delbar s_i = t_{i+1}. The end targets may be dropped.
inline Shape zigzag(Bidegree at, int m, bool first, bool last) {
  Shape s;
  std::vector<long> target(static_cast<std::size_t>(m + 1), -1);
  for (int i = 0; i <= m; ++i) {
    if ((i == 0 && !first) || (i == m && !last)) continue;
    target[static_cast<std::size_t>(i)] = static_cast<long>(s.vecs.size());
    s.vecs.push_back({{at.p - i + 1, at.q + i}});
  }
  for (int i = 0; i < m; ++i) {
    const std::size_t src = s.vecs.size();
    s.vecs.push_back({{at.p - i, at.q + i}});
    if (target[static_cast<std::size_t>(i)] >= 0) {
      s.arrows.push_back({src, static_cast<std::size_t>(target[static_cast<std::size_t>(i)]), false, Scalar(1)});
    }
    if (target[static_cast<std::size_t>(i + 1)] >= 0) {
      s.arrows.push_back({src, static_cast<std::size_t>(target[static_cast<std::size_t>(i + 1)]), true, Scalar(1)});
    }
  }
  return s;
}

inline Shape mirror(const Shape& s) {
  Shape out = s;
  for (auto& v : out.vecs) v.at = {v.at.q, v.at.p};
  for (auto& a : out.arrows) {
    a.bar = !a.bar;
    a.coeff = a.coeff.conj();
  }
  return out;
}

inline bool fits(const Shape& s) {
  for (const auto& v : s.vecs) {
    if (!inside(v.at)) return false;
  }
  return true;
}

inline DoubleComplex assemble(const std::vector<Shape>& shapes) {
  // global index of each vector inside its bidegree
  std::map<Bidegree, std::size_t> dims;
  std::vector<std::vector<std::size_t>> slot(shapes.size());
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    for (const auto& v : shapes[s].vecs) slot[s].push_back(dims[v.at]++);
  }
  DoubleComplex c;
  for (const auto& [b, d] : dims) c.set_dim(b, d);
  std::map<Bidegree, Matrix> del, delbar;
  for (const auto& [b, d] : dims) {
    del.emplace(b, Matrix(c.dim({b.p + 1, b.q}), d));
    delbar.emplace(b, Matrix(c.dim({b.p, b.q + 1}), d));
  }
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    for (const auto& a : shapes[s].arrows) {
      const Bidegree from = shapes[s].vecs[a.from].at;
      Matrix& m = a.bar ? delbar.at(from) : del.at(from);
      m(slot[s][a.to], slot[s][a.from]) = a.coeff;
    }
  }
  for (auto& [b, m] : del) c.set_del(b, std::move(m));
  for (auto& [b, m] : delbar) c.set_delbar(b, std::move(m));

  // shapes come in (shape, mirror) pairs at positions 2j, 2j+1
  std::map<Bidegree, Matrix> conj;
  for (const auto& [b, d] : dims) conj.emplace(b, Matrix(c.dim({b.q, b.p}), d));
  for (std::size_t s = 0; s + 1 < shapes.size(); s += 2) {
    for (std::size_t v = 0; v < shapes[s].vecs.size(); ++v) {
      const Bidegree at = shapes[s].vecs[v].at;
      const Bidegree mirrored = shapes[s + 1].vecs[v].at;
      conj.at(at)(slot[s + 1][v], slot[s][v]) = Scalar(1);
      conj.at(mirrored)(slot[s][v], slot[s + 1][v]) = Scalar(1);
    }
  }
  for (auto& [b, m] : conj) c.set_conjugation(b, std::move(m));
  c.set_top_degree(2 * kMax);
  return c;
}

inline Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::bernoulli_distribution complex_entry(0.3);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Scalar(ddbar::Rational(entry(rng)), ddbar::Rational(complex_entry(rng) ? entry(rng) : 0));
      }
    }
    if (ddbar::rank(m) == n) return m;
  }
}

/// Random basis change of every nonzero bidegree.
inline DoubleComplex scramble(const DoubleComplex& c, std::mt19937& rng) {
  std::map<Bidegree, Matrix> change;
  for (Bidegree b : c.support()) change.emplace(b, random_invertible(c.dim(b), rng));
  return ddbar::change_basis(c, change);
}

/// lemma_only restricts the summands to dots and squares.
inline DoubleComplex random_complex(std::mt19937& rng, bool lemma_only) {
  std::uniform_int_distribution<int> coord(0, kMax);
  std::uniform_int_distribution<int> kind(0, lemma_only ? 1 : 3);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> length(1, 2);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<Shape> shapes;
    const int summands = count(rng);
    for (int i = 0; i < summands; ++i) {
      const Bidegree at{coord(rng), coord(rng)};
      Shape s;
      switch (kind(rng)) {
        case 0: s = dot(at); break;
        case 1: s = square(at); break;
        default: s = zigzag(at, length(rng), coin(rng), coin(rng)); break;
      }
      if (s.vecs.empty() || !fits(s)) continue;
      shapes.push_back(s);
      shapes.push_back(mirror(s));
    }
    if (shapes.empty()) continue;
    const DoubleComplex c = assemble(shapes);
    bool small = true;
    for (Bidegree b : c.support()) small = small && c.dim(b) <= 4;
    if (!small) continue;
    return scramble(c, rng);
  }
}

}  // namespace randcx
