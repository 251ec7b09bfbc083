#include "ddbar/symplectic.hpp"

#include <functional>

namespace ddbar {

namespace {

Form term_form(int g, const RealTerm& t) {
  return wedge(Form::generator(g, t.first, Scalar(t.coeff)), Form::generator(g, t.second));
}

void check_term(const RealTerm& t, int g, const std::string& where) {
  if (t.first < 0 || t.second >= g || t.first >= t.second) {
    throw ModelError(where + ": word indices must satisfy 1 <= j < k <= " + std::to_string(g));
  }
}

OddDerivation real_differential(const SymplecticModel& m) {
  const int g = m.dim;
  if (g <= 0 || g % 2 != 0 || g > 30) throw ModelError("dimension must be even and in 2..30");
  if (static_cast<int>(m.equations.size()) > g) throw ModelError("more structure equations than generators");
  std::vector<Form> images(static_cast<std::size_t>(g), Form(g));
  for (std::size_t i = 0; i < m.equations.size(); ++i) {
    for (const auto& t : m.equations[i]) {
      check_term(t, g, "d e^" + std::to_string(i + 1));
      images[i] += term_form(g, t);
    }
  }
  return OddDerivation(std::move(images));
}

/// Contraction with the dual basis vector e_k.
OddDerivation contraction(int g, int k) {
  std::vector<Form> images(static_cast<std::size_t>(g), Form(g));
  images[static_cast<std::size_t>(k)] = Form::constant(g, Scalar(1));
  return OddDerivation(std::move(images));
}

Form lambda_with(const std::vector<OddDerivation>& iota, const Matrix& poisson, const Form& a) {
  const int g = static_cast<int>(iota.size());
  Form out(g);
  const Scalar half = Scalar(Rational(1, 2));
  for (int k = 0; k < g; ++k) {
    const Form inner = iota[static_cast<std::size_t>(k)](a);
    if (inner.is_zero()) continue;
    for (int j = 0; j < g; ++j) {
      const Scalar& pi = poisson(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
      if (pi.is_zero()) continue;
      out += iota[static_cast<std::size_t>(j)](inner) * (half * pi);
    }
  }
  return out;
}

struct Structure {
  OddDerivation d{{}};
  Form omega;
  std::optional<Matrix> poisson;
};

}  // namespace

std::vector<CheckResult> check_symplectic(const SymplecticModel& m) {
  std::vector<CheckResult> out;
  Structure st;
  try {
    st.d = real_differential(m);
    st.omega = Form(m.dim);
    for (const auto& t : m.omega) {
      check_term(t, m.dim, "omega");
      st.omega += term_form(m.dim, t);
    }
  } catch (const ModelError& e) {
    out.push_back({"well-formed model", false, e.what()});
    return out;
  }
  out.push_back({"well-formed model", true, {}});

  const int g = m.dim;
  CheckResult d2{"d d = 0", true, {}};
  for (int i = 0; i < g && d2.ok; ++i) {
    if (!st.d(st.d.on_generator(i)).is_zero()) {
      d2.ok = false;
      d2.detail = "fails on e^" + std::to_string(i + 1);
    }
  }
  out.push_back(d2);

  CheckResult closed{"d omega = 0", st.d(st.omega).is_zero(), {}};
  if (!closed.ok) closed.detail = "omega is not closed";
  out.push_back(closed);

  Matrix w(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (const auto& t : m.omega) {
    w(static_cast<std::size_t>(t.first), static_cast<std::size_t>(t.second)) += Scalar(t.coeff);
    w(static_cast<std::size_t>(t.second), static_cast<std::size_t>(t.first)) -= Scalar(t.coeff);
  }
  CheckResult nondeg{"omega non-degenerate", true, {}};
  try {
    st.poisson = inverse(w);
  } catch (const DivisionByZero&) {
    nondeg.ok = false;
    nondeg.detail = "omega not invertible";
  }
  out.push_back(nondeg);
  if (!d2.ok || !nondeg.ok) return out;

  std::vector<OddDerivation> iota;
  for (int k = 0; k < g; ++k) iota.push_back(contraction(g, k));
  auto dl = [&](const Form& a) {
    return lambda_with(iota, *st.poisson, st.d(a)) - st.d(lambda_with(iota, *st.poisson, a));
  };
  CheckResult sq{"d^Lambda d^Lambda = 0", true, {}};
  CheckResult anti{"d d^Lambda + d^Lambda d = 0", true, {}};
  for (int k = 0; k <= g; ++k) {
    for (Monomial mono : monomials_of_degree(g, k)) {
      const Form x = Form::monomial(g, mono);
      const Form y = dl(x);
      if (sq.ok && !dl(y).is_zero()) {
        sq.ok = false;
        sq.detail = "fails in degree " + std::to_string(k);
      }
      if (anti.ok && !(st.d(y) + dl(st.d(x))).is_zero()) {
        anti.ok = false;
        anti.detail = "fails in degree " + std::to_string(k);
      }
    }
  }
  out.push_back(sq);
  out.push_back(anti);
  return out;
}

SymplecticComplex compile_symplectic(const SymplecticModel& m) {
  for (const auto& r : check_symplectic(m)) {
    if (!r.ok) throw ModelError(r.identity + ": " + r.detail);
  }
  SymplecticComplex s;
  s.model = m;
  s.d = real_differential(m);
  const int g = m.dim;
  s.omega = Form(g);
  Matrix w(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (const auto& t : m.omega) {
    s.omega += term_form(g, t);
    w(static_cast<std::size_t>(t.first), static_cast<std::size_t>(t.second)) += Scalar(t.coeff);
    w(static_cast<std::size_t>(t.second), static_cast<std::size_t>(t.first)) -= Scalar(t.coeff);
  }
  s.poisson = inverse(w);
  for (int k = 0; k <= g; ++k) s.bases.push_back(monomials_of_degree(g, k));
  for (int k = 0; k <= g; ++k) {
    const auto& src = s.bases[static_cast<std::size_t>(k)];
    if (k < g) {
      s.d_matrix.push_back(
          operator_matrix([&](Monomial x) { return s.d.apply(x); }, src, s.bases[static_cast<std::size_t>(k + 1)]));
    } else {
      s.d_matrix.push_back(Matrix(0, src.size()));
    }
    if (k > 0) {
      s.d_lambda_matrix.push_back(operator_matrix([&](Monomial x) { return d_lambda(s, Form::monomial(g, x)); },
                                                  src, s.bases[static_cast<std::size_t>(k - 1)]));
    } else {
      s.d_lambda_matrix.push_back(Matrix(0, src.size()));
    }
  }
  return s;
}

std::size_t SymplecticComplex::space_dim(int k) const {
  if (k < 0 || k > dim()) return 0;
  return bases[static_cast<std::size_t>(k)].size();
}

Matrix SymplecticComplex::d_at(int k) const {
  if (k < 0 || k >= dim()) return Matrix(space_dim(k + 1), space_dim(k));
  return d_matrix[static_cast<std::size_t>(k)];
}

Matrix SymplecticComplex::d_lambda_at(int k) const {
  if (k <= 0 || k > dim()) return Matrix(space_dim(k - 1), space_dim(k));
  return d_lambda_matrix[static_cast<std::size_t>(k)];
}

Form lambda_contract(const SymplecticComplex& s, const Form& a) {
  std::vector<OddDerivation> iota;
  for (int k = 0; k < s.dim(); ++k) iota.push_back(contraction(s.dim(), k));
  return lambda_with(iota, s.poisson, a);
}

Form d_lambda(const SymplecticComplex& s, const Form& a) {
  return lambda_contract(s, s.d(a)) - s.d(lambda_contract(s, a));
}

DoubleComplex shear(const SymplecticComplex& s, int window) {
  if (window < 0) throw std::invalid_argument("shear window must be non-negative");
  DoubleComplex c;
  for (int q = 0; q <= window; ++q) {
    for (int k = 0; k <= s.dim(); ++k) c.set_dim({q + k, q}, s.space_dim(k));
  }
  for (int q = 0; q <= window; ++q) {
    for (int k = 0; k <= s.dim(); ++k) {
      const Bidegree at{q + k, q};
      if (k < s.dim()) c.set_del(at, s.d_at(k));
      if (q < window && k > 0) c.set_delbar(at, s.d_lambda_at(k));
    }
  }
  return c;
}

std::size_t symplectic_betti(const SymplecticComplex& s, int k) {
  const Subspace closed = kernel_basis(s.d_at(k));
  const Subspace exact = image_basis(s.d_at(k - 1));
  return quotient_dim(closed, exact);
}

TsengYauDims tseng_yau(const SymplecticComplex& s, int k) {
  TsengYauDims out;
  if (k < 0 || k > s.dim()) return out;
  const Matrix dd_lambda = s.d_at(k - 1) * s.d_lambda_at(k);
  out.plus = quotient_dim(intersect(kernel_basis(s.d_at(k)), kernel_basis(s.d_lambda_at(k))), image_basis(dd_lambda));
  out.times = quotient_dim(kernel_basis(dd_lambda),
                           sum(image_basis(s.d_at(k - 1)), image_basis(s.d_lambda_at(k + 1))));

  const DoubleComplex b = shear(s, 2);
  const Bidegree interior{k + 1, 1};
  if (bott_chern(b, interior).dim != out.plus || aeppli(b, interior).dim != out.times) {
    throw std::logic_error("Tseng-Yau dimensions disagree with the shear complex in degree " + std::to_string(k));
  }
  return out;
}

std::vector<ParityBound> check_symplectic_bound(const SymplecticComplex& s) {
  std::int64_t betti_sum = 0;
  for (int h = 0; h <= s.dim(); ++h) betti_sum += static_cast<std::int64_t>(symplectic_betti(s, h));
  std::vector<ParityBound> out;
  for (int parity = 0; parity < 2; ++parity) {
    ParityBound pb;
    pb.parity = parity;
    pb.bound = 2 * (s.dim() + 1) * betti_sum;
    for (int h = parity; h <= s.dim(); h += 2) {
      const TsengYauDims ty = tseng_yau(s, h);
      pb.plus_sum += static_cast<std::int64_t>(ty.plus);
      pb.times_sum += static_cast<std::int64_t>(ty.times);
    }
    pb.plus_slack = pb.bound - pb.plus_sum;
    pb.times_slack = pb.bound - pb.times_sum;
    out.push_back(pb);
  }
  return out;
}

bool hard_lefschetz(const SymplecticComplex& s) {
  const int n = s.half_dim();
  Form power = Form::constant(s.dim(), Scalar(1));
  for (int k = 0; k <= n; ++k) {
    const auto& src = s.bases[static_cast<std::size_t>(n - k)];
    const auto& dst = s.bases[static_cast<std::size_t>(n + k)];
    const Matrix lefschetz = operator_matrix([&](Monomial x) { return wedge(power, Form::monomial(s.dim(), x)); },
                                             src, dst);
    const Subspace src_num = kernel_basis(s.d_at(n - k));
    const Subspace src_den = image_basis(s.d_at(n - k - 1));
    const Subspace dst_num = kernel_basis(s.d_at(n + k));
    const Subspace dst_den = image_basis(s.d_at(n + k - 1));
    const std::size_t r = induced_map_rank(lefschetz, src_num, src_den, dst_num, dst_den);
    if (r != quotient_dim(src_num, src_den) || r != quotient_dim(dst_num, dst_den)) return false;
    power = wedge(power, s.omega);
  }
  return true;
}

}  // namespace ddbar
