#include "ddbar/liemodel.hpp"

#include <bit>
#include <charconv>

namespace ddbar {

Generator parse_generator(std::string_view token, int n) {
  Generator g;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == 'c') {
    g.conjugate = true;
    digits.remove_prefix(1);
  }
  int index = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || index < 1 || index > n) {
    throw ModelError("bad generator \"" + std::string(token) + "\" (expected 1.." + std::to_string(n) +
                     ", optionally prefixed by 'c')");
  }
  g.index = index - 1;
  return g;
}

std::string generator_token(Generator g) { return (g.conjugate ? "c" : "") + std::to_string(g.index + 1); }

namespace {

int bit_of(Generator g, int n) { return g.conjugate ? n + g.index : g.index; }

std::string generator_name(Generator g) {
  return std::string(g.conjugate ? "phibar^" : "phi^") + std::to_string(g.index + 1);
}

}  // namespace

OddDerivation model_differential(const StructureModel& m) {
  if (m.n <= 0 || 2 * m.n > 30) throw ModelError("complex dimension must be in 1..15");
  if (static_cast<int>(m.equations.size()) > m.n) throw ModelError("more structure equations than generators");
  const int g = 2 * m.n;
  std::vector<Form> images(static_cast<std::size_t>(g), Form(g));
  for (std::size_t i = 0; i < m.equations.size(); ++i) {
    Form holo(g);
    Form anti(g);
    for (const auto& t : m.equations[i]) {
      const Generator a = t.first;
      const Generator b = t.second;
      const Generator abar{a.index, !a.conjugate};
      const Generator bbar{b.index, !b.conjugate};
      holo += wedge(Form::generator(g, bit_of(a, m.n), t.coeff), Form::generator(g, bit_of(b, m.n)));
      anti += wedge(Form::generator(g, bit_of(abar, m.n), t.coeff.conj()), Form::generator(g, bit_of(bbar, m.n)));
    }
    images[i] = std::move(holo);
    images[static_cast<std::size_t>(m.n) + i] = std::move(anti);
  }
  return OddDerivation(std::move(images));
}

Bidegree CompiledModel::bidegree_of(Monomial m) const {
  const Monomial holo_mask = (Monomial{1} << n()) - 1;
  return {std::popcount(m & holo_mask), std::popcount(m >> n())};
}

std::vector<Scalar> CompiledModel::coordinates(const Form& f, Bidegree at) const {
  const auto it = bases.find(at);
  if (it == bases.end()) {
    if (f.is_zero()) return {};
    throw DimensionMismatch("no forms of bidegree " + to_string(at));
  }
  return ddbar::coordinates(f, it->second);
}

Form CompiledModel::form(Bidegree at, std::span<const Scalar> coords) const {
  const auto it = bases.find(at);
  if (it == bases.end()) return Form(generators());
  return from_coordinates(generators(), it->second, coords);
}

namespace {

std::optional<std::string> generator_failure(const StructureModel& m, const OddDerivation& d, bool integrability) {
  const int n = m.n;
  const Monomial holo_mask = (Monomial{1} << n) - 1;
  for (int i = 0; i < 2 * n; ++i) {
    const Generator gen{i % n, i >= n};
    if (!integrability && !d(d.on_generator(i)).is_zero()) return "d^2 != 0 on " + generator_name(gen);
    if (integrability && i < n) {
      for (const auto& [mono, c] : d.on_generator(i).terms()) {
        if ((mono & holo_mask) == 0) {
          return "d " + generator_name(gen) + " has a (0,2) component (non-integrable structure)";
        }
      }
    }
  }
  return std::nullopt;
}

CompiledModel build(const StructureModel& m, OddDerivation d) {
  CompiledModel out;
  out.model = m;
  out.d = std::move(d);
  const int n = m.n;
  const int g = 2 * n;

  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      std::vector<Monomial> basis;
      const auto holo = monomials_of_degree(n, p);
      const auto anti = monomials_of_degree(n, q);
      for (Monomial i : holo) {
        for (Monomial j : anti) basis.push_back(i | (j << n));
      }
      out.complex.set_dim({p, q}, basis.size());
      out.bases.emplace(Bidegree{p, q}, std::move(basis));
    }
  }

  auto component = [&](Monomial mono, Bidegree want) {
    Form keep(g);
    const Form image = out.d.apply(mono);
    for (const auto& [t, c] : image.terms()) {
      if (out.bidegree_of(t) == want) keep.add_term(t, c);
    }
    return keep;
  };
  const Monomial holo_mask = (Monomial{1} << n) - 1;
  for (const auto& [at, basis] : out.bases) {
    const Bidegree right{at.p + 1, at.q};
    const Bidegree up{at.p, at.q + 1};
    if (out.bases.count(right)) {
      out.complex.set_del(at, operator_matrix([&](Monomial x) { return component(x, right); }, basis,
                                              out.bases.at(right)));
    }
    if (out.bases.count(up)) {
      out.complex.set_delbar(at, operator_matrix([&](Monomial x) { return component(x, up); }, basis,
                                                 out.bases.at(up)));
    }
    // conj(phi^I ^ phibar^J) = (-1)^{|I||J|} phi^J ^ phibar^I
    const Scalar sign = (at.p * at.q) % 2 == 0 ? Scalar(1) : Scalar(-1);
    out.complex.set_conjugation(
        at, operator_matrix(
                [&](Monomial x) {
                  const Monomial swapped = (x >> n) | ((x & holo_mask) << n);
                  return Form::monomial(g, swapped, sign);
                },
                basis, out.bases.at({at.q, at.p})));
  }
  out.complex.set_top_degree(2 * n);
  return out;
}

}  // namespace

std::vector<CheckResult> check_structure(const StructureModel& m) {
  std::vector<CheckResult> out;
  std::optional<OddDerivation> d;
  try {
    d = model_differential(m);
    out.push_back({"well-formed model", true, {}});
  } catch (const ModelError& e) {
    out.push_back({"well-formed model", false, e.what()});
    return out;
  }
  const auto d2 = generator_failure(m, *d, false);
  out.push_back({"d d = 0 on generators", !d2, d2.value_or("")});
  const auto integrable = generator_failure(m, *d, true);
  out.push_back({"integrable (no (0,2) part in d phi^i)", !integrable, integrable.value_or("")});
  if (d2 || integrable) return out;

  const CompiledModel compiled = build(m, *d);
  for (auto& r : check_identities(compiled.complex)) out.push_back(std::move(r));
  const auto stokes = stokes_violation(compiled);
  out.push_back({"Stokes (top-degree exact forms integrate to 0)", !stokes, stokes ? "fails" : ""});
  return out;
}

CompiledModel compile(const StructureModel& m) {
  OddDerivation d = model_differential(m);
  if (auto failure = generator_failure(m, d, false)) throw ModelError(*failure);
  if (auto failure = generator_failure(m, d, true)) throw ModelError(*failure);
  CompiledModel out = build(m, std::move(d));
  validate(out.complex);
  return out;
}

Form wedge_forms(const Form& a, const Form& b) { return wedge(a, b); }

Scalar integrate(const CompiledModel& m, const Form& f) { return f.coefficient(m.top_monomial()); }

namespace {

Form shifted_component(const CompiledModel& m, const Form& f, int dp, int dq) {
  Form out(m.generators());
  for (const auto& [mono, c] : f.terms()) {
    const Bidegree from = m.bidegree_of(mono);
    const Form image = m.d.apply(mono);
    for (const auto& [t, coeff] : image.terms()) {
      const Bidegree to = m.bidegree_of(t);
      if (to.p == from.p + dp && to.q == from.q + dq) out.add_term(t, coeff * c);
    }
  }
  return out;
}

}  // namespace

Form del(const CompiledModel& m, const Form& f) { return shifted_component(m, f, 1, 0); }
Form delbar(const CompiledModel& m, const Form& f) { return shifted_component(m, f, 0, 1); }

std::optional<Monomial> stokes_violation(const CompiledModel& m) {
  for (Monomial eta : monomials_of_degree(m.generators(), m.generators() - 1)) {
    if (!integrate(m, m.d.apply(eta)).is_zero()) return eta;
  }
  return std::nullopt;
}

std::vector<Form> bott_chern_representatives(const CompiledModel& m, int k) {
  std::vector<Form> reps;
  for (Bidegree at : m.complex.support_in_degree(k)) {
    const CohomologySpace h = bott_chern(m.complex, at);
    const Matrix cols = quotient_representatives(h.numerator, h.denominator);
    for (std::size_t j = 0; j < cols.cols(); ++j) {
      const auto v = cols.column(j);
      reps.push_back(m.form(at, v));
    }
  }
  return reps;
}

PairingMatrix kss_pairing(const CompiledModel& m, int k) {
  if (const auto bad = stokes_violation(m)) {
    throw ModelError("Stokes check fails (d of a top-minus-one form integrates to nonzero); "
                     "the pairing does not descend to cohomology");
  }
  const auto left = bott_chern_representatives(m, k);
  const auto right = bott_chern_representatives(m, m.generators() - k);
  PairingMatrix out{k, Matrix(left.size(), right.size())};
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) out.entries(i, j) = integrate(m, wedge(left[i], right[j]));
  }
  return out;
}

bool kss_property(const CompiledModel& m) {
  for (int k = 0; k <= m.generators(); ++k) {
    const PairingMatrix pm = kss_pairing(m, k);
    if (pm.entries.rows() != pm.entries.cols() || rank(pm.entries) != pm.entries.rows()) return false;
  }
  return true;
}

}  // namespace ddbar
