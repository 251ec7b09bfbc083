#include "ddbar/exterior.hpp"

#include <bit>
#include <unordered_map>

namespace ddbar {

int monomial_degree(Monomial m) { return std::popcount(m); }

int wedge_sign(Monomial a, Monomial b) {
  if ((a & b) != 0) return 0;
  // Each generator of b must move past the generators of a with larger index.
  int swaps = 0;
  for (Monomial rest = b; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(a >> (bit + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

std::vector<Monomial> monomials_of_degree(int generators, int k) {
  std::vector<Monomial> out;
  if (k < 0 || k > generators) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Monomial m = 0;
    for (int i : idx) m |= Monomial{1} << i;
    out.push_back(m);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == generators - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

Form Form::monomial(int generators, Monomial m, Scalar coeff) {
  Form f(generators);
  f.add_term(m, coeff);
  return f;
}

Form Form::generator(int generators, int index, Scalar coeff) {
  return monomial(generators, Monomial{1} << index, std::move(coeff));
}

Scalar Form::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Form::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  if (generators_ == 0) generators_ = o.generators_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

Form wedge(const Form& a, const Form& b) {
  Form out(std::max(a.generators(), b.generators()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

OddDerivation::OddDerivation(std::vector<Form> generator_images) : images_(std::move(generator_images)) {}

Form OddDerivation::apply(Monomial m) const {
  const int g = generators();
  Form out(g);
  Monomial prefix = 0;
  int position = 0;
  for (Monomial rest = m; rest != 0; rest &= rest - 1, ++position) {
    const int bit = std::countr_zero(rest);
    const Monomial suffix = (rest & (rest - 1));
    const Form& image = images_[static_cast<std::size_t>(bit)];
    if (!image.is_zero()) {
      Form term = wedge(wedge(Form::monomial(g, prefix), image), Form::monomial(g, suffix));
      if (position % 2 == 1) term = -term;
      out += term;
    }
    prefix |= Monomial{1} << bit;
  }
  return out;
}

Form OddDerivation::operator()(const Form& f) const {
  Form out(generators());
  for (const auto& [m, c] : f.terms()) out += apply(m) * c;
  return out;
}

std::vector<Scalar> coordinates(const Form& f, std::span<const Monomial> basis) {
  std::vector<Scalar> v(basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto it = f.terms().find(basis[i]);
    if (it != f.terms().end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != f.terms().size()) throw DimensionMismatch("form has terms outside the coordinate basis");
  return v;
}

Form from_coordinates(int generators, std::span<const Monomial> basis, std::span<const Scalar> coords) {
  if (basis.size() != coords.size()) throw DimensionMismatch("coordinate length mismatch");
  Form f(generators);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

Matrix operator_matrix(const std::function<Form(Monomial)>& op, std::span<const Monomial> source,
                       std::span<const Monomial> target) {
  std::unordered_map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);
  Matrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Form image = op(source[c]);
    for (const auto& [mono, coeff] : image.terms()) {
      const auto it = row_of.find(mono);
      if (it == row_of.end()) throw DimensionMismatch("operator image has terms outside the target basis");
      m(it->second, c) = coeff;
    }
  }
  return m;
}

}  // namespace ddbar
