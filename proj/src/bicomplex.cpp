#include "ddbar/bicomplex.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>

namespace ddbar {

std::string to_string(Bidegree b) { return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")"; }

namespace {

Bidegree shift(Bidegree b, int dp, int dq) { return {b.p + dp, b.q + dq}; }

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what, Bidegree at) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(std::string(what) + " at " + to_string(at) + " has shape " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix lookup(const std::map<Bidegree, Matrix>& table, Bidegree at, std::size_t rows, std::size_t cols) {
  const auto it = table.find(at);
  if (it == table.end()) return Matrix(rows, cols);
  return it->second;
}

}  // namespace

void DoubleComplex::set_dim(Bidegree at, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(at);
  } else {
    dims_[at] = dim;
  }
}

void DoubleComplex::set_del(Bidegree from, Matrix m) {
  check_shape(m, dim(shift(from, 1, 0)), dim(from), "del", from);
  del_[from] = std::move(m);
}

void DoubleComplex::set_delbar(Bidegree from, Matrix m) {
  check_shape(m, dim(shift(from, 0, 1)), dim(from), "delbar", from);
  delbar_[from] = std::move(m);
}

void DoubleComplex::set_conjugation(Bidegree from, Matrix m) {
  check_shape(m, dim({from.q, from.p}), dim(from), "conjugation", from);
  conj_[from] = std::move(m);
  has_conjugation_ = true;
}

std::size_t DoubleComplex::dim(Bidegree at) const {
  const auto it = dims_.find(at);
  return it == dims_.end() ? 0 : it->second;
}

Matrix DoubleComplex::del(Bidegree from) const {
  return lookup(del_, from, dim(shift(from, 1, 0)), dim(from));
}

Matrix DoubleComplex::delbar(Bidegree from) const {
  return lookup(delbar_, from, dim(shift(from, 0, 1)), dim(from));
}

Matrix DoubleComplex::del_delbar(Bidegree from) const { return del(shift(from, 0, 1)) * delbar(from); }

Matrix DoubleComplex::conjugation(Bidegree from) const {
  return lookup(conj_, from, dim({from.q, from.p}), dim(from));
}

std::vector<Bidegree> DoubleComplex::support() const {
  std::vector<Bidegree> out;
  for (const auto& [b, d] : dims_) out.push_back(b);
  return out;
}

std::vector<Bidegree> DoubleComplex::support_in_degree(int k) const {
  std::vector<Bidegree> out;
  for (const auto& [b, d] : dims_) {
    if (b.total() == k) out.push_back(b);
  }
  return out;
}

std::optional<std::pair<int, int>> DoubleComplex::degree_range() const {
  if (dims_.empty()) return std::nullopt;
  int lo = INT_MAX;
  int hi = INT_MIN;
  for (const auto& [b, d] : dims_) {
    lo = std::min(lo, b.total());
    hi = std::max(hi, b.total());
  }
  return std::pair{lo, hi};
}

std::vector<CheckResult> check_identities(const DoubleComplex& c) {
  std::vector<CheckResult> out;
  auto run = [&](std::string name, const std::function<std::optional<std::string>(Bidegree)>& at) {
    CheckResult r{std::move(name), true, {}};
    for (Bidegree b : c.support()) {
      if (auto failure = at(b)) {
        r.ok = false;
        r.detail = "fails at " + to_string(b) + (failure->empty() ? "" : ": " + *failure);
        break;
      }
    }
    out.push_back(std::move(r));
  };

  {
    CheckResult shapes{"matrix shapes", true, {}};
    auto verify = [&](const std::map<Bidegree, Matrix>& table, const char* what, int dp, int dq, bool mirror) {
      for (const auto& [b, m] : table) {
        const Bidegree target = mirror ? Bidegree{b.q, b.p} : shift(b, dp, dq);
        if (shapes.ok && (m.rows() != c.dim(target) || m.cols() != c.dim(b))) {
          shapes.ok = false;
          shapes.detail = std::string(what) + " at " + to_string(b) + " has shape " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + ", expected " + std::to_string(c.dim(target)) + "x" +
                          std::to_string(c.dim(b));
        }
      }
    };
    verify(c.del_entries(), "del", 1, 0, false);
    verify(c.delbar_entries(), "delbar", 0, 1, false);
    verify(c.conjugation_entries(), "conjugation", 0, 0, true);
    const bool ok = shapes.ok;
    out.push_back(std::move(shapes));
    if (!ok) return out;
  }

  run("del del = 0", [&](Bidegree b) -> std::optional<std::string> {
    if ((c.del(shift(b, 1, 0)) * c.del(b)).is_zero()) return std::nullopt;
    return std::string();
  });
  run("delbar delbar = 0", [&](Bidegree b) -> std::optional<std::string> {
    if ((c.delbar(shift(b, 0, 1)) * c.delbar(b)).is_zero()) return std::nullopt;
    return std::string();
  });
  run("del delbar + delbar del = 0", [&](Bidegree b) -> std::optional<std::string> {
    if ((c.del(shift(b, 0, 1)) * c.delbar(b) + c.delbar(shift(b, 1, 0)) * c.del(b)).is_zero()) {
      return std::nullopt;
    }
    return std::string();
  });
  if (c.has_conjugation()) {
    run("sigma sigma = id", [&](Bidegree b) -> std::optional<std::string> {
      const Bidegree mirror{b.q, b.p};
      if (c.dim(mirror) != c.dim(b)) return std::string("dim (p,q) != dim (q,p)");
      if (c.conjugation(mirror) * c.conjugation(b).conj() == Matrix::identity(c.dim(b))) return std::nullopt;
      return std::string();
    });
    run("sigma del = delbar sigma", [&](Bidegree b) -> std::optional<std::string> {
      const Matrix lhs = c.conjugation(shift(b, 1, 0)) * c.del(b).conj();
      const Matrix rhs = c.delbar({b.q, b.p}) * c.conjugation(b);
      if (lhs == rhs) return std::nullopt;
      return std::string();
    });
  }
  return out;
}

void validate(const DoubleComplex& c) {
  for (const auto& r : check_identities(c)) {
    if (!r.ok) throw ValidationError(r.identity + " " + r.detail);
  }
}

DoubleComplex change_basis(const DoubleComplex& c, const std::map<Bidegree, Matrix>& basis_change) {
  auto forward = [&](Bidegree b) {
    const auto it = basis_change.find(b);
    return it == basis_change.end() ? Matrix::identity(c.dim(b)) : it->second;
  };
  std::map<Bidegree, Matrix> backward;
  for (Bidegree b : c.support()) backward.emplace(b, inverse(forward(b)));
  auto back = [&](Bidegree b) {
    const auto it = backward.find(b);
    return it == backward.end() ? Matrix(0, 0) : it->second;
  };

  DoubleComplex out;
  for (const auto& [b, d] : c.dims()) out.set_dim(b, d);
  out.set_top_degree(c.top_degree());
  for (Bidegree b : c.support()) {
    out.set_del(b, forward(shift(b, 1, 0)) * c.del(b) * back(b));
    out.set_delbar(b, forward(shift(b, 0, 1)) * c.delbar(b) * back(b));
    if (c.has_conjugation()) {
      out.set_conjugation(b, forward({b.q, b.p}) * c.conjugation(b) * back(b).conj());
    }
  }
  if (c.has_conjugation()) out.enable_conjugation();
  return out;
}

CohomologySpace dolbeault(const DoubleComplex& c, Bidegree at) {
  Subspace num = kernel_basis(c.delbar(at));
  Subspace den = image_basis(c.delbar(shift(at, 0, -1)));
  const std::size_t dim = quotient_dim(num, den);
  if (dim != dolbeault_dim_by_ranks(c, at)) {
    throw std::logic_error("Dolbeault dimension disagrees with rank-nullity at " + to_string(at));
  }
  return {std::move(num), std::move(den), dim};
}

CohomologySpace conj_dolbeault(const DoubleComplex& c, Bidegree at) {
  Subspace num = kernel_basis(c.del(at));
  Subspace den = image_basis(c.del(shift(at, -1, 0)));
  const std::size_t dim = quotient_dim(num, den);
  return {std::move(num), std::move(den), dim};
}

CohomologySpace bott_chern(const DoubleComplex& c, Bidegree at) {
  Subspace num = intersect(kernel_basis(c.del(at)), kernel_basis(c.delbar(at)));
  Subspace den = image_basis(c.del_delbar(shift(at, -1, -1)));
  const std::size_t dim = quotient_dim(num, den);
  return {std::move(num), std::move(den), dim};
}

CohomologySpace aeppli(const DoubleComplex& c, Bidegree at) {
  Subspace num = kernel_basis(c.del_delbar(at));
  Subspace den = sum(image_basis(c.del(shift(at, -1, 0))), image_basis(c.delbar(shift(at, 0, -1))));
  const std::size_t dim = quotient_dim(num, den);
  return {std::move(num), std::move(den), dim};
}

std::size_t dolbeault_dim_by_ranks(const DoubleComplex& c, Bidegree at) {
  return c.dim(at) - rank(c.delbar(at)) - rank(c.delbar(shift(at, 0, -1)));
}

std::size_t bott_chern_dim_by_ranks(const DoubleComplex& c, Bidegree at) {
  const std::size_t closed = c.dim(at) - rank(c.del(at).vconcat(c.delbar(at)));
  return closed - rank(c.del_delbar(shift(at, -1, -1)));
}

std::size_t aeppli_dim_by_ranks(const DoubleComplex& c, Bidegree at) {
  const std::size_t closed = c.dim(at) - rank(c.del_delbar(at));
  return closed - rank(c.del(shift(at, -1, 0)).hconcat(c.delbar(shift(at, 0, -1))));
}

std::size_t TotalDegree::offset(Bidegree b) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == b) return offsets[i];
  }
  throw std::out_of_range("bidegree " + to_string(b) + " not in total degree");
}

namespace {

struct Layout {
  TotalDegree tot;
  std::map<Bidegree, std::size_t> offsets;
};

Layout layout(const DoubleComplex& c, int k) {
  Layout l;
  for (Bidegree b : c.support_in_degree(k)) {
    l.tot.blocks.push_back(b);
    l.tot.offsets.push_back(l.tot.dim);
    l.offsets[b] = l.tot.dim;
    l.tot.dim += c.dim(b);
  }
  return l;
}

void place(Matrix& target, const Matrix& block, std::size_t row0, std::size_t col0) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t col = 0; col < block.cols(); ++col) {
      if (!block(r, col).is_zero()) target(row0 + r, col0 + col) += block(r, col);
    }
  }
}

/// Direct sum of per-bidegree subspaces, embedded block-wise in Tot^k.
Subspace direct_sum(const DoubleComplex& c, int k, const std::function<Subspace(Bidegree)>& piece) {
  const Layout l = layout(c, k);
  std::vector<Subspace> parts;
  std::size_t cols = 0;
  for (Bidegree b : l.tot.blocks) {
    parts.push_back(piece(b));
    cols += parts.back().dim();
  }
  Matrix basis(l.tot.dim, cols);
  std::size_t col = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    place(basis, parts[i].basis(), l.offsets.at(l.tot.blocks[i]), col);
    col += parts[i].dim();
  }
  return Subspace(std::move(basis));
}

}  // namespace

TotalDegree total_degree(const DoubleComplex& c, int k) { return layout(c, k).tot; }

Matrix total_differential(const DoubleComplex& c, int k) {
  const Layout src = layout(c, k);
  const Layout dst = layout(c, k + 1);
  Matrix d(dst.tot.dim, src.tot.dim);
  for (Bidegree b : src.tot.blocks) {
    const std::size_t col0 = src.offsets.at(b);
    if (const auto it = dst.offsets.find(shift(b, 1, 0)); it != dst.offsets.end()) {
      place(d, c.del(b), it->second, col0);
    }
    if (const auto it = dst.offsets.find(shift(b, 0, 1)); it != dst.offsets.end()) {
      place(d, c.delbar(b), it->second, col0);
    }
  }
  return d;
}

CohomologySpace de_rham(const DoubleComplex& c, int k) {
  Subspace num = kernel_basis(total_differential(c, k));
  Subspace den = image_basis(total_differential(c, k - 1));
  const std::size_t dim = quotient_dim(num, den);
  return {std::move(num), std::move(den), dim};
}

VarouchasDims& VarouchasDims::operator+=(const VarouchasDims& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  e += o.e;
  f += o.f;
  return *this;
}

VarouchasDims VarouchasTable::get(Bidegree b) const {
  const auto it = at.find(b);
  return it == at.end() ? VarouchasDims{} : it->second;
}

VarouchasDims VarouchasTable::total(int k) const {
  VarouchasDims sum_k;
  for (const auto& [b, v] : at) {
    if (b.total() == k) sum_k += v;
  }
  return sum_k;
}

VarouchasDims varouchas_at(const DoubleComplex& c, Bidegree at) {
  const Subspace im_del = image_basis(c.del(shift(at, -1, 0)));
  const Subspace im_delbar = image_basis(c.delbar(shift(at, 0, -1)));
  const Subspace im_dd = image_basis(c.del_delbar(shift(at, -1, -1)));
  const Subspace ker_del = kernel_basis(c.del(at));
  const Subspace ker_delbar = kernel_basis(c.delbar(at));
  const Subspace ker_dd = kernel_basis(c.del_delbar(at));

  VarouchasDims v;
  v.a = quotient_dim(intersect(im_delbar, im_del), im_dd);
  v.b = quotient_dim(intersect(ker_delbar, im_del), im_dd);
  v.c = quotient_dim(ker_dd, sum(ker_delbar, im_del));
  v.d = quotient_dim(intersect(im_delbar, ker_del), im_dd);
  v.e = quotient_dim(ker_dd, sum(ker_del, im_delbar));
  v.f = quotient_dim(ker_dd, sum(ker_delbar, ker_del));
  return v;
}

VarouchasTable varouchas(const DoubleComplex& c) {
  VarouchasTable t;
  for (Bidegree b : c.support()) t.at.emplace(b, varouchas_at(c, b));
  return t;
}

NaturalMapRanks natural_map_ranks(const DoubleComplex& c, int k) {
  const std::size_t n = total_degree(c, k).dim;
  const Matrix id = Matrix::identity(n);

  const Subspace bc_num = direct_sum(c, k, [&](Bidegree b) { return bott_chern(c, b).numerator; });
  const Subspace bc_den = direct_sum(c, k, [&](Bidegree b) { return bott_chern(c, b).denominator; });
  const Subspace dol_num = direct_sum(c, k, [&](Bidegree b) { return dolbeault(c, b).numerator; });
  const Subspace dol_den = direct_sum(c, k, [&](Bidegree b) { return dolbeault(c, b).denominator; });
  const Subspace cdol_num = direct_sum(c, k, [&](Bidegree b) { return conj_dolbeault(c, b).numerator; });
  const Subspace cdol_den = direct_sum(c, k, [&](Bidegree b) { return conj_dolbeault(c, b).denominator; });
  const Subspace a_num = direct_sum(c, k, [&](Bidegree b) { return aeppli(c, b).numerator; });
  const Subspace a_den = direct_sum(c, k, [&](Bidegree b) { return aeppli(c, b).denominator; });
  const CohomologySpace dr = de_rham(c, k);

  NaturalMapRanks r;
  r.bc_to_dolbeault = induced_map_rank(id, bc_num, bc_den, dol_num, dol_den);
  r.bc_to_conj_dolbeault = induced_map_rank(id, bc_num, bc_den, cdol_num, cdol_den);
  r.bc_to_de_rham = induced_map_rank(id, bc_num, bc_den, dr.numerator, dr.denominator);
  r.dolbeault_to_aeppli = induced_map_rank(id, dol_num, dol_den, a_num, a_den);
  r.conj_dolbeault_to_aeppli = induced_map_rank(id, cdol_num, cdol_den, a_num, a_den);
  r.de_rham_to_aeppli = induced_map_rank(id, dr.numerator, dr.denominator, a_num, a_den);
  r.bc_to_aeppli = induced_map_rank(id, bc_num, bc_den, a_num, a_den);
  return r;
}

DegreeDims degree_dims(const DoubleComplex& c, int k) {
  DegreeDims d;
  for (Bidegree b : c.support_in_degree(k)) {
    d.dolbeault += dolbeault(c, b).dim;
    d.conj_dolbeault += conj_dolbeault(c, b).dim;
    d.bott_chern += bott_chern(c, b).dim;
    d.aeppli += aeppli(c, b).dim;
  }
  d.betti = de_rham(c, k).dim;
  return d;
}

std::optional<Strip> strip_support(const DoubleComplex& c) {
  const auto points = c.support();
  if (points.empty()) return Strip{0, 0};
  int reach = 0;
  for (Bidegree b : points) reach = std::max({reach, std::abs(b.p), std::abs(b.q)});
  std::optional<Strip> best;
  for (int slope = 0; slope <= 2 * reach + 1; ++slope) {
    int lo = INT_MAX;
    int hi = INT_MIN;
    for (Bidegree b : points) {
      lo = std::min(lo, b.p - slope * b.q);
      hi = std::max(hi, b.p - slope * b.q);
    }
    if (lo < 0) continue;
    const int width = std::max(hi, slope);
    if (!best || width <= best->width) best = Strip{slope, width};
  }
  return best;
}

}  // namespace ddbar
