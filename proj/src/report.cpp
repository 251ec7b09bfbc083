#include "ddbar/report.hpp"

#include <iomanip>
#include <sstream>

namespace ddbar {

using nlohmann::ordered_json;

namespace {

bool in_range(const ReportOptions& opts, int k) {
  return !opts.degrees || (k >= opts.degrees->first && k <= opts.degrees->second);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

DegreeRow degree_row(const DoubleComplex& c, int k) {
  DegreeRow row;
  if (c.top_degree()) {
    row.values = degree_report(c, k);
    row.has_S = true;
    return row;
  }
  const DegreeDims d = degree_dims(c, k);
  DegreeReport& r = row.values;
  r.k = k;
  r.betti = static_cast<std::int64_t>(d.betti);
  r.dolbeault = static_cast<std::int64_t>(d.dolbeault);
  r.conj_dolbeault = static_cast<std::int64_t>(d.conj_dolbeault);
  r.bott_chern = static_cast<std::int64_t>(d.bott_chern);
  r.aeppli = static_cast<std::int64_t>(d.aeppli);
  r.N = r.aeppli - r.bott_chern;
  r.Delta = r.aeppli + r.bott_chern - 2 * r.betti;
  return row;
}

}  // namespace

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("bad degree range \"" + text + "\" (expected k1..k2)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int k = number(text);
    return {k, k};
  }
  const int lo = number(text.substr(0, dots));
  const int hi = number(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("bad degree range \"" + text + "\" (k1 > k2)");
  return {lo, hi};
}

ComplexSection complex_section(const DoubleComplex& c, const std::optional<StructureModel>& model,
                               const ReportOptions& opts) {
  ComplexSection out;
  for (Bidegree at : c.support()) {
    BidegreeRow row;
    row.at = at;
    row.dim = c.dim(at);
    row.dolbeault = dolbeault(c, at).dim;
    row.conj_dolbeault = conj_dolbeault(c, at).dim;
    row.bott_chern = bott_chern(c, at).dim;
    row.aeppli = aeppli(c, at).dim;
    out.bidegrees.push_back(row);
  }
  const auto range = c.degree_range();
  if (range) {
    const int lo = c.top_degree() ? std::min(0, range->first) : range->first;
    const int hi = c.top_degree() ? std::max(*c.top_degree(), range->second) : range->second;
    const VarouchasTable table = varouchas(c);
    for (int k = lo; k <= hi; ++k) {
      if (!in_range(opts, k)) continue;
      out.degrees.push_back(degree_row(c, k));
      out.varouchas.emplace_back(k, table.total(k));
    }
  }
  out.lemma = lemma_verdict(c);
  if (model) out.kss = kss_property(compile(*model));
  out.strip = strip_support(c);
  return out;
}

SymplecticSection symplectic_section(const SymplecticModel& m, const ReportOptions& opts) {
  if (opts.window < 2) throw std::invalid_argument("--window must be at least 2 (an interior column is needed)");
  const SymplecticComplex s = compile_symplectic(m);
  SymplecticSection out;
  out.window = opts.window;
  const DoubleComplex sheared = shear(s, opts.window);
  out.shear_consistent = true;
  for (int k = 0; k <= s.dim(); ++k) {
    const TsengYauDims ty = tseng_yau(s, k);
    const Bidegree interior{k + 1, 1};
    if (bott_chern(sheared, interior).dim != ty.plus || aeppli(sheared, interior).dim != ty.times) {
      out.shear_consistent = false;
    }
    if (!in_range(opts, k)) continue;
    out.degrees.push_back({k, symplectic_betti(s, k), ty});
  }
  out.parity = check_symplectic_bound(s);
  out.hard_lefschetz = hard_lefschetz(s);
  return out;
}

Report build_report(const CatalogEntry& e, const ReportOptions& opts) {
  Report r;
  r.name = e.key;
  r.kind = e.kind;
  r.provenance = e.provenance;
  switch (e.kind) {
    case ModelKind::ComplexStructure: {
      const auto& m = std::get<StructureModel>(e.payload);
      r.complex = complex_section(compile(m).complex, m, opts);
      break;
    }
    case ModelKind::RawBicomplex:
      r.complex = complex_section(std::get<DoubleComplex>(e.payload), std::nullopt, opts);
      break;
    case ModelKind::Symplectic:
      r.symplectic = symplectic_section(std::get<SymplecticModel>(e.payload), opts);
      break;
  }
  return r;
}

std::string lemma_line(const LemmaVerdict& v) {
  std::string s = std::string("ddbar-lemma: ") + (v.holds() ? "holds" : "fails");
  s += " (BC->A injective: " + yes_no(v.by_natural_map) + ", all Delta^k = 0: " + yes_no(v.by_delta) +
       ", h_BC = h_A: " + yes_no(v.by_bc_equals_a) + ")";
  if (!v.agree()) s += " [criteria disagree]";
  return s;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  auto col = [&](auto v, int w = 7) -> std::ostream& { return out << std::setw(w) << v; };

  out << "model: " << r.name << " (" << to_string(r.kind) << ")\n";
  out << "provenance: " << r.provenance << "\n";

  if (r.complex) {
    const ComplexSection& c = *r.complex;
    out << "\nbidegree dimensions\n";
    out << "      p      q    dim  h_dbar  h_del   h_BC    h_A\n";
    for (const auto& b : c.bidegrees) {
      col(b.at.p);
      col(b.at.q);
      col(b.dim);
      col(b.dolbeault, 8);
      col(b.conj_dolbeault);
      col(b.bott_chern);
      col(b.aeppli);
      out << "\n";
    }
    out << "\ndegree invariants\n";
    out << "      k    b_k  h_dbar  h_del   h_BC    h_A |    S^k    N^k  Delta^k\n";
    for (const auto& row : c.degrees) {
      const DegreeReport& d = row.values;
      col(d.k);
      col(d.betti);
      col(d.dolbeault, 8);
      col(d.conj_dolbeault);
      col(d.bott_chern);
      col(d.aeppli);
      out << " |";
      if (row.has_S) {
        col(d.S);
      } else {
        col("-");
      }
      col(d.N);
      col(d.Delta, 9);
      out << "\n";
    }
    out << "\nVarouchas totals\n";
    out << "      k      a      b      c      d      e      f\n";
    for (const auto& [k, v] : c.varouchas) {
      col(k);
      col(v.a);
      col(v.b);
      col(v.c);
      col(v.d);
      col(v.e);
      col(v.f);
      out << "\n";
    }
    out << "\n" << lemma_line(c.lemma) << "\n";
    if (c.kss) out << "KSS pairing non-degenerate: " << yes_no(*c.kss) << "\n";
    if (c.strip) {
      out << "strip support: l = " << c.strip->slope << ", N = " << c.strip->width << "\n";
    } else {
      out << "strip support: none\n";
    }
  }

  if (r.symplectic) {
    const SymplecticSection& s = *r.symplectic;
    out << "\nsymplectic cohomologies\n";
    out << "      k    b_k  d+dL   ddL\n";
    for (const auto& row : s.degrees) {
      col(row.k);
      col(row.betti);
      col(row.dims.plus, 6);
      col(row.dims.times, 6);
      out << "\n";
    }
    out << "\nparity bounds (bound = 2(2n+1) sum b_k)\n";
    out << " parity  d+dL   ddL  bound  slack(d+dL)  slack(ddL)  holds\n";
    for (const auto& p : s.parity) {
      col(p.parity);
      col(p.plus_sum, 6);
      col(p.times_sum, 6);
      col(p.bound);
      col(p.plus_slack, 13);
      col(p.times_slack, 12);
      col(yes_no(p.holds()));
      out << "\n";
    }
    out << "\nHard Lefschetz: " << yes_no(s.hard_lefschetz) << "\n";
    out << "shear window " << s.window << " agrees at column (k+1,1): " << yes_no(s.shear_consistent) << "\n";
  }
  return out.str();
}

ordered_json render_json(const Report& r) {
  ordered_json j;
  j["name"] = r.name;
  j["kind"] = to_string(r.kind);
  j["provenance"] = r.provenance;
  if (r.complex) {
    const ComplexSection& c = *r.complex;
    ordered_json bidegrees = ordered_json::array();
    for (const auto& b : c.bidegrees) {
      bidegrees.push_back({{"p", b.at.p},
                           {"q", b.at.q},
                           {"dim", b.dim},
                           {"dolbeault", b.dolbeault},
                           {"conj_dolbeault", b.conj_dolbeault},
                           {"bott_chern", b.bott_chern},
                           {"aeppli", b.aeppli}});
    }
    ordered_json degrees = ordered_json::array();
    for (const auto& row : c.degrees) {
      const DegreeReport& d = row.values;
      ordered_json item = {{"k", d.k},
                           {"betti", d.betti},
                           {"dolbeault", d.dolbeault},
                           {"conj_dolbeault", d.conj_dolbeault},
                           {"bott_chern", d.bott_chern},
                           {"aeppli", d.aeppli}};
      item["S"] = row.has_S ? ordered_json(d.S) : ordered_json(nullptr);
      item["N"] = d.N;
      item["Delta"] = d.Delta;
      degrees.push_back(std::move(item));
    }
    ordered_json varouchas = ordered_json::array();
    for (const auto& [k, v] : c.varouchas) {
      varouchas.push_back({{"k", k}, {"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"e", v.e}, {"f", v.f}});
    }
    ordered_json section;
    section["bidegrees"] = std::move(bidegrees);
    section["degrees"] = std::move(degrees);
    section["varouchas"] = std::move(varouchas);
    section["lemma"] = {{"holds", c.lemma.holds()},
                        {"natural_map_injective", c.lemma.by_natural_map},
                        {"delta_vanishes", c.lemma.by_delta},
                        {"bott_chern_equals_aeppli", c.lemma.by_bc_equals_a},
                        {"criteria_agree", c.lemma.agree()}};
    section["kss"] = c.kss ? ordered_json(*c.kss) : ordered_json(nullptr);
    section["strip"] = c.strip ? ordered_json{{"l", c.strip->slope}, {"N", c.strip->width}} : ordered_json(nullptr);
    j["complex"] = std::move(section);
  }
  if (r.symplectic) {
    const SymplecticSection& s = *r.symplectic;
    ordered_json degrees = ordered_json::array();
    for (const auto& row : s.degrees) {
      degrees.push_back({{"k", row.k}, {"betti", row.betti}, {"plus", row.dims.plus}, {"times", row.dims.times}});
    }
    ordered_json parity = ordered_json::array();
    for (const auto& p : s.parity) {
      parity.push_back({{"parity", p.parity},
                        {"plus_sum", p.plus_sum},
                        {"times_sum", p.times_sum},
                        {"bound", p.bound},
                        {"plus_slack", p.plus_slack},
                        {"times_slack", p.times_slack},
                        {"holds", p.holds()}});
    }
    ordered_json section;
    section["window"] = s.window;
    section["degrees"] = std::move(degrees);
    section["parity"] = std::move(parity);
    section["hard_lefschetz"] = s.hard_lefschetz;
    section["shear_consistent"] = s.shear_consistent;
    j["symplectic"] = std::move(section);
  }
  return j;
}

}  // namespace ddbar
