#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ddbar/report.hpp"

using namespace ddbar;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_after(const std::string& text, const std::string& header, std::size_t count) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line) && line != header) {
  }
  std::getline(in, line);  // column titles
  std::vector<std::string> out;
  while (out.size() < count && std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) {
    if (w != "|") out.push_back(w);
  }
  return out;
}

std::string num(const nlohmann::ordered_json& v) { return v.is_null() ? "-" : v.dump(); }

}  // namespace

TEST_CASE("golden text for iwasawa") {
  CHECK(render_text(build_report(*find_builtin("iwasawa"))) == slurp(GOLDEN_DIR "/report_iwasawa.txt"));
}

TEST_CASE("golden json for iwasawa") {
  CHECK(render_json(build_report(*find_builtin("iwasawa"))).dump(2) + "\n" == slurp(GOLDEN_DIR "/report_iwasawa.json"));
}

TEST_CASE("text and json carry the same numbers") {
  for (const auto& e : builtins()) {
    CAPTURE(e.key);
    const Report r = build_report(e);
    const std::string text = render_text(r);
    const auto j = render_json(r);
    if (r.complex) {
      const auto& degrees = j["complex"]["degrees"];
      const auto rows = lines_after(text, "degree invariants", degrees.size());
      REQUIRE(rows.size() == degrees.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& d = degrees[i];
        CHECK(words(rows[i]) == std::vector<std::string>{num(d["k"]), num(d["betti"]), num(d["dolbeault"]),
                                                          num(d["conj_dolbeault"]), num(d["bott_chern"]),
                                                          num(d["aeppli"]), num(d["S"]), num(d["N"]),
                                                          num(d["Delta"])});
      }
      const auto& bideg = j["complex"]["bidegrees"];
      const auto brows = lines_after(text, "bidegree dimensions", bideg.size());
      for (std::size_t i = 0; i < brows.size(); ++i) {
        const auto& b = bideg[i];
        CHECK(words(brows[i]) == std::vector<std::string>{num(b["p"]), num(b["q"]), num(b["dim"]),
                                                           num(b["dolbeault"]), num(b["conj_dolbeault"]),
                                                           num(b["bott_chern"]), num(b["aeppli"])});
      }
      const auto& var = j["complex"]["varouchas"];
      const auto vrows = lines_after(text, "Varouchas totals", var.size());
      for (std::size_t i = 0; i < vrows.size(); ++i) {
        const auto& v = var[i];
        CHECK(words(vrows[i]) == std::vector<std::string>{num(v["k"]), num(v["a"]), num(v["b"]), num(v["c"]),
                                                           num(v["d"]), num(v["e"]), num(v["f"])});
      }
    }
    if (r.symplectic) {
      const auto& degrees = j["symplectic"]["degrees"];
      const auto rows = lines_after(text, "symplectic cohomologies", degrees.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& d = degrees[i];
        CHECK(words(rows[i]) ==
              std::vector<std::string>{num(d["k"]), num(d["betti"]), num(d["plus"]), num(d["times"])});
      }
      const auto& parity = j["symplectic"]["parity"];
      const auto prows = lines_after(text, "parity bounds (bound = 2(2n+1) sum b_k)", parity.size());
      for (std::size_t i = 0; i < prows.size(); ++i) {
        const auto& p = parity[i];
        CHECK(words(prows[i]) == std::vector<std::string>{num(p["parity"]), num(p["plus_sum"]), num(p["times_sum"]),
                                                           num(p["bound"]), num(p["plus_slack"]),
                                                           num(p["times_slack"]), num(p["holds"])});
      }
    }
  }
}

TEST_CASE("degree range option") {
  CHECK(parse_degree_range("1..5") == std::pair{1, 5});
  CHECK(parse_degree_range("3") == std::pair{3, 3});
  CHECK_THROWS_AS(parse_degree_range("5..1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_degree_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_degree_range("1..."), std::invalid_argument);

  ReportOptions opts;
  opts.degrees = {{2, 3}};
  const Report r = build_report(*find_builtin("iwasawa"), opts);
  REQUIRE(r.complex->degrees.size() == 2);
  CHECK(r.complex->degrees[0].values.k == 2);
  CHECK(r.complex->degrees[1].values.S == 86);
}

TEST_CASE("symplectic section") {
  ReportOptions opts;
  opts.window = 3;
  const Report r = build_report(*find_builtin("torus4-symplectic"), opts);
  REQUIRE(r.symplectic);
  CHECK_FALSE(r.complex);
  CHECK(r.symplectic->hard_lefschetz);
  CHECK(r.symplectic->shear_consistent);
  const std::vector<std::size_t> dims{1, 4, 6, 4, 1};
  for (const auto& row : r.symplectic->degrees) {
    CHECK(row.dims.plus == dims[static_cast<std::size_t>(row.k)]);
    CHECK(row.dims.times == dims[static_cast<std::size_t>(row.k)]);
  }
  opts.window = 1;
  CHECK_THROWS_AS(build_report(*find_builtin("torus4-symplectic"), opts), std::invalid_argument);
}

TEST_CASE("raw bicomplex without top degree omits S") {
  DoubleComplex c;
  c.set_dim({0, 0}, 1);
  c.set_dim({1, 0}, 1);
  c.set_del({0, 0}, Matrix{{1}});
  CatalogEntry e{"arrow", ModelKind::RawBicomplex, c, "test"};
  const Report r = build_report(e);
  REQUIRE(r.complex);
  for (const auto& row : r.complex->degrees) CHECK_FALSE(row.has_S);
  CHECK(render_json(r)["complex"]["degrees"][0]["S"].is_null());
  CHECK(render_text(r).find("strip support: l = 1, N = 1") != std::string::npos);
}

TEST_CASE("torus6 report") {
  const Report r = build_report(*find_builtin("torus6"));
  for (const auto& row : r.complex->degrees) {
    CHECK(row.values.N == 0);
    CHECK(row.values.Delta == 0);
  }
  CHECK(r.complex->lemma.holds());
  CHECK(r.complex->kss == true);
}
