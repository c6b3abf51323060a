#include "nilgeo/report.hpp"

#include <json.hpp>

#include <initializer_list>
#include <sstream>
#include <variant>

#include "nilgeo/geometry.hpp"

namespace nilgeo {

namespace {

using nlohmann::json;

std::string basis_name(const MetricTwoStepAlgebra& A, std::size_t i) {
  std::ostringstream os;
  if (i < A.dim_v())
    os << "v" << (i + 1);
  else
    os << "z" << (i - A.dim_v() + 1);
  return os.str();
}

// ---- JSON building blocks ----

json vec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

QVec vec_from_json(const json& j) {
  QVec v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

json mat_to_json(const QMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(to_string(M.at(i, c)));
    rows.push_back(row);
  }
  return json{{"rows", M.rows()}, {"cols", M.cols()}, {"data", rows}};
}

QMatrix mat_from_json(const json& j) {
  QMatrix M(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const json& rows = j.at("data");
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t c = 0; c < M.cols(); ++c)
      M.at(i, c) = parse_rational(rows.at(i).at(c).get<std::string>());
  return M;
}

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"e", e}, {"c", to_string(c)}});
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
  const std::size_t nv = j.at("nvars").get<std::size_t>();
  Poly p = Poly::zero(nv);
  for (const auto& t : j.at("terms")) {
    Poly term = Poly::constant(nv, parse_rational(t.at("c").get<std::string>()));
    const json& e = t.at("e");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const unsigned exp = e.at(i).get<unsigned>();
      for (unsigned q = 0; q < exp; ++q) term *= Poly::variable(nv, i);
    }
    p += term;
  }
  return p;
}

json poly_vec_to_json(const std::vector<Poly>& v) {
  json a = json::array();
  for (const Poly& p : v) a.push_back(poly_to_json(p));
  return a;
}

std::vector<Poly> poly_vec_from_json(const json& j) {
  std::vector<Poly> v;
  for (const auto& p : j) v.push_back(poly_from_json(p));
  return v;
}

json opt_poly_to_json(const std::optional<Poly>& p) {
  return p ? poly_to_json(*p) : json(nullptr);
}

std::optional<Poly> opt_poly_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return poly_from_json(j);
}

json spectrum_to_json(const std::map<Rational, unsigned long>& s) {
  json a = json::array();
  for (const auto& [len, count] : s) a.push_back(json::array({to_string(len), count}));
  return a;
}

std::map<Rational, unsigned long> spectrum_from_json(const json& j) {
  std::map<Rational, unsigned long> s;
  for (const auto& pair : j)
    s[parse_rational(pair.at(0).get<std::string>())] = pair.at(1).get<unsigned long>();
  return s;
}

std::string status_string(CriterionStatus s) { return to_string(s); }

CriterionStatus status_from_string(const std::string& s) {
  if (s == "pass") return CriterionStatus::Pass;
  if (s == "fail") return CriterionStatus::Fail;
  if (s == "inconclusive") return CriterionStatus::Inconclusive;
  throw ReportError("unknown criterion status: " + s);
}

std::string obstruction_kind_string(Obstruction::Kind k) {
  switch (k) {
    case Obstruction::Kind::CommutatorOutsideImage:
      return "commutator-outside-image";
    case Obstruction::Kind::CentralBracketNotSkew:
      return "central-bracket-not-skew";
    case Obstruction::Kind::CentralBracketNotJacobi:
      return "central-bracket-not-jacobi";
    case Obstruction::Kind::ASVerificationFailed:
      return "verification-failed";
  }
  return "?";
}

Obstruction::Kind obstruction_kind_from_string(const std::string& s) {
  if (s == "commutator-outside-image") return Obstruction::Kind::CommutatorOutsideImage;
  if (s == "central-bracket-not-skew") return Obstruction::Kind::CentralBracketNotSkew;
  if (s == "central-bracket-not-jacobi") return Obstruction::Kind::CentralBracketNotJacobi;
  if (s == "verification-failed") return Obstruction::Kind::ASVerificationFailed;
  throw ReportError("unknown obstruction kind: " + s);
}

json equations_to_json(const EquationReport& e) {
  return json{{"as1", e.as1},
              {"as2", e.as2},
              {"as3", e.as3},
              {"nr4", e.nr4},
              {"contraction", e.contraction},
              {"first_failure", e.first_failure}};
}

EquationReport equations_from_json(const json& j) {
  EquationReport e;
  e.as1 = j.at("as1").get<bool>();
  e.as2 = j.at("as2").get<bool>();
  e.as3 = j.at("as3").get<bool>();
  e.nr4 = j.at("nr4").get<bool>();
  e.contraction = j.at("contraction").get<bool>();
  e.first_failure = j.at("first_failure").get<std::string>();
  return e;
}

json nr_to_json(const NROutcome& o) {
  json j;
  if (const auto* s = std::get_if<NRStructure>(&o)) {
    j["kind"] = "structure";
    json tbl = json::array();
    for (const auto& row : s->central_bracket) {
      json r = json::array();
      for (const auto& entry : row) r.push_back(vec_to_json(entry));
      tbl.push_back(r);
    }
    j["central_bracket"] = tbl;
    j["unique_solution"] = s->unique_solution;
    j["central_checks"] = s->central_checks;
    j["equations"] = equations_to_json(s->equations);
  } else if (const auto* ob = std::get_if<Obstruction>(&o)) {
    j["kind"] = "obstruction";
    j["obstruction_kind"] = obstruction_kind_string(ob->kind);
    j["a"] = ob->a;
    j["b"] = ob->b;
    j["residual"] = mat_to_json(ob->residual);
    j["certificate"] = vec_to_json(ob->certificate);
    j["detail"] = ob->detail;
  } else {
    j["kind"] = "inapplicable";
    j["failed_hypothesis"] = std::get<Inapplicable>(o).failed_hypothesis;
  }
  return j;
}

NROutcome nr_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "structure") {
    NRStructure s;
    for (const auto& row : j.at("central_bracket")) {
      std::vector<QVec> r;
      for (const auto& entry : row) r.push_back(vec_from_json(entry));
      s.central_bracket.push_back(std::move(r));
    }
    s.unique_solution = j.at("unique_solution").get<bool>();
    s.central_checks = j.at("central_checks").get<bool>();
    s.equations = equations_from_json(j.at("equations"));
    return s;
  }
  if (kind == "obstruction") {
    Obstruction ob;
    ob.kind = obstruction_kind_from_string(j.at("obstruction_kind").get<std::string>());
    ob.a = j.at("a").get<std::size_t>();
    ob.b = j.at("b").get<std::size_t>();
    ob.residual = mat_from_json(j.at("residual"));
    ob.certificate = vec_from_json(j.at("certificate"));
    ob.detail = j.at("detail").get<std::string>();
    return ob;
  }
  if (kind == "inapplicable")
    return Inapplicable{j.at("failed_hypothesis").get<std::string>()};
  throw ReportError("unknown outcome kind: " + kind);
}

json properties_to_json(const PropertyReport& p) {
  json j;
  j["type_A"] = p.type_A;
  j["heisenberg_type"] = p.heisenberg_type;
  j["modified_heisenberg"] = p.modified_heisenberg;
  j["lambda_form"] = p.lambda_form ? mat_to_json(*p.lambda_form) : json(nullptr);
  j["scalar_J"] = p.scalar_J ? json(to_string(*p.scalar_J)) : json(nullptr);
  j["scalar_B"] = p.scalar_B ? json(to_string(*p.scalar_B)) : json(nullptr);
  j["parallel_ricci"] = p.parallel_ricci;
  return j;
}

PropertyReport properties_from_json(const json& j) {
  PropertyReport p;
  p.type_A = j.at("type_A").get<bool>();
  p.heisenberg_type = j.at("heisenberg_type").get<bool>();
  p.modified_heisenberg = j.at("modified_heisenberg").get<bool>();
  if (!j.at("lambda_form").is_null()) p.lambda_form = mat_from_json(j.at("lambda_form"));
  if (!j.at("scalar_J").is_null())
    p.scalar_J = parse_rational(j.at("scalar_J").get<std::string>());
  if (!j.at("scalar_B").is_null())
    p.scalar_B = parse_rational(j.at("scalar_B").get<std::string>());
  p.parallel_ricci = j.at("parallel_ricci").get<bool>();
  return p;
}

json census_to_json(const AbelianReport& r) {
  json j;
  j["subset_size"] = r.subset_size;
  j["abelian_subsets"] = r.abelian_subsets;
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back(json{{"subset", w.subset}, {"a", w.a}, {"b", w.b},
                      {"bracket", vec_to_json(w.bracket)}});
  j["witnesses"] = ws;
  return j;
}

AbelianReport census_from_json(const json& j) {
  AbelianReport r;
  r.subset_size = j.at("subset_size").get<std::size_t>();
  for (const auto& s : j.at("abelian_subsets"))
    r.abelian_subsets.push_back(s.get<std::vector<std::size_t>>());
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("subset").get<std::vector<std::size_t>>(),
                           w.at("a").get<std::size_t>(), w.at("b").get<std::size_t>(),
                           vec_from_json(w.at("bracket"))});
  return r;
}

json eigen_to_json(const EigenvalueCriterion& c) {
  json j;
  j["status"] = status_string(c.status);
  j["detail"] = c.detail;
  j["charpoly_first"] = poly_vec_to_json(c.charpoly_first);
  j["charpoly_second"] = poly_vec_to_json(c.charpoly_second);
  j["witness_Z"] = c.witness_Z ? vec_to_json(*c.witness_Z) : json(nullptr);
  return j;
}

EigenvalueCriterion eigen_from_json(const json& j) {
  EigenvalueCriterion c;
  c.status = status_from_string(j.at("status").get<std::string>());
  c.detail = j.at("detail").get<std::string>();
  c.charpoly_first = poly_vec_from_json(j.at("charpoly_first"));
  c.charpoly_second = poly_vec_from_json(j.at("charpoly_second"));
  if (!j.at("witness_Z").is_null()) c.witness_Z = vec_from_json(j.at("witness_Z"));
  return c;
}

json bracket_to_json(const BracketLatticeCriterion& c) {
  json j;
  j["status"] = status_string(c.status);
  j["detail"] = c.detail;
  j["first_ok"] = c.first_ok;
  j["second_ok"] = c.second_ok;
  j["witness_side"] = c.witness_side;
  j["witness_pair"] = c.witness_pair
                          ? json::array({c.witness_pair->first, c.witness_pair->second})
                          : json(nullptr);
  j["witness_bracket"] = vec_to_json(c.witness_bracket);
  return j;
}

BracketLatticeCriterion bracket_from_json(const json& j) {
  BracketLatticeCriterion c;
  c.status = status_from_string(j.at("status").get<std::string>());
  c.detail = j.at("detail").get<std::string>();
  c.first_ok = j.at("first_ok").get<bool>();
  c.second_ok = j.at("second_ok").get<bool>();
  c.witness_side = j.at("witness_side").get<int>();
  if (!j.at("witness_pair").is_null())
    c.witness_pair = {j.at("witness_pair").at(0).get<std::size_t>(),
                      j.at("witness_pair").at(1).get<std::size_t>()};
  c.witness_bracket = vec_from_json(j.at("witness_bracket"));
  return c;
}

json stratum_to_json(const KernelStratumCertificate& s) {
  json j;
  j["stratum"] = s.stratum;
  json k1 = json::array(), k2 = json::array();
  for (const auto& v : s.kernel_first) k1.push_back(poly_vec_to_json(v));
  for (const auto& v : s.kernel_second) k2.push_back(poly_vec_to_json(v));
  j["kernel_first"] = k1;
  j["kernel_second"] = k2;
  j["dims_equal"] = s.dims_equal;
  j["cross_annihilation"] = s.cross_annihilation;
  j["whole_stratum"] = s.whole_stratum;
  j["independence_minor_first"] = opt_poly_to_json(s.independence_minor_first);
  j["independence_minor_second"] = opt_poly_to_json(s.independence_minor_second);
  j["rank_minor_first"] = opt_poly_to_json(s.rank_minor_first);
  j["rank_minor_second"] = opt_poly_to_json(s.rank_minor_second);
  return j;
}

KernelStratumCertificate stratum_from_json(const json& j) {
  KernelStratumCertificate s;
  s.stratum = j.at("stratum").get<std::size_t>();
  for (const auto& v : j.at("kernel_first")) s.kernel_first.push_back(poly_vec_from_json(v));
  for (const auto& v : j.at("kernel_second")) s.kernel_second.push_back(poly_vec_from_json(v));
  s.dims_equal = j.at("dims_equal").get<bool>();
  s.cross_annihilation = j.at("cross_annihilation").get<bool>();
  s.whole_stratum = j.at("whole_stratum").get<bool>();
  s.independence_minor_first = opt_poly_from_json(j.at("independence_minor_first"));
  s.independence_minor_second = opt_poly_from_json(j.at("independence_minor_second"));
  s.rank_minor_first = opt_poly_from_json(j.at("rank_minor_first"));
  s.rank_minor_second = opt_poly_from_json(j.at("rank_minor_second"));
  return s;
}

json kernels_to_json(const KernelCriterion& c) {
  json j;
  j["status"] = status_string(c.status);
  j["mode"] = c.mode == KernelMode::Symbolic ? "symbolic" : "sampled";
  j["detail"] = c.detail;
  json strata = json::array();
  for (const auto& s : c.strata) strata.push_back(stratum_to_json(s));
  j["strata"] = strata;
  json samples = json::array();
  for (const auto& s : c.samples)
    samples.push_back(json{{"Z", vec_to_json(s.Z)},
                           {"spectrum_first", spectrum_to_json(s.spectrum_first)},
                           {"spectrum_second", spectrum_to_json(s.spectrum_second)},
                           {"equal", s.equal}});
  j["samples"] = samples;
  return j;
}

KernelCriterion kernels_from_json(const json& j) {
  KernelCriterion c;
  c.status = status_from_string(j.at("status").get<std::string>());
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "symbolic")
    c.mode = KernelMode::Symbolic;
  else if (mode == "sampled")
    c.mode = KernelMode::Sampled;
  else
    throw ReportError("unknown kernel mode: " + mode);
  c.detail = j.at("detail").get<std::string>();
  for (const auto& s : j.at("strata")) c.strata.push_back(stratum_from_json(s));
  for (const auto& s : j.at("samples"))
    c.samples.push_back({vec_from_json(s.at("Z")),
                         spectrum_from_json(s.at("spectrum_first")),
                         spectrum_from_json(s.at("spectrum_second")),
                         s.at("equal").get<bool>()});
  return c;
}

json criteria_to_json(const GordonWilsonReport& g) {
  return json{{"eigenvalues", eigen_to_json(g.eigenvalues)},
              {"bracket_lattice", bracket_to_json(g.bracket_lattice)},
              {"kernels", kernels_to_json(g.kernels)},
              {"isospectral_by_criterion", g.isospectral_by_criterion}};
}

GordonWilsonReport criteria_from_json(const json& j) {
  GordonWilsonReport g;
  g.eigenvalues = eigen_from_json(j.at("eigenvalues"));
  g.bracket_lattice = bracket_from_json(j.at("bracket_lattice"));
  g.kernels = kernels_from_json(j.at("kernels"));
  g.isospectral_by_criterion = j.at("isospectral_by_criterion").get<bool>();
  return g;
}

json comparison_to_json(const CensusComparison& c) {
  json j;
  j["counts_first"] = c.counts_first;
  j["counts_second"] = c.counts_second;
  j["first_difference"] = c.first_difference ? json(*c.first_difference) : json(nullptr);
  return j;
}

CensusComparison comparison_from_json(const json& j) {
  CensusComparison c;
  c.counts_first = j.at("counts_first").get<std::vector<std::size_t>>();
  c.counts_second = j.at("counts_second").get<std::vector<std::size_t>>();
  if (!j.at("first_difference").is_null())
    c.first_difference = j.at("first_difference").get<std::size_t>();
  return c;
}

json summary_to_json(const OracleCheckSummary& s) {
  return json{{"checks_run", s.checks_run},
              {"failures", s.failures},
              {"first_failure", s.first_failure}};
}

OracleCheckSummary summary_from_json(const json& j) {
  OracleCheckSummary s;
  s.checks_run = j.at("checks_run").get<std::size_t>();
  s.failures = j.at("failures").get<std::size_t>();
  s.first_failure = j.at("first_failure").get<std::string>();
  return s;
}

// ---- text rendering ----

std::string paint(const std::string& s, const char* code, bool color) {
  if (!color) return s;
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

std::string status_text(CriterionStatus s, bool color) {
  switch (s) {
    case CriterionStatus::Pass:
      return paint("pass", "32", color);
    case CriterionStatus::Fail:
      return paint("fail", "31", color);
    case CriterionStatus::Inconclusive:
      return paint("inconclusive", "33", color);
  }
  return "?";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

/// Renders a central coordinate vector as a z-basis combination, e.g.
/// "-z3" or "2*z1 - 1/2*z2".
std::string z_combo(const QVec& w) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    const bool neg = w[k] < 0;
    Rational a = abs_rat(w[k]);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (a != 1) os << to_string(a) << "*";
    os << "z" << (k + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string poly_vec_text(const std::vector<Poly>& v, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string(names);
  }
  return s + ")";
}

/// Characteristic polynomial in lambda (printed as t) with coefficients
/// that are polynomials in c1..cm.
std::string charpoly_text(const std::vector<Poly>& coeffs, std::size_t m) {
  const std::vector<std::string> names = central_var_names(m);
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    if (coeffs[d].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool is_one = coeffs[d].is_constant() && coeffs[d].constant_value() == 1;
    if (d == 0) {
      os << "(" << coeffs[d].to_string(names) << ")";
      continue;
    }
    if (!is_one) os << "(" << coeffs[d].to_string(names) << ")*";
    os << "t";
    if (d > 1) os << "^" << d;
  }
  if (first) os << "0";
  return os.str();
}

std::string indent_block(const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << pad << line << "\n";
  return out.str();
}

std::string subset_names(const std::vector<std::size_t>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ", ";
    s += "v" + std::to_string(subset[i] + 1);
  }
  return s + "}";
}

void render_nr(std::ostringstream& os, const NROutcome& nr, bool color) {
  if (const auto* s = std::get_if<NRStructure>(&nr)) {
    os << "  naturally reductive: " << paint("structure found and verified", "32", color)
       << "\n";
    const std::size_t m = s->central_bracket.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        os << "    Ttilde(z" << (a + 1) << ", z" << (b + 1)
           << ") = " << z_combo(s->central_bracket[a][b]) << "\n";
    if (!s->unique_solution)
      os << "    (one structure out of an affine family; the j-map is not injective)\n";
    os << "    equations: parallel curvature " << yesno(s->equations.as1)
       << ", parallel T " << yesno(s->equations.as2) << ", metric skewness "
       << yesno(s->equations.as3) << ", T_X X = 0 " << yesno(s->equations.nr4)
       << ", Ricci contraction " << yesno(s->equations.contraction) << "\n";
  } else if (const auto* ob = std::get_if<Obstruction>(&nr)) {
    os << "  naturally reductive: " << paint("obstructed", "31", color) << " -- "
       << ob->detail << "\n";
    if (ob->kind == Obstruction::Kind::CommutatorOutsideImage) {
      os << "    residual [j_" << (ob->a + 1) << ", j_" << (ob->b + 1) << "] - j_W:\n"
         << indent_block(ob->residual.to_string(), "      ");
    }
  } else {
    os << "  naturally reductive solver: not applicable ("
       << std::get<Inapplicable>(nr).failed_hypothesis << ")\n";
  }
}

}  // namespace

OracleCheckSummary run_oracle_checks(const MetricTwoStepAlgebra& A) {
  OracleCheckSummary sum;
  const std::size_t d = A.dim();
  std::vector<ElementVector> e;
  e.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    e.push_back(i < A.dim_v() ? A.basis_v(i) : A.basis_z(i - A.dim_v()));

  auto record = [&](bool ok, const char* what, std::initializer_list<std::size_t> idx) {
    ++sum.checks_run;
    if (ok || !sum.first_failure.empty()) {
      if (!ok) ++sum.failures;
      return;
    }
    ++sum.failures;
    std::ostringstream os;
    os << what << " mismatch at (";
    bool first = true;
    for (std::size_t i : idx) {
      if (!first) os << ", ";
      os << basis_name(A, i);
      first = false;
    }
    os << ")";
    sum.first_failure = os.str();
  };

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      record(A.bracket(e[x], e[y]) == oracles::bracket_table(A, e[x], e[y]),
             "bracket vs table", {x, y});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      record(nabla(A, e[x], e[y]) == oracles::koszul_nabla(A, e[x], e[y]),
             "connection vs Koszul", {x, y});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        record(curvature(A, e[x], e[y], e[z]) ==
                   oracles::curvature_def(A, e[x], e[y], e[z]),
               "curvature vs definition", {x, y, z});
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t x = 0; x < d; ++x)
      record(jacobi_operator(A, e[v], e[x]) == oracles::curvature_def(A, e[x], e[v], e[v]),
             "Jacobi operator vs R(X,V)V", {v, x});
  for (std::size_t x = 0; x < d; ++x)
    record(ricci_operator(A, e[x]) == oracles::ricci_by_trace(A, e[x]),
           "Ricci operator vs trace", {x});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      record(ricci_tensor(A, e[x], e[y]) == oracles::ricci_tensor_by_trace(A, e[x], e[y]),
             "Ricci tensor vs trace", {x, y});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        record(nabla_ric(A, e[x], e[y], e[z]) ==
                   oracles::nabla_ric_leibniz(A, e[x], e[y], e[z]),
               "Ricci derivative vs Leibniz", {x, y, z});
  record(is_type_A(A) == is_type_A_symbolic_oracle(A), "type A two ways", {});
  Rational traceB = endo_B(A).trace();
  traceB /= -4;
  record(scalar_curvature(A) == traceB, "scalar curvature vs -tr(B)/4", {});
  return sum;
}

OracleCheckSummary run_curvature_property_checks(const MetricTwoStepAlgebra& A) {
  OracleCheckSummary sum;
  const std::size_t d = A.dim();
  std::vector<ElementVector> e;
  e.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    e.push_back(i < A.dim_v() ? A.basis_v(i) : A.basis_z(i - A.dim_v()));

  auto record = [&](bool ok, const char* what, std::initializer_list<std::size_t> idx) {
    ++sum.checks_run;
    if (!ok) {
      ++sum.failures;
      if (sum.first_failure.empty()) {
        std::ostringstream os;
        os << what << " fails at (";
        bool first = true;
        for (std::size_t i : idx) {
          if (!first) os << ", ";
          os << basis_name(A, i);
          first = false;
        }
        os << ")";
        sum.first_failure = os.str();
      }
    }
  };

  std::vector N(d, std::vector<ElementVector>(d, ElementVector::zero(A.dim_v(), A.dim_z())));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) N[x][y] = nabla(A, e[x], e[y]);
  std::vector R(d, std::vector(d, std::vector<ElementVector>()));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      R[x][y].reserve(d);
      for (std::size_t z = 0; z < d; ++z) R[x][y].push_back(curvature(A, e[x], e[y], e[z]));
    }

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        record((R[x][y][z] + R[y][x][z]).is_zero(), "R antisymmetry in the first pair",
               {x, y, z});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t w = z; w < d; ++w) {
          Rational s = inner(R[x][y][z], e[w]);
          s += inner(R[x][y][w], e[z]);
          record(sgn(s) == 0, "<R(X,Y)Z, W> skewness in the last pair", {x, y, z, w});
        }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t w = z + 1; w < d; ++w)
          record(inner(R[x][y][z], e[w]) == inner(R[z][w][x], e[y]),
                 "pair symmetry of <R(X,Y)Z, W>", {x, y, z, w});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = y + 1; z < d; ++z)
        record((R[x][y][z] + R[y][z][x] + R[z][x][y]).is_zero(), "first Bianchi identity",
               {x, y, z});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      record((N[x][y] - N[y][x] - A.bracket(e[x], e[y])).is_zero(), "zero torsion", {x, y});
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x; y < d; ++y) {
        Rational s = inner(N[z][x], e[y]);
        s += inner(N[z][y], e[x]);
        record(sgn(s) == 0, "metric compatibility", {z, x, y});
      }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      record(ricci_tensor(A, e[x], e[y]) == ricci_tensor(A, e[y], e[x]),
             "Ricci symmetry", {x, y});
  Rational trJ = endo_J(A).trace();
  trJ += endo_B(A).trace();
  record(sgn(trJ) == 0, "tr J = -tr B", {});
  Rational sc = endo_B(A).trace();
  sc /= -4;
  record(scalar_curvature(A) == sc, "scalar curvature = -1/4 tr B", {});
  return sum;
}

DiagnosticReport build_diagnostic_report(const MetricTwoStepAlgebra& A,
                                         const std::string& source) {
  DiagnosticReport r;
  r.source = source;
  r.dim_v = A.dim_v();
  r.dim_z = A.dim_z();
  r.properties = classify_algebra(A);
  r.oracle_checks = run_oracle_checks(A);
  r.nr = naturally_reductive_structure(A);
  for (std::size_t d : {std::size_t{2}, std::size_t{3}})
    if (d <= A.dim_v()) r.censuses.push_back(coordinate_abelian_census(A, d));
  return r;
}

IsospectralReport build_isospectral_report(const NilmanifoldData& N1,
                                           const NilmanifoldData& N2,
                                           const std::string& source1,
                                           const std::string& source2,
                                           const KernelOptions& opts) {
  IsospectralReport r;
  r.source_first = source1;
  r.source_second = source2;
  r.criteria = gordon_wilson(N1, N2, opts);
  r.census = nonisomorphism_evidence(N1.algebra, N2.algebra);
  return r;
}

std::string to_json_string(const DiagnosticReport& r) {
  json j;
  j["source"] = r.source;
  j["dim_v"] = r.dim_v;
  j["dim_z"] = r.dim_z;
  j["properties"] = properties_to_json(r.properties);
  j["oracle_checks"] = summary_to_json(r.oracle_checks);
  j["naturally_reductive"] = nr_to_json(r.nr);
  json cs = json::array();
  for (const auto& c : r.censuses) cs.push_back(census_to_json(c));
  j["censuses"] = cs;
  return j.dump(2) + "\n";
}

DiagnosticReport diagnostic_report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    DiagnosticReport r;
    r.source = j.at("source").get<std::string>();
    r.dim_v = j.at("dim_v").get<std::size_t>();
    r.dim_z = j.at("dim_z").get<std::size_t>();
    r.properties = properties_from_json(j.at("properties"));
    r.oracle_checks = summary_from_json(j.at("oracle_checks"));
    r.nr = nr_from_json(j.at("naturally_reductive"));
    for (const auto& c : j.at("censuses")) r.censuses.push_back(census_from_json(c));
    return r;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed report JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw ReportError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_json_string(const IsospectralReport& r) {
  json j;
  j["source_first"] = r.source_first;
  j["source_second"] = r.source_second;
  j["criteria"] = criteria_to_json(r.criteria);
  j["census"] = comparison_to_json(r.census);
  return j.dump(2) + "\n";
}

IsospectralReport isospectral_report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    IsospectralReport r;
    r.source_first = j.at("source_first").get<std::string>();
    r.source_second = j.at("source_second").get<std::string>();
    r.criteria = criteria_from_json(j.at("criteria"));
    r.census = comparison_from_json(j.at("census"));
    return r;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed report JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw ReportError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string render_text(const DiagnosticReport& r, bool color) {
  std::ostringstream os;
  os << "algebra " << r.source << ": dim v = " << r.dim_v << ", dim z = " << r.dim_z
     << "\n";
  os << "  type A: " << yesno(r.properties.type_A) << "\n";
  os << "  Heisenberg type: " << yesno(r.properties.heisenberg_type)
     << ", modified Heisenberg: " << yesno(r.properties.modified_heisenberg) << "\n";
  if (r.properties.lambda_form && r.dim_z > 0)
    os << "    j_Z^2 = (Z^T S Z) Id with S:\n"
       << indent_block(r.properties.lambda_form->to_string(), "      ");
  if (r.properties.scalar_J)
    os << "  J = " << to_string(*r.properties.scalar_J) << " * Id";
  else
    os << "  J not scalar";
  if (r.properties.scalar_B)
    os << ", B = " << to_string(*r.properties.scalar_B) << " * Id\n";
  else
    os << ", B not scalar\n";
  os << "  parallel Ricci tensor: " << yesno(r.properties.parallel_ricci) << "\n";
  render_nr(os, r.nr, color);
  const bool ok = r.oracle_checks.failures == 0;
  os << "  cross-checks against definition-based recomputations: "
     << r.oracle_checks.checks_run << " run, "
     << paint(std::to_string(r.oracle_checks.failures) + " failed", ok ? "32" : "31",
              color);
  if (!ok) os << " (first: " << r.oracle_checks.first_failure << ")";
  os << "\n";
  for (const auto& c : r.censuses) {
    os << "  abelian coordinate subspaces of dim " << c.subset_size << ": "
       << c.abelian_subsets.size() << " of "
       << (c.abelian_subsets.size() + c.witnesses.size());
    if (!c.abelian_subsets.empty() && c.abelian_subsets.size() <= 12) {
      os << " --";
      for (std::size_t i = 0; i < c.abelian_subsets.size(); ++i)
        os << (i ? ", " : " ") << subset_names(c.abelian_subsets[i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const IsospectralReport& r, bool color) {
  std::ostringstream os;
  os << "pair " << r.source_first << " vs " << r.source_second << "\n";
  os << "  eigenvalue criterion: " << status_text(r.criteria.eigenvalues.status, color)
     << " -- " << r.criteria.eigenvalues.detail << "\n";
  const std::size_t m =
      r.criteria.eigenvalues.charpoly_first.empty()
          ? 0
          : r.criteria.eigenvalues.charpoly_first.front().nvars();
  if (r.criteria.eigenvalues.status == CriterionStatus::Pass)
    os << "    charpoly(j_Z) = " << charpoly_text(r.criteria.eigenvalues.charpoly_first, m)
       << "\n";
  os << "  bracket lattice criterion: "
     << status_text(r.criteria.bracket_lattice.status, color) << " -- "
     << r.criteria.bracket_lattice.detail << "\n";
  os << "  kernel criterion ("
     << (r.criteria.kernels.mode == KernelMode::Symbolic ? "symbolic" : "sampled")
     << "): " << status_text(r.criteria.kernels.status, color) << " -- "
     << r.criteria.kernels.detail << "\n";
  const std::vector<std::string> names = central_var_names(m);
  for (const auto& s : r.criteria.kernels.strata) {
    os << "    stratum " << s.stratum << " (";
    if (s.stratum > 1) {
      os << "c1 = ";
      if (s.stratum > 3) os << "... = ";
      if (s.stratum > 2) os << "c" << (s.stratum - 1) << " = ";
      os << "0, ";
    }
    os << "c" << s.stratum << " != 0): kernel dims " << s.kernel_first.size() << " / "
       << s.kernel_second.size() << ", cross-annihilation " << yesno(s.cross_annihilation)
       << ", whole-stratum certificates " << yesno(s.whole_stratum) << "\n";
    for (const auto& v : s.kernel_first)
      os << "      ker j: " << poly_vec_text(v, names) << "\n";
    for (const auto& v : s.kernel_second)
      os << "      ker j': " << poly_vec_text(v, names) << "\n";
  }
  if (r.criteria.kernels.mode == KernelMode::Sampled && !r.criteria.kernels.samples.empty()) {
    os << "    sampled dual points: " << r.criteria.kernels.samples.size() << "\n";
    const auto& last = r.criteria.kernels.samples.back();
    if (!last.equal) {
      os << "    mismatch at Z = " << z_combo(last.Z) << "\n";
    }
  }
  os << "  isospectral by all three criteria: "
     << paint(yesno(r.criteria.isospectral_by_criterion),
              r.criteria.isospectral_by_criterion ? "32" : "31", color)
     << "\n";
  os << "  abelian census counts by dim (1.." << r.census.counts_first.size() << "): ";
  for (std::size_t i = 0; i < r.census.counts_first.size(); ++i)
    os << (i ? ", " : "") << r.census.counts_first[i];
  os << " vs ";
  for (std::size_t i = 0; i < r.census.counts_second.size(); ++i)
    os << (i ? ", " : "") << r.census.counts_second[i];
  if (r.census.first_difference)
    os << "; first difference at dim " << *r.census.first_difference
       << " (coordinate-census evidence that the algebras are not isomorphic)";
  os << "\n";
  return os.str();
}

int report_exit_code(const DiagnosticReport& r) {
  return r.oracle_checks.failures == 0 ? 0 : 1;
}

int report_exit_code(const IsospectralReport& r) {
  return r.criteria.isospectral_by_criterion ? 0 : 1;
}

int nr_exit_code(const NROutcome& outcome) {
  return std::holds_alternative<NRStructure>(outcome) ? 0 : 1;
}

}  // namespace nilgeo
