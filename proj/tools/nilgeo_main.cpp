// nilgeo: exact geometry of metric 2-step nilpotent Lie algebras.
//
// Subcommands: inspect, isospec, nr-check, paper-verify, fuzz.
// Exit codes: 0 success / property established, 1 property negative or
// not established, 2 input or usage error.
// Reports go to stdout, diagnostics to stderr. NILGEO_COLOR=0 disables
// ANSI color; NILGEO_COLOR=1 forces it.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilgeo/algebra.hpp"
#include "nilgeo/algebra_io.hpp"
#include "nilgeo/geometry.hpp"
#include "nilgeo/lattice.hpp"
#include "nilgeo/paper_suite.hpp"
#include "nilgeo/report.hpp"

namespace {

using nilgeo::MetricTwoStepAlgebra;
using nilgeo::QVec;
using nilgeo::Rational;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool color_enabled() {
  if (const char* e = std::getenv("NILGEO_COLOR")) return std::string(e) != "0";
  return ::isatty(STDOUT_FILENO) != 0;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) out.push_back(tok);
  return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "' (want p or p/q)");
  }
}

MetricTwoStepAlgebra catalog_algebra(const std::string& name) {
  using namespace nilgeo;
  if (name == "paper-nj") return paper_nj();
  if (name == "paper-njprime") return paper_njprime();
  if (name == "h3") return heisenberg(1);
  if (name == "quaternionic") return quaternionic_heisenberg();
  if (name.rfind("heisenberg:", 0) == 0) {
    long k = parse_long(name.substr(11), "heisenberg block count");
    if (k < 1) throw UsageError("heisenberg:<k> needs k >= 1");
    return heisenberg(static_cast<std::size_t>(k));
  }
  if (name.rfind("random:", 0) == 0) {
    const auto parts = split_commas(name.substr(7));
    if (parts.size() != 4)
      throw UsageError("random catalog entry is random:<seed>,<n>,<m>,<bound>");
    long seed = parse_long(parts[0], "seed");
    long n = parse_long(parts[1], "n");
    long m = parse_long(parts[2], "m");
    long bound = parse_long(parts[3], "coefficient bound");
    if (seed < 0 || n < 1 || m < 1 || bound < 1)
      throw UsageError("random:<seed>,<n>,<m>,<bound> needs seed >= 0 and n, m, bound >= 1");
    return random_algebra(static_cast<unsigned long>(seed), static_cast<std::size_t>(n),
                          static_cast<std::size_t>(m), bound);
  }
  throw UsageError("unknown catalog name '" + name +
                   "' (known: paper-nj, paper-njprime, h3, quaternionic, heisenberg:<k>, "
                   "random:<seed>,<n>,<m>,<bound>)");
}

struct LoadedAlgebra {
  MetricTwoStepAlgebra algebra;
  std::string name;
  std::optional<QVec> M_scale, L_scale;
};

/// A source is a file path or a catalog name. Anything containing a
/// slash or ending in .json must exist as a file; otherwise an existing
/// file wins over a catalog lookup.
LoadedAlgebra resolve_source(const std::string& source) {
  const bool looks_like_path =
      source.find('/') != std::string::npos ||
      (source.size() > 5 && source.rfind(".json") == source.size() - 5);
  if (looks_like_path || std::filesystem::exists(source)) {
    if (!std::filesystem::exists(source)) throw UsageError("no such file: " + source);
    auto f = nilgeo::load_algebra_file(source);
    return {std::move(f.algebra), source, std::move(f.lattice_M_scale),
            std::move(f.lattice_L_scale)};
  }
  return {catalog_algebra(source), source, std::nullopt, std::nullopt};
}

LoadedAlgebra resolve_source(const std::string& positional, const std::string& catalog_flag) {
  if (!positional.empty() && !catalog_flag.empty())
    throw UsageError("give either a positional source or --catalog, not both");
  if (!catalog_flag.empty()) return {catalog_algebra(catalog_flag), catalog_flag, {}, {}};
  if (!positional.empty()) return resolve_source(positional);
  throw UsageError("an algebra source is required (file path or --catalog <name>)");
}

nilgeo::IntegerLattice diagonal_lattice(const QVec& scales) {
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (sgn(scales[i]) == 0) throw UsageError("lattice scales must be nonzero");
    QVec b(scales.size(), Rational(0));
    b[i] = scales[i];
    basis.push_back(std::move(b));
  }
  return nilgeo::IntegerLattice::from_basis(scales.size(), basis);
}

/// Comma-separated scales; a single value is broadcast to the dimension.
QVec parse_scales(const std::string& s, std::size_t dim, const std::string& what) {
  const auto parts = split_commas(s);
  if (parts.size() != dim && parts.size() != 1)
    throw UsageError(what + " wants 1 or " + std::to_string(dim) + " comma-separated scales, got " +
                     std::to_string(parts.size()));
  QVec scales;
  for (const auto& p : parts) scales.push_back(parse_rational(p, what));
  while (scales.size() < dim) scales.push_back(scales[0]);
  return scales;
}

nilgeo::NilmanifoldData make_data(const LoadedAlgebra& la, const std::string& M_flag,
                                  const std::string& L_flag) {
  auto data = nilgeo::NilmanifoldData::standard(la.algebra);
  std::optional<QVec> Ms = la.M_scale, Ls = la.L_scale;
  if (!M_flag.empty()) Ms = parse_scales(M_flag, la.algebra.dim_v(), "--lattice-M");
  if (!L_flag.empty()) Ls = parse_scales(L_flag, la.algebra.dim_z(), "--lattice-L");
  if (Ms) data.M = diagonal_lattice(*Ms);
  if (Ls) data.L = diagonal_lattice(*Ls);
  return data;
}

int run_inspect(const std::string& source, const std::string& catalog_flag, bool json_out) {
  const auto la = resolve_source(source, catalog_flag);
  const auto rep = nilgeo::build_diagnostic_report(la.algebra, la.name);
  if (json_out)
    std::cout << nilgeo::to_json_string(rep) << "\n";
  else
    std::cout << nilgeo::render_text(rep, color_enabled());
  return nilgeo::report_exit_code(rep);
}

int run_nr_check(const std::string& source, const std::string& catalog_flag, bool json_out) {
  const auto la = resolve_source(source, catalog_flag);
  const auto rep = nilgeo::build_diagnostic_report(la.algebra, la.name);
  if (json_out)
    std::cout << nilgeo::to_json_string(rep) << "\n";
  else
    std::cout << nilgeo::render_text(rep, color_enabled());
  return nilgeo::nr_exit_code(rep.nr);
}

int run_isospec(const std::string& first, const std::string& second, const std::string& M_flag,
                const std::string& L_flag, const std::string& mode, long bound, bool json_out) {
  const auto la1 = resolve_source(first);
  const auto la2 = resolve_source(second);
  nilgeo::KernelOptions opts;
  opts.mode = mode == "sampled" ? nilgeo::KernelMode::Sampled : nilgeo::KernelMode::Symbolic;
  if (bound < 1) throw UsageError("--bound needs a positive integer");
  opts.length_bound = bound;
  const auto rep = nilgeo::build_isospectral_report(make_data(la1, M_flag, L_flag),
                                                    make_data(la2, M_flag, L_flag), la1.name,
                                                    la2.name, opts);
  if (json_out)
    std::cout << nilgeo::to_json_string(rep) << "\n";
  else
    std::cout << nilgeo::render_text(rep, color_enabled());
  return nilgeo::report_exit_code(rep);
}

int run_paper_verify(bool json_out) {
  const auto claims =
      nilgeo::run_paper_claims(nilgeo::paper_nj(), nilgeo::paper_njprime());
  if (json_out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : claims)
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << arr.dump(2) << "\n";
  } else {
    const bool color = color_enabled();
    std::size_t passed = 0;
    for (const auto& c : claims) {
      if (c.pass) {
        ++passed;
        std::cout << (color ? "\x1b[32mpass\x1b[0m  " : "pass  ") << c.name << "\n";
      } else {
        std::cout << (color ? "\x1b[31mFAIL\x1b[0m  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
      }
    }
    std::cout << passed << " of " << claims.size() << " claims pass\n";
  }
  return nilgeo::all_claims_pass(claims) ? 0 : 1;
}

int run_fuzz(unsigned long seed, long count, long n, long m, long coeff_bound) {
  using namespace nilgeo;
  if (count < 1) throw UsageError("--count needs a positive integer");
  if (n < 1 || m < 1 || coeff_bound < 1) throw UsageError("--n, --m and --coeff-bound need positive integers");
  std::size_t total_checks = 0, bad_cases = 0;
  for (long i = 0; i < count; ++i) {
    const unsigned long case_seed = seed + static_cast<unsigned long>(i);
    const auto A = random_algebra(case_seed, static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(m), coeff_bound);
    auto oracle = run_oracle_checks(A);
    auto props = run_curvature_property_checks(A);
    std::string failure;
    if (oracle.failures > 0)
      failure = oracle.first_failure;
    else if (props.failures > 0)
      failure = props.first_failure;
    else {
      // Symbolic charpoly evaluated at a point must match the numeric one.
      RationalSampler sampler(case_seed ^ 0x5bd1e995UL);
      const QVec Z = sampler.next_vec(A.dim_z());
      const auto sym = charpoly(A.j_of_symbolic());
      const auto num = charpoly(A.j_of(Z));
      ++total_checks;
      for (std::size_t k = 0; k < sym.size(); ++k)
        if (sym[k].eval(Z) != num[k]) {
          failure = "symbolic charpoly disagrees with the numeric one";
          break;
        }
      classify_algebra(A);
      naturally_reductive_structure(A);
    }
    total_checks += oracle.checks_run + props.checks_run;
    if (!failure.empty()) {
      ++bad_cases;
      std::cout << "case seed=" << case_seed << ": FAIL (" << failure << ")\n";
      std::cout << algebra_to_json(A) << "\n";
    }
  }
  std::cout << count << " cases (n=" << n << ", m=" << m << ", seeds " << seed << ".."
            << seed + static_cast<unsigned long>(count) - 1 << "), " << total_checks
            << " checks, " << bad_cases << " discrepancies\n";
  return bad_cases == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact left-invariant geometry of metric 2-step nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string source, catalog_flag, first, second;
  std::string lattice_M, lattice_L, mode = "symbolic";
  long bound = 64;
  bool json_out = false;
  unsigned long fuzz_seed = 1;
  long fuzz_count = 20, fuzz_n = 4, fuzz_m = 2, fuzz_bound = 3;

  auto* inspect = app.add_subcommand(
      "inspect", "Full diagnostic report on one algebra (file path or catalog name)");
  inspect->add_option("source", source, "algebra JSON file or catalog name");
  inspect->add_option("--catalog", catalog_flag, "catalog name");
  inspect->add_flag("--json", json_out, "emit the report as JSON");

  auto* isospec = app.add_subcommand(
      "isospec", "Isospectrality criteria for a pair of nilmanifold quotients");
  isospec->add_option("first", first, "first algebra source")->required();
  isospec->add_option("second", second, "second algebra source")->required();
  isospec->add_option("--lattice-M", lattice_M,
                      "diagonal scales for the lattice in v (comma-separated, or one value)");
  isospec->add_option("--lattice-L", lattice_L,
                      "diagonal scales for the lattice in z (comma-separated, or one value)");
  isospec->add_option("--mode", mode, "kernel criterion mode")
      ->check(CLI::IsMember({"symbolic", "sampled"}));
  isospec->add_option("--bound", bound, "squared-length bound for sampled spectra");
  isospec->add_flag("--json", json_out, "emit the report as JSON");

  auto* nr = app.add_subcommand(
      "nr-check", "Same report as inspect; exit reflects the naturally reductive outcome");
  nr->add_option("source", source, "algebra JSON file or catalog name");
  nr->add_option("--catalog", catalog_flag, "catalog name");
  nr->add_flag("--json", json_out, "emit the report as JSON");

  auto* verify = app.add_subcommand(
      "paper-verify", "Re-derive every published value for the 9-dimensional pair");
  verify->add_flag("--json", json_out, "emit the claim table as JSON");

  auto* fuzz = app.add_subcommand(
      "fuzz", "Random algebras: closed forms vs oracles plus curvature identities");
  fuzz->add_option("--seed", fuzz_seed, "base seed; case i uses seed + i");
  fuzz->add_option("--count", fuzz_count, "number of random algebras");
  fuzz->add_option("--n", fuzz_n, "dim v of each case");
  fuzz->add_option("--m", fuzz_m, "dim z of each case");
  fuzz->add_option("--coeff-bound", fuzz_bound, "bound on raw matrix entries");

  try {
    app.parse(argc, argv);
    if (inspect->parsed()) return run_inspect(source, catalog_flag, json_out);
    if (isospec->parsed())
      return run_isospec(first, second, lattice_M, lattice_L, mode, bound, json_out);
    if (nr->parsed()) return run_nr_check(source, catalog_flag, json_out);
    if (verify->parsed()) return run_paper_verify(json_out);
    if (fuzz->parsed()) return run_fuzz(fuzz_seed, fuzz_count, fuzz_n, fuzz_m, fuzz_bound);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nilgeo::AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nilgeo::ReportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
