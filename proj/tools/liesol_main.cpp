#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liesol/extension.hpp"
#include "liesol/geometry.hpp"
#include "liesol/io.hpp"
#include "liesol/search.hpp"
#include "liesol/soliton.hpp"

namespace liesol {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedVerdict = 1;
constexpr int kExitInputError = 2;

template <typename T>
Json json_of_generic(const Mat<T>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
Json json_of_generic(const Vec<T>& v) {
  Json row = Json::array();
  for (const T& x : v) row.push_back(to_string(x));
  return row;
}

template <typename T>
std::string pretty(const Mat<T>& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

template <typename T>
std::string pretty(const Vec<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Accumulates results and verdicts; emits either the human report or the
/// machine-readable report_v1 document.
class ReportBuilder {
 public:
  ReportBuilder(const std::string& subcommand, const std::string& command, bool json_mode)
      : json_mode_(json_mode) {
    root_["schema"] = "report_v1";
    root_["command"] = command;
    root_["subcommand"] = subcommand;
    root_["input"] = Json::object();
    root_["results"] = Json::object();
    root_["verdicts"] = Json::array();
    if (!json_mode_) lines_.push_back("liesol " + subcommand);
  }

  void input(const ParsedInput& in) {
    root_["input"]["source"] = in.source;
    root_["input"]["digest"] = in.digest;
    note("input: " + in.source + " (" + in.digest + ")");
  }

  void result(const std::string& key, const Json& value) { root_["results"][key] = value; }

  void result(const std::string& key, const Json& value, const std::string& human) {
    root_["results"][key] = value;
    note(key + " = " + human);
  }

  void note(const std::string& line) {
    if (!json_mode_) lines_.push_back(line);
  }

  /// `identity` names the algebraic identity the verdict certifies.
  void verdict(const std::string& name, const std::string& identity, bool pass) {
    root_["verdicts"].push_back({{"name", name}, {"identity", identity}, {"pass", pass}});
    if (!pass) ++failed_;
    if (!json_mode_) lines_.push_back("verdict [" + name + "] {" + identity + "}: " +
                                      (pass ? "PASS" : "FAIL"));
  }

  int finish() {
    const int code = failed_ == 0 ? kExitOk : kExitFailedVerdict;
    root_["exit"] = code;
    if (json_mode_) {
      std::cout << root_.dump(2) << "\n";
    } else {
      for (const auto& line : lines_) std::cout << line << "\n";
      std::cout << "exit: " << code << "\n";
    }
    return code;
  }

 private:
  Json root_;
  std::vector<std::string> lines_;
  bool json_mode_;
  int failed_ = 0;
};

struct CommonOptions {
  std::string input_file;
  std::string catalog_name;
  bool json = false;

  ParsedInput load() const {
    if (!input_file.empty() && !catalog_name.empty())
      throw std::invalid_argument("give either --input or --catalog, not both");
    if (!input_file.empty()) return load_algebra_file(input_file);
    if (!catalog_name.empty()) return input_from_catalog(catalog_name);
    throw std::invalid_argument("an input is required: --input <file> or --catalog <name>");
  }
};

Rational require_rational(const std::string& text, const std::string& flag) {
  if (auto q = parse_rational(text)) return *q;
  throw std::invalid_argument(flag + " expects an exact rational like 3 or -19/10, got '" + text +
                              "' (floating point is rejected on exact paths)");
}

InvariantMetric require_metric(const ParsedInput& in) {
  if (!in.metric)
    throw std::invalid_argument("this subcommand needs a metric; the input carries none");
  return InvariantMetric(*in.metric);
}

Mat<Rational> require_derivation(const ParsedInput& in) {
  if (!in.derivation)
    throw std::invalid_argument("this subcommand needs a derivation; the input carries none");
  return *in.derivation;
}

int run_validate(const CommonOptions& common, const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("validate", command, common.json);
  rb.input(in);
  const ValidationReport report = validate_structure_constants(in.c);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.describe());
  rb.result("violations", violations);
  rb.verdict("structure-constants", "antisymmetry and Jacobi identity", report.ok());
  if (!report.ok()) rb.note(report.summary());

  bool derivation_ok = true;
  if (report.ok() && in.derivation) {
    const LieAlgebra alg(in.c);
    const Ten3<Rational> res = derivation_residual(alg, *in.derivation);
    derivation_ok = res.is_zero_tensor();
    rb.verdict("derivation", "Leibniz rule D[X,Y] = [DX,Y] + [X,DY]", derivation_ok);
  }
  bool metric_ok = true;
  if (in.metric) {
    try {
      InvariantMetric metric(*in.metric);
    } catch (const std::invalid_argument& err) {
      metric_ok = false;
      rb.note(std::string("metric: ") + err.what());
    }
    rb.verdict("metric", "symmetric positive definite", metric_ok);
  }
  const int code = rb.finish();
  // Validation failures are input errors by contract.
  return code == kExitOk ? kExitOk : kExitInputError;
}

int run_curvature(const CommonOptions& common, const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("curvature", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const Connection conn = levi_civita(alg, metric);
  const CurvatureData curv = curvature(alg, metric);

  rb.result("ricci", json_of(curv.ricci), pretty(curv.ricci));
  rb.result("scalar", to_string(curv.scalar), to_string(curv.scalar));
  rb.verdict("torsion-free", "Gamma^k_{ij} - Gamma^k_{ji} = c^k_{ij}", conn.torsion_free(alg));
  rb.verdict("metric-compatible", "g(nabla_i X_j, X_k) + g(X_j, nabla_i X_k) = 0",
             conn.metric_compatible(metric));
  rb.verdict("ricci-symmetric", "Ric_{ij} = Ric_{ji}", curv.ricci.is_symmetric());
  rb.verdict("first-bianchi", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", curv.first_bianchi_holds());
  if (curv.weyl) {
    rb.result("weyl_zero", curv.weyl->is_zero_tensor());
    rb.verdict("weyl-trace-free", "g^{il} W_{ijkl} = 0", curv.weyl_trace_free(metric.g_inv()));
  }
  if (curv.cotton) rb.result("cotton_zero", curv.cotton->is_zero_tensor());
  return rb.finish();
}

int run_soliton(const CommonOptions& common, const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("soliton", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const SolitonDetection det = detect_algebraic_soliton(alg, metric);

  rb.result("scal", to_string(det.scal), to_string(det.scal));
  if (det.found()) {
    rb.result("lambda", to_string(det.lambda), to_string(det.lambda));
    rb.result("derivation", json_of(det.derivation), pretty(det.derivation));
    if (det.status == SolitonDetection::Status::EveryLambda) {
      rb.result("lambda_unique", false);
      rb.note("every lambda solves the system (abelian algebra); canonical representative shown");
    } else {
      rb.result("lambda_unique", true);
    }
    if (det.lambda != 0)
      rb.result("scal_over_lambda", to_string(det.scal / det.lambda),
                to_string(det.scal / det.lambda));
    const Rational tr_d = det.derivation.trace();
    const Rational tr_d2 = (det.derivation * det.derivation).trace();
    rb.verdict("soliton-detected", "Ric = lambda Id + D with D a derivation, solved exactly",
               true);
    rb.verdict("soliton-trace", "tr(D^2) = -lambda tr(D)", tr_d2 == -det.lambda * tr_d);
    rb.verdict("soliton-scal-trace", "tr(D) = scal - n lambda",
               tr_d == det.scal - Rational(alg.dim()) * det.lambda);
  } else {
    rb.result("lambda", nullptr);
    rb.verdict("soliton-detected", "Ric = lambda Id + D with D a derivation, solved exactly",
               false);
    rb.note("no lambda makes Q - lambda Id a derivation; Leibniz residual stays nonzero");
  }
  return rb.finish();
}

template <typename T>
void report_extension(ReportBuilder& rb, const Extension<T>& ext) {
  const ExtensionInvariants<T> inv = extension_invariants(ext);
  rb.result("ricci_formula", json_of_generic(extension_ricci_formula(ext)));
  rb.result("ric_xi_xi", to_string(inv.ric_xi_xi), to_string(inv.ric_xi_xi));
  rb.result("laplacian_r", to_string(laplacian_r(ext)), to_string(laplacian_r(ext)));
  rb.result("hess_r", json_of_generic(hess_r(ext)));
  rb.verdict("ricci-blocks", "extension Ricci blocks match the direct curvature computation",
             inv.formula_matches_direct);
  rb.verdict("bochner-scalar", "Ric(xi,xi) = -|Hess r|^2", inv.bochner_scalar);
  rb.verdict("ricci-xi-nonpositive", "Ric(xi,xi) <= 0", inv.nonpositive);
  rb.verdict("product-rigidity", "Ric(xi,xi) = 0 exactly when S = 0", inv.zero_iff_skew);
  rb.verdict("bochner-covector", "div(Hess r) = Ric(xi, .)", inv.bochner_covector);
}

int run_extend(const CommonOptions& common, const std::string& alpha_text,
               const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("extend", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const Mat<Rational> d = require_derivation(in);
  const Rational alpha = require_rational(alpha_text, "--alpha");
  const Extension<Rational> ext = extend_rational(alg, metric, d, alpha);
  rb.result("alpha", to_string(alpha), to_string(alpha));
  rb.result("total_dim", ext.n);
  rb.verdict("total-jacobi", "extended brackets satisfy the Jacobi identity",
             validate_structure_constants(ext.c).ok());
  report_extension(rb, ext);
  return rb.finish();
}

int run_qe_solve(const CommonOptions& common, const std::string& m_text, bool abelian,
                 const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("qe-solve", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const Rational m = require_rational(m_text, "--m");
  rb.result("m", to_string(m), to_string(m));

  if (abelian) {
    const InvariantMetric metric = require_metric(in);
    const Mat<Rational> d = require_derivation(in);
    const AbelianExtensionSolution sol = solve_abelian_extension(alg, metric, d, m);
    rb.result("tr_s", to_string(sol.tr_s));
    rb.result("tr_s2", to_string(sol.tr_s2));
    rb.result("defect", to_string(sol.defect), to_string(sol.defect));
    rb.verdict("abelian-extension", "tr(S^2) = -tr(S)^2 / m", sol.ok);
    if (sol.ok) {
      rb.result("a", to_string(sol.a), to_string(sol.a));
      rb.result("lambda", to_string(sol.lambda), to_string(sol.lambda));
    }
    return rb.finish();
  }

  const InvariantMetric metric = require_metric(in);
  const SolitonDetection det = detect_algebraic_soliton(alg, metric);
  rb.verdict("base-soliton", "Ric = lambda Id + D with D a derivation", det.found());
  if (!det.found()) return rb.finish();
  rb.result("lambda", to_string(det.lambda), to_string(det.lambda));
  rb.result("tr_d", to_string(det.derivation.trace()), to_string(det.derivation.trace()));
  const SolitonExtensionSolution sol = solve_soliton_extension(det, m);
  rb.result("gap", to_string(sol.gap), to_string(sol.gap));
  if (sol.boundary) rb.note("boundary case: tr D - m lambda = 0");
  rb.verdict("extension-exists", "tr D > m lambda", sol.exists);
  if (sol.exists) {
    rb.result("alpha_sq", to_string(sol.alpha_sq), to_string(sol.alpha_sq));
    rb.result("alpha", to_string(sol.alpha), to_string(sol.alpha));
    rb.result("a", to_string(sol.a), to_string(sol.a));
  }
  return rb.finish();
}

template <typename T>
void report_qe_verify(ReportBuilder& rb, const Extension<T>& ext, const Rational& m, const T& a) {
  const QECertificate<T> cert = verify_quasi_einstein(ext, m, a);
  rb.result("lambda", to_string(cert.lambda), to_string(cert.lambda));
  rb.result("a", to_string(cert.a), to_string(cert.a));
  rb.result("alpha", to_string(cert.alpha), to_string(cert.alpha));
  rb.result("residual", json_of_generic(cert.residual));
  rb.verdict("quasi-einstein", "Ric - m q = lambda g with q = (1/w) Hess w, w = e^{ar}",
             cert.exact);

  const NecessaryConditions<T> nec = necessary_conditions(ext, a);
  rb.result("div_s", json_of(nec.div_s), pretty(nec.div_s));
  rb.verdict("necessary-div", "div S = 0 on the base", nec.div_s_zero);
  rb.verdict("necessary-trace", "tr(S_eff^2) = -a tr(S_eff) for the bracket derivation alpha D",
             nec.trace_identity);
  using BC = typename NecessaryConditions<T>::BaseClass;
  const char* base_class = nec.base_class == BC::Soliton      ? "soliton"
                           : nec.base_class == BC::Flat       ? "flat"
                           : nec.base_class == BC::NotNormal  ? "not-normal"
                                                              : "violation";
  rb.result("base_class", base_class, base_class);
  if (nec.d_normal)
    rb.verdict("normal-dichotomy", "normal D forces a soliton or flat base",
               nec.base_class != BC::Violation);

  const TraceIdentities<T> tr = trace_identities(ext, a);
  rb.result("div_q_zero", tr.div_q_zero);
  if (tr.div_q_zero) {
    rb.verdict("q-trace", "tr(q^2) = a^2 tr(q)", tr.q_trace_identity);
    rb.verdict("hess-trace", "|Hess r|^2 = a (Lap r)", tr.hess_identity);
    rb.verdict("laplacian-window", "0 <= Lap r <= (n-1) a after orientation",
               tr.window_lower && tr.window_upper);
    rb.result("laplacian_oriented", to_string(tr.laplacian_oriented),
              to_string(tr.laplacian_oriented));
    if (tr.at_upper_endpoint) rb.note("Lap r sits at the upper endpoint (n-1)a");
    if (tr.at_lower_endpoint) rb.note("Lap r sits at the lower endpoint 0 (product direction)");
  }
}

int run_qe_verify(const CommonOptions& common, const std::string& m_text,
                  const std::string& alpha_text, const std::string& a_text, bool abelian,
                  const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("qe-verify", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const Rational m = require_rational(m_text, "--m");
  rb.result("m", to_string(m), to_string(m));

  if (!alpha_text.empty() || !a_text.empty()) {
    // Explicit constants: fully rational path.
    const Mat<Rational> d = require_derivation(in);
    const Rational alpha =
        alpha_text.empty() ? Rational(1) : require_rational(alpha_text, "--alpha");
    if (a_text.empty()) throw std::invalid_argument("--a is required when --alpha is given");
    const Rational a = require_rational(a_text, "--a");
    const Extension<Rational> ext = extend_rational(alg, metric, d, alpha);
    report_qe_verify(rb, ext, m, a);
    return rb.finish();
  }

  if (abelian) {
    const Mat<Rational> d = require_derivation(in);
    const AbelianExtensionSolution sol = solve_abelian_extension(alg, metric, d, m);
    rb.verdict("abelian-extension", "tr(S^2) = -tr(S)^2 / m", sol.ok);
    if (!sol.ok) {
      rb.result("defect", to_string(sol.defect), to_string(sol.defect));
      return rb.finish();
    }
    const Extension<Rational> ext = extend_rational(alg, metric, d, Rational(1));
    report_qe_verify(rb, ext, m, sol.a);
    return rb.finish();
  }

  const SolitonDetection det = detect_algebraic_soliton(alg, metric);
  rb.verdict("base-soliton", "Ric = lambda Id + D with D a derivation", det.found());
  if (!det.found()) return rb.finish();
  const SolitonExtensionSolution sol = solve_soliton_extension(det, m);
  rb.verdict("extension-exists", "tr D > m lambda", sol.exists);
  if (!sol.exists) {
    if (sol.boundary) rb.note("boundary case: tr D - m lambda = 0");
    return rb.finish();
  }
  const Extension<Quad> ext = extend<Quad>(alg, metric, det.derivation, sol.alpha);
  report_qe_verify(rb, ext, m, sol.a);
  return rb.finish();
}

int run_div_free(const CommonOptions& common, const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("div-free", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const Mat<Rational> d = require_derivation(in);
  if (!is_derivation(alg, d))
    rb.note("note: D is not a derivation of the algebra; only linearity is used below");

  const Vec<Rational> closed = divergence_closed_form(alg.c(), metric.g(), metric.g_inv(), d);
  const Connection conn = levi_civita(alg, metric);
  const auto [s, a] = metric_adjoint_split(metric.g(), metric.g_inv(), d);
  const Vec<Rational> direct =
      covariant_divergence(metric.g_inv(), conn.gamma, bilinear_of_operator(metric.g(), s));
  rb.result("div_s_closed_form", json_of(closed), pretty(closed));
  rb.result("div_s_covariant", json_of(direct), pretty(direct));
  rb.verdict("divergence-oracle", "closed form equals the covariant-derivative divergence",
             closed == direct);
  bool zero = true;
  for (const Rational& v : closed)
    if (v != 0) zero = false;
  rb.verdict("divergence-free", "div S = 0", zero);
  return rb.finish();
}

int run_conformal_flat(const CommonOptions& common, const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("conformal-flat", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const InvariantMetric metric = require_metric(in);
  const ConformalFlatness flat = is_conformally_flat(alg, metric);
  rb.result("note", flat.note, flat.note);
  rb.verdict("conformally-flat", "Cotton (n = 3) or Weyl (n >= 4) vanishes exactly", flat.flat);
  return rb.finish();
}

int run_search(const CommonOptions& common, int seeds, std::uint64_t seed, double tol,
               const std::string& command) {
  const ParsedInput in = common.load();
  ReportBuilder rb("search", command, common.json);
  rb.input(in);
  const LieAlgebra alg(in.c);
  const Mat<Rational> d = require_derivation(in);
  const MetricParametrization par = MetricParametrization::full(alg.dim());
  SearchOptions opt;
  opt.seeds = seeds;
  opt.seed_offset = seed;
  opt.tol = tol;
  const SearchResult res = find_div_free_family(alg, d, par, opt);
  rb.result("attempted", res.attempted);
  rb.result("converged", res.converged);
  rb.result("duplicates", res.duplicates);
  rb.result("rejected_indefinite", res.rejected_indefinite);
  Json solutions = Json::array();
  int exact = 0;
  for (const auto& sol : res.solutions) {
    Json js;
    Json params = Json::array();
    for (double v : sol.params) params.push_back(v);
    js["params"] = params;
    js["residual_norm"] = sol.residual_norm;
    js["iterations"] = sol.iterations;
    js["exact_verified"] = sol.exact_verified;
    if (!sol.rational_params.empty()) js["rational_params"] = json_of(sol.rational_params);
    solutions.push_back(std::move(js));
    if (sol.exact_verified) ++exact;
    rb.note("solution residual " + format_double(sol.residual_norm) +
            (sol.exact_verified ? " (exact after rationalization: " + pretty(sol.rational_params) +
                                      ")"
                                : " (numerically-only)"));
  }
  rb.result("solutions", solutions);
  rb.result("exact_verified_count", exact);
  rb.verdict("search-found-solutions", "damped Newton converged on div S = 0 samples",
             res.converged > 0);
  return rb.finish();
}

int run_catalog(const std::string& name, bool json_mode, const std::string& command) {
  ReportBuilder rb("catalog", command, json_mode);
  if (name.empty()) {
    Json names = Json::array();
    for (const auto& entry : catalog_names()) {
      names.push_back(entry);
      rb.note("  " + entry);
    }
    rb.result("entries", names);
    return rb.finish();
  }
  const CatalogEntry entry = catalog(name);
  rb.result("name", entry.name, entry.name);
  rb.result("description", entry.description, entry.description);
  rb.result("dim", entry.algebra.dim());
  Json brackets = Json::array();
  for (int i = 0; i < entry.algebra.dim(); ++i)
    for (int j = i + 1; j < entry.algebra.dim(); ++j)
      for (int k = 0; k < entry.algebra.dim(); ++k)
        if (entry.algebra.c()(i, j, k) != 0) {
          brackets.push_back({{"i", i + 1},
                              {"j", j + 1},
                              {"k", k + 1},
                              {"c", to_string(entry.algebra.c()(i, j, k))}});
          rb.note("  c^" + std::to_string(k + 1) + "_{" + std::to_string(i + 1) +
                  std::to_string(j + 1) + "} = " + to_string(entry.algebra.c()(i, j, k)));
        }
  rb.result("brackets", brackets);
  if (entry.metric) rb.result("metric", json_of(*entry.metric), pretty(*entry.metric));
  if (entry.derivation)
    rb.result("derivation", json_of(*entry.derivation), pretty(*entry.derivation));
  rb.verdict("catalog-valid", "entry passes structure-constant validation",
             validate_structure_constants(entry.algebra.c()).ok());
  return rb.finish();
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact left-invariant geometry: curvature, solitons, quasi-Einstein extensions"};
  app.require_subcommand(1);

  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

  CommonOptions common;
  std::string m_text, alpha_text, a_text, catalog_arg;
  std::string extend_alpha = "1";
  bool abelian = false;
  int seeds = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", common.input_file, "algebra description file (JSON)");
    sub->add_option("--catalog", common.catalog_name, "built-in algebra name");
    sub->add_flag("--json", common.json, "emit the machine-readable report_v1 document");
  };

  CLI::App* validate = app.add_subcommand("validate", "check structure constants and inputs");
  add_common(validate);
  CLI::App* curvature_cmd = app.add_subcommand("curvature", "connection and curvature tensors");
  add_common(curvature_cmd);
  CLI::App* soliton_cmd = app.add_subcommand("soliton", "algebraic Ricci soliton detection");
  add_common(soliton_cmd);
  CLI::App* extend_cmd = app.add_subcommand("extend", "build a one-dimensional extension");
  add_common(extend_cmd);
  extend_cmd->add_option("--alpha", extend_alpha, "extension scale alpha (rational)");
  CLI::App* qe_solve = app.add_subcommand("qe-solve", "solve for quasi-Einstein constants");
  add_common(qe_solve);
  qe_solve->add_option("--m", m_text, "parameter m (rational)")->required();
  qe_solve->add_flag("--abelian", abelian, "use the abelian-base branch");
  CLI::App* qe_verify = app.add_subcommand("qe-verify", "verify the quasi-Einstein equation");
  add_common(qe_verify);
  qe_verify->add_option("--m", m_text, "parameter m (rational)")->required();
  qe_verify->add_option("--alpha", alpha_text, "extension scale alpha (rational)");
  qe_verify->add_option("--a", a_text, "exponent a of w = e^{ar} (rational)");
  qe_verify->add_flag("--abelian", abelian, "use the abelian-base branch");
  CLI::App* div_free = app.add_subcommand("div-free", "divergence of S by two routes");
  add_common(div_free);
  CLI::App* conformal = app.add_subcommand("conformal-flat", "Cotton/Weyl conformal flatness");
  add_common(conformal);
  CLI::App* search_cmd = app.add_subcommand("search", "numeric search for div-free metrics");
  add_common(search_cmd);
  search_cmd->add_option("--seeds", seeds, "number of Halton seeds");
  search_cmd->add_option("--seed", seed, "Halton sequence offset");
  search_cmd->add_option("--tol", tol, "residual acceptance tolerance");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list or show built-in algebras");
  catalog_cmd->add_option("name", catalog_arg, "entry to show");
  catalog_cmd->add_flag("--json", common.json, "emit the machine-readable report_v1 document");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return run_validate(common, command);
  if (curvature_cmd->parsed()) return run_curvature(common, command);
  if (soliton_cmd->parsed()) return run_soliton(common, command);
  if (extend_cmd->parsed()) return run_extend(common, extend_alpha, command);
  if (qe_solve->parsed()) return run_qe_solve(common, m_text, abelian, command);
  if (qe_verify->parsed())
    return run_qe_verify(common, m_text, alpha_text, a_text, abelian, command);
  if (div_free->parsed()) return run_div_free(common, command);
  if (conformal->parsed()) return run_conformal_flat(common, command);
  if (search_cmd->parsed()) return run_search(common, seeds, seed, tol, command);
  if (catalog_cmd->parsed()) return run_catalog(catalog_arg, common.json, command);
  return kExitInputError;
}

}  // namespace
}  // namespace liesol

int main(int argc, char** argv) {
  try {
    return liesol::dispatch(argc, argv);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return liesol::kExitInputError;
  }
}
