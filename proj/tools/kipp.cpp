// kipp: command-line front end for Kippenhahn polynomials, curve
// classification, generators and the circular-range campaign.
//
// Exit codes: 0 ok, 1 conjecture violation or failed identity suite,
// 2 usage or input error, 3 precondition failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kipp/classify.hpp"
#include "kipp/generators.hpp"
#include "kipp/harness.hpp"
#include "kipp/io.hpp"
#include "kipp/kippenhahn.hpp"
#include "kipp/linalg.hpp"
#include "kipp/reports.hpp"
#include "kipp/svg.hpp"

namespace {

using namespace kipp;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct Shared {
  double tol = 1e-9;
  int samples = 256;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

// "re" or "re,im".
Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    std::size_t ua = 0, ub = 0;
    const double re = std::stod(a, &ua);
    const double im = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse complex value '" + s + "' (use re or re,im)");
  }
}

void add_shared(CLI::App* cmd, Shared& sh, bool with_svg) {
  cmd->add_option("--tol", sh.tol, "Numerical tolerance")->capture_default_str();
  cmd->add_option("--samples", sh.samples, "Angular samples")->capture_default_str();
  cmd->add_option("--seed", sh.seed, "Seed (echoed in the output)")->capture_default_str();
  cmd->add_option("--out", sh.out, "Output file (default: stdout)");
  if (with_svg) cmd->add_option("--svg", sh.svg, "Also write an SVG plot here");
}

Json with_seed(Json j, const Shared& sh) {
  j["seed"] = sh.seed;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_poly(const std::string& input, bool expanded, bool check_oracle, const Shared& sh) {
  const ComplexMatrix a = read_matrix_file(input);
  Json j;
  j["input"] = input;
  j["method"] = expanded ? "expanded" : "det";
  j["polynomial"] = to_json(expanded ? kipp_poly_expanded(a) : kipp_poly_det(a));
  if (check_oracle) {
    if (a.rows() != 5) throw NotDim5("--check-oracle needs a 5x5 matrix");
    const ComplexMatrix t = schur_triangularize(a).triangular;
    j["oracleDiscrepancy"] = relative_difference(kipp_poly_expanded(t), kipp_poly_det(a));
  }
  emit(with_seed(j, sh).dump(2) + "\n", sh.out);
  return 0;
}

std::vector<ConditionReport> reports_for(const ComplexMatrix& a, const std::vector<CurveComponent>& comps) {
  using Kind = CurveComponent::Kind;
  std::vector<const CurveComponent*> points, ellipses, flats;
  for (const auto& c : comps) {
    if (c.kind == Kind::Point) points.push_back(&c);
    if (c.kind == Kind::Ellipse) ellipses.push_back(&c);
    if (c.kind == Kind::QuarticFlat) flats.push_back(&c);
  }
  std::vector<ConditionReport> out;
  const ComplexMatrix t = schur_triangularize(a).triangular;
  if (ellipses.size() == 2 && points.size() == 1) {
    const auto& e1 = *ellipses[0];
    const auto& e2 = *ellipses[1];
    const Roles roles = match_roles(t, e1.foci[0], e1.foci[1], e2.foci[0], e2.foci[1], points[0]->foci[0]);
    out.push_back(two_ellipse_report(t, roles, e1.minor_axis, e2.minor_axis));
  } else if (ellipses.size() == 1 && flats.size() == 1) {
    const auto& e = *ellipses[0];
    const auto& q = *flats[0];
    const Roles roles = match_roles(t, e.foci[0], e.foci[1], q.foci[1], q.foci[2], q.foci[0]);
    out.push_back(flat_report(t, roles, e.minor_axis, q.theta, q.mu));
  }
  return out;
}

int cmd_classify(const std::string& input, bool disc_only, const Shared& sh) {
  const ComplexMatrix a = read_matrix_file(input);
  if (!disc_only && a.rows() != 5) {
    throw NotDim5("shape classification needs a 5x5 matrix (use --disc-only for other sizes)");
  }
  const DiscFit disc = fit_disc(a, sh.samples);
  std::vector<CurveComponent> comps;
  std::vector<ConditionReport> reps;
  if (!disc_only) {
    comps = classify_curve(a, sh.tol);
    reps = reports_for(a, comps);
  }
  Json j = classification_json(comps, disc, reps);
  j["input"] = input;
  emit(with_seed(j, sh).dump(2) + "\n", sh.out);
  if (!sh.svg.empty()) {
    PlotSpec spec;
    spec.samples = sh.samples;
    spec.title = "classify " + input + " seed=" + std::to_string(sh.seed);
    write_text(sh.svg, render_svg(a, spec, disc));
  }
  return 0;
}

int cmd_boundary(const std::string& input, const std::string& layers, const Shared& sh) {
  const ComplexMatrix a = read_matrix_file(input);
  const auto pts = boundary_polyline(a, sh.samples);
  std::ostringstream os;
  os.precision(17);
  os << "# boundary of W(A) for " << input << " samples=" << sh.samples << " seed=" << sh.seed << "\n";
  os << "re,im\n";
  for (Complex z : pts) os << z.real() << ',' << z.imag() << '\n';
  emit(os.str(), sh.out);
  if (!sh.svg.empty()) {
    PlotSpec spec;
    spec.samples = sh.samples;
    spec.layers = parse_layers(layers);
    spec.title = "boundary " + input + " seed=" + std::to_string(sh.seed);
    std::optional<DiscFit> disc;
    if (spec.layers & kLayerDisc) disc = fit_disc(a, std::max(16, sh.samples));
    write_text(sh.svg, render_svg(a, spec, disc));
  }
  return 0;
}

struct GenerateArgs {
  std::string family;
  double a = 0.0;
  std::string b = "0", c = "0";
  std::vector<std::string> lambdas;
  double r = 1.0, s = 1.0;
  std::string l3 = "0", l4 = "0", l5 = "0";
  double theta = 0.0, mu = 1.0, phase_a = 0.0, phase_b = 0.0;
  int n = 5, ker = 1;
  bool b_equals_a = false;
};

int cmd_generate(const GenerateArgs& g, const Shared& sh) {
  ComplexMatrix m;
  Json params;
  const Seed seed{sh.seed};
  if (g.family == "s5") {
    const Complex b = parse_complex(g.b), c = parse_complex(g.c);
    m = s5_family(g.a, b, c);
    params = {{"a", g.a}, {"b", to_json(b)}, {"c", to_json(c)}};
  } else if (g.family == "two-ellipse") {
    if (g.lambdas.size() != 5) throw std::invalid_argument("two-ellipse needs --lambdas with 5 values");
    std::array<Complex, 5> l;
    Json lj = Json::array();
    for (std::size_t i = 0; i < 5; ++i) {
      l[i] = parse_complex(g.lambdas[i]);
      lj.push_back(to_json(l[i]));
    }
    m = two_ellipse_block(l, g.r, g.s);
    params = {{"lambdas", lj}, {"r", g.r}, {"s", g.s}};
  } else if (g.family == "flat3") {
    const Complex l3 = parse_complex(g.l3), l4 = parse_complex(g.l4), l5 = parse_complex(g.l5);
    m = flat_3x3(l3, l4, l5, g.theta, g.mu, g.phase_a, g.phase_b);
    params = {{"l3", to_json(l3)}, {"l4", to_json(l4)}, {"l5", to_json(l5)}, {"theta", g.theta},
              {"mu", g.mu},        {"phaseA", g.phase_a}, {"phaseB", g.phase_b}};
  } else if (g.family == "pi") {
    m = random_partial_isometry(g.n, g.ker, seed);
    params = {{"n", g.n}, {"ker", g.ker}};
  } else if (g.family == "ker2") {
    m = ker2_family(seed, g.b_equals_a);
    params = {{"bEqualsA", g.b_equals_a}};
  } else if (g.family == "jordan") {
    m = jordan_shift(g.n);
    params = {{"n", g.n}};
  } else if (g.family == "haar") {
    m = haar_unitary(g.n, seed);
    params = {{"n", g.n}};
  } else {
    throw std::invalid_argument("unknown family '" + g.family +
                                "' (expected s5, two-ellipse, flat3, pi, ker2, jordan, haar)");
  }
  Json j = to_json(m);
  j["generator"] = {{"family", g.family}, {"params", params}, {"seed", sh.seed}};
  emit(j.dump(2) + "\n", sh.out);
  return 0;
}

int cmd_campaign(CampaignConfig cfg, const std::string& runs_dir, bool persist) {
  const CampaignResult res = conjecture_campaign(cfg);
  std::filesystem::path dir;
  if (persist) dir = persist_campaign(res, runs_dir.empty() ? runs_root() : std::filesystem::path(runs_dir));
  Json j = to_json(res.summary);
  j["seed"] = cfg.seed;
  j["seconds"] = res.summary.seconds;
  if (persist) j["directory"] = dir.string();
  std::cout << j.dump(2) << "\n";
  std::cout << (res.summary.passed() ? "PASS" : "FAIL") << " campaign " << res.summary.id << ": "
            << res.summary.circular << " circular of " << res.summary.admitted << " admitted, "
            << res.summary.violations << " violations, max circular center modulus "
            << res.summary.max_center_circular << "\n";
  return res.summary.passed() ? 0 : kExitViolation;
}

int cmd_identities(int count, int samples, const Shared& sh) {
  const Seed seed{sh.seed};
  const OracleReport oracle = oracle_identity_suite(count, seed);
  const Theorem32Report s5 = theorem32_identity_check(default_theorem32_grid());
  const Case2Report ker2 = case2_identity_check(samples, derive_seed(seed, 1));
  const bool oracle_ok = oracle.max_discrepancy < 1e-9;
  Json j = {{"seed", sh.seed},
            {"oracle",
             {{"count", oracle.count},
              {"maxDiscrepancy", oracle.max_discrepancy},
              {"meanDiscrepancy", oracle.mean_discrepancy},
              {"worstIndex", oracle.worst_index},
              {"passed", oracle_ok}}},
            {"s5",
             {{"samples", s5.rows.size()},
              {"maxDRhs", s5.max_d_rhs},
              {"bResidualAtZero", s5.b_at_zero},
              {"bMargin", s5.b_margin},
              {"passed", s5.passed()}}},
            {"ker2",
             {{"samples", samples},
              {"maxCombination", ker2.max_comb},
              {"maxCrossCheck", ker2.max_cross},
              {"minPerturbed", ker2.min_perturbed},
              {"passed", ker2.passed()}}}};
  emit(j.dump(2) + "\n", sh.out);
  return oracle_ok && s5.passed() && ker2.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kippenhahn polynomials, curves and numerical ranges"};
  app.require_subcommand(1);

  Shared sh;
  std::string input;

  auto* poly = app.add_subcommand("poly", "Kippenhahn polynomial det(x Re A + y Im A + z I)");
  bool expanded = false, check_oracle = false;
  poly->add_option("input", input, "Matrix JSON file")->required();
  poly->add_flag("--expanded", expanded, "Use the closed-form expansion (upper triangular 5x5)");
  poly->add_flag("--check-oracle", check_oracle, "Compare the expansion of the Schur form with the determinant");
  add_shared(poly, sh, false);

  auto* classify = app.add_subcommand("classify", "Classify the Kippenhahn curve of a 5x5 matrix");
  bool disc_only = false;
  classify->add_option("input", input, "Matrix JSON file")->required();
  classify->add_flag("--disc-only", disc_only, "Only fit a disc (any n)");
  add_shared(classify, sh, true);

  auto* boundary = app.add_subcommand("boundary", "Boundary of W(A) as CSV");
  std::string layers = "all";
  boundary->add_option("input", input, "Matrix JSON file")->required();
  boundary->add_option("--layers", layers, "SVG layers: boundary,branches,eigenvalues,disc or all")
      ->capture_default_str();
  add_shared(boundary, sh, true);

  auto* generate = app.add_subcommand("generate", "Write a generated matrix as JSON");
  GenerateArgs g;
  generate->add_option("family", g.family, "s5, two-ellipse, flat3, pi, ker2, jordan, haar")->required();
  generate->add_option("--a", g.a, "s5: a in [0, 1)");
  generate->add_option("--b", g.b, "s5: b (re or re,im)");
  generate->add_option("--c", g.c, "s5: c (re or re,im)");
  generate->add_option("--lambdas", g.lambdas, "two-ellipse: five eigenvalues (re or re,im)")->expected(5);
  generate->add_option("--r", g.r, "two-ellipse: first minor axis");
  generate->add_option("--s", g.s, "two-ellipse: second minor axis");
  generate->add_option("--l3", g.l3, "flat3: eigenvalue");
  generate->add_option("--l4", g.l4, "flat3: eigenvalue");
  generate->add_option("--l5", g.l5, "flat3: eigenvalue");
  generate->add_option("--theta", g.theta, "flat3: angle of the flat portion");
  generate->add_option("--mu", g.mu, "flat3: offset of the flat portion");
  generate->add_option("--phase-a", g.phase_a, "flat3: phase of the (1,2) entry");
  generate->add_option("--phase-b", g.phase_b, "flat3: phase of the (1,3) entry");
  generate->add_option("--n", g.n, "pi, jordan, haar: dimension");
  generate->add_option("--ker", g.ker, "pi: kernel dimension");
  generate->add_flag("--b-equals-a", g.b_equals_a, "ker2: plant b = a");
  add_shared(generate, sh, false);

  auto* campaign = app.add_subcommand("campaign", "Monte Carlo search for off-centre circular ranges");
  CampaignConfig cfg;
  std::string runs_dir;
  bool no_structured = false, no_persist = false;
  campaign->add_option("--trials", cfg.n_trials, "Number of trials")->capture_default_str();
  campaign->add_option("--seed", cfg.seed, "Campaign seed")->capture_default_str();
  campaign->add_option("--ker-dims", cfg.ker_dims, "Kernel dimensions to cycle through");
  campaign->add_flag("--no-structured", no_structured, "Skip the circular fixtures");
  campaign->add_option("--tol-disc", cfg.tol_disc, "Disc fit tolerance")->capture_default_str();
  campaign->add_option("--tol-center", cfg.tol_center, "Largest admissible centre modulus")->capture_default_str();
  campaign->add_option("--samples", cfg.samples, "Angular samples per fit")->capture_default_str();
  campaign->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->capture_default_str();
  campaign->add_option("--id", cfg.id, "Campaign id (directory name)");
  campaign->add_option("--runs-dir", runs_dir, "Results root (default: $KIPP_RUNS_DIR or ./runs)");
  campaign->add_flag("--no-persist", no_persist, "Do not write result files");

  auto* identities = app.add_subcommand("identities", "Determinant oracle and proof identity suites");
  int oracle_count = 200, ker2_samples = 50;
  identities->add_option("--count", oracle_count, "Oracle matrices")->capture_default_str();
  identities->add_option("--ker2-samples", ker2_samples, "dim ker = 2 instances")->capture_default_str();
  add_shared(identities, sh, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(input, expanded, check_oracle, sh);
    if (*classify) return cmd_classify(input, disc_only, sh);
    if (*boundary) return cmd_boundary(input, layers, sh);
    if (*generate) return cmd_generate(g, sh);
    if (*campaign) {
      cfg.include_structured = !no_structured;
      return cmd_campaign(cfg, runs_dir, !no_persist);
    }
    if (*identities) return cmd_identities(oracle_count, ker2_samples, sh);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonFiniteEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
