#include "kipp/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kipp/io.hpp"
#include "kipp/kippenhahn.hpp"
#include "kipp/linalg.hpp"
#include "kipp/reports.hpp"

namespace kipp {

OracleReport oracle_identity_suite(int count, Seed seed, double scale, bool diagonal_only) {
  if (count < 1) throw std::invalid_argument("oracle_identity_suite needs count >= 1");
  OracleReport rep;
  rep.count = count;
  rep.seed = seed.value;
  rep.scale = scale;
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    ComplexMatrix t = random_upper_triangular(5, derive_seed(seed, static_cast<std::uint64_t>(i)), scale);
    if (diagonal_only) t = ComplexMatrix(t.diagonal().asDiagonal());
    const double d = relative_difference(kipp_poly_expanded(t), kipp_poly_det(t));
    total += d;
    if (rep.worst_index < 0 || d > rep.max_discrepancy) {
      rep.max_discrepancy = d;
      rep.worst_index = i;
      rep.worst = t;
    }
  }
  rep.mean_discrepancy = total / count;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Distance from `target` to the segment [p0, p1] of the complex plane.
double segment_distance(Complex p0, Complex p1, Complex target) {
  const Complex d = p1 - p0;
  const double len2 = std::norm(d);
  double s = 0.0;
  if (len2 > 0.0) s = std::clamp(((target - p0) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p0 + s * d - target);
}

}  // namespace

bool Theorem32Report::passed(double d_tol, double margin) const {
  return max_d_rhs < d_tol && b_at_zero < d_tol && b_margin > margin;
}

std::vector<S5Params> default_theorem32_grid() {
  const std::array<double, 5> as{0.0, 0.1, 0.25, 0.4, 0.5};
  std::vector<S5Params> out;
  for (double a : as) {
    out.push_back({a, a, a});
    out.push_back({a, 0.5, -0.2});
    out.push_back({a, Complex(0.0, 0.4), Complex(0.0, -0.4)});
    out.push_back({a, -0.3, 0.7});
    out.push_back({a, Complex(0.2, 0.1), Complex(0.2, -0.1)});
  }
  for (double a : {0.1, 0.2, 0.3, 0.4, 0.5}) out.push_back({a, a, a});
  return out;
}

Theorem32Report theorem32_identity_check(const std::vector<S5Params>& samples) {
  Theorem32Report rep;
  rep.b_margin = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    const ComplexMatrix m = s5_family(s.a, s.b, s.c);
    const ComplexMatrix b = m - s.a * ComplexMatrix::Identity(5, 5);
    const EntrySide es = EntrySide::from(b);

    Theorem32Row row;
    row.params = s;
    row.partial_isometry = is_partial_isometry(m, 1e-12);
    row.sum_sq = es.sum_sq;
    row.b_rhs = es.b_rhs;
    row.c_rhs = es.c_rhs;
    row.d_rhs = es.d_rhs;
    rep.max_d_rhs = std::max(rep.max_d_rhs, std::abs(es.d_rhs));

    // diag(B) = (0, 0, -a, b - a, c - a). Circle about the two zeros with
    // 4 r^2 = S; the second ellipse degenerates.
    const double big = es.sum_sq;
    row.d_row_residual = two_ellipse_report(b, Roles{0, 1, 3, 4, 2}, std::sqrt(big), 0.0).row("d").residual;

    if (s.b == Complex(s.a) && s.c == Complex(s.a)) {
      // diag(B) = (0, 0, -a, 0, 0): the point w is either -a or one of the zeros.
      double best = std::numeric_limits<double>::infinity();
      for (const Roles roles : {Roles{0, 1, 3, 4, 2}, Roles{0, 1, 2, 4, 3}, Roles{0, 1, 2, 3, 4}}) {
        const auto at = [&](double rho) {
          return two_ellipse_report(b, roles, std::sqrt(rho), std::sqrt(std::max(0.0, big - rho))).row("b");
        };
        const ConditionRow lo = at(big / 2.0);
        const ConditionRow hi = at(big);
        best = std::min(best, segment_distance(lo.lhs, hi.lhs, lo.rhs));
      }
      row.b_residual = best;
      if (s.a > 0.0) {
        rep.b_margin = std::min(rep.b_margin, best);
      } else {
        rep.b_at_zero = std::max(rep.b_at_zero, best);
      }
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------

Complex case2_comb_d(const Ker2Entries& e) {
  const auto cj = [](Complex z) { return std::conj(z); };
  const double a = e.a;
  return std::norm(e.d) * a * a * (e.b - a) - a * a * e.e * e.d * cj(e.f) + a * (e.b - a) * e.h * e.d * cj(e.j) +
         a * (e.b - a) * e.l * e.d * cj(e.t) - a * e.g * e.e * e.d * cj(e.j) - a * e.k * e.e * e.d * cj(e.t);
}

Complex case2_comb_c(const Ker2Entries& e) {
  const auto cj = [](Complex z) { return std::conj(z); };
  const double a = e.a;
  return a * a * (std::norm(e.e) + std::norm(e.f) + std::norm(e.d)) + 2.0 * a * e.e * e.d * cj(e.f) +
         a * e.e * e.g * cj(e.h) + a * e.e * e.k * cj(e.l) + a * e.f * e.g * cj(e.j) + a * e.f * e.k * cj(e.t) +
         a * e.d * e.h * cj(e.j) + a * e.d * e.l * cj(e.t) + e.e * e.d * e.g * cj(e.j) + e.e * e.d * e.k * cj(e.t);
}

bool Case2Report::passed(double tol, double sensitivity) const {
  return max_comb < tol && max_cross < tol && min_perturbed > sensitivity;
}

namespace {

// Largest |comb| over single-entry moves of size `eps` in four directions.
template <typename Comb>
double perturbed_max(const Ker2Entries& base, Comb comb, double eps) {
  double worst = 0.0;
  const std::array<Complex, 4> dirs{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  std::array<Complex Ker2Entries::*, 10> fields{&Ker2Entries::k, &Ker2Entries::l, &Ker2Entries::t, &Ker2Entries::g,
                                                &Ker2Entries::h, &Ker2Entries::j, &Ker2Entries::b, &Ker2Entries::e,
                                                &Ker2Entries::f, &Ker2Entries::d};
  for (auto field : fields) {
    for (Complex dir : dirs) {
      Ker2Entries e = base;
      e.*field += eps * dir;
      worst = std::max(worst, std::abs(comb(e)));
    }
  }
  for (double sign : {1.0, -1.0}) {
    Ker2Entries e = base;
    e.a += sign * eps;
    worst = std::max(worst, std::abs(comb(e)));
  }
  return worst;
}

}  // namespace

Case2Report case2_identity_check(int samples, Seed seed) {
  if (samples < 1) throw std::invalid_argument("case2_identity_check needs samples >= 1");
  Case2Report rep;
  rep.min_perturbed = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const Seed s = derive_seed(seed, static_cast<std::uint64_t>(i));
    for (bool b_equals_a : {false, true}) {
      const ComplexMatrix m = ker2_family(s, b_equals_a);
      const Ker2Entries e = Ker2Entries::from_matrix(m);
      Case2Row row;
      row.seed = s.value;
      row.b_equals_a = b_equals_a;
      row.a = e.a;
      row.comb_d = case2_comb_d(e);
      row.comb_c = case2_comb_c(e);
      const EntrySide shifted = EntrySide::from(m - e.a * ComplexMatrix::Identity(5, 5));
      row.cross_check = std::abs(row.comb_d - shifted.d_rhs);
      row.perturbed = b_equals_a ? perturbed_max(e, case2_comb_c, 1e-3) : perturbed_max(e, case2_comb_d, 1e-3);

      rep.max_comb = std::max(rep.max_comb, std::abs(row.comb_d));
      if (b_equals_a) rep.max_comb = std::max(rep.max_comb, std::abs(row.comb_c));
      rep.max_cross = std::max(rep.max_cross, row.cross_check);
      rep.min_perturbed = std::min(rep.min_perturbed, row.perturbed);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kFixtureCount = 6;
constexpr double kGateTol = 1e-10;

std::string fixture_name(int f) {
  static const std::array<const char*, kFixtureCount> names{"J5", "0+J4", "J3+J2", "0+0+J3", "J2+J2+0", "s5(0,b,c)"};
  return names[static_cast<std::size_t>(f)];
}

ComplexMatrix conjugate(const ComplexMatrix& a, Seed seed) {
  const ComplexMatrix u = haar_unitary(static_cast<int>(a.rows()), seed);
  return u * a * u.adjoint();
}

std::string fmt_complex(Complex z) { return to_json(z).dump(); }

}  // namespace

std::string campaign_id(const CampaignConfig& config) {
  if (!config.id.empty()) return config.id;
  return "campaign-s" + std::to_string(config.seed) + "-n" + std::to_string(config.n_trials);
}

ComplexMatrix campaign_trial_matrix(const CampaignConfig& config, int index, std::string* generator,
                                    std::string* params, bool* structured, bool* expect_circular) {
  const Seed seed = derive_seed(Seed{config.seed}, static_cast<std::uint64_t>(index));
  const bool is_fixture = config.include_structured && index % 4 == 0;
  std::string gen, par;
  bool circ = false;
  ComplexMatrix a;
  if (is_fixture) {
    const int f = (index / 4) % kFixtureCount;
    const ComplexMatrix zero1 = ComplexMatrix::Zero(1, 1);
    switch (f) {
      case 0:
        a = jordan_shift(5);
        break;
      case 1:
        a = direct_sum(zero1, conjugate(jordan_shift(4), derive_seed(seed, 2)));
        break;
      case 2:
        a = direct_sum(jordan_shift(3), jordan_shift(2));
        break;
      case 3:
        a = direct_sum(ComplexMatrix::Zero(2, 2), jordan_shift(3));
        break;
      case 4:
        a = direct_sum(direct_sum(jordan_shift(2), jordan_shift(2)), zero1);
        break;
      default: {
        auto engine = make_engine(derive_seed(seed, 3));
        const Complex b = random_in_disc(engine, 0.95);
        const Complex c = random_in_disc(engine, 0.95);
        a = s5_family(0.0, b, c);
        par = "{\"fixture\":\"" + fixture_name(f) + "\",\"b\":" + fmt_complex(b) + ",\"c\":" + fmt_complex(c) + "}";
        break;
      }
    }
    circ = f < 5;
    a = conjugate(a, derive_seed(seed, 4));
    gen = "fixture";
    if (par.empty()) par = "{\"fixture\":\"" + fixture_name(f) + "\"}";
  } else {
    const int m = config.ker_dims[static_cast<std::size_t>(index) % config.ker_dims.size()];
    a = random_partial_isometry(5, m, seed);
    gen = "pi";
    par = "{\"n\":5,\"ker\":" + std::to_string(m) + "}";
  }
  if (generator) *generator = gen;
  if (params) *params = par;
  if (structured) *structured = is_fixture;
  if (expect_circular) *expect_circular = circ;
  return a;
}

bool admit_trial(const ComplexMatrix& a) { return is_partial_isometry(a, kGateTol); }

TrialRecord run_trial(const CampaignConfig& config, int index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = derive_seed(Seed{config.seed}, static_cast<std::uint64_t>(index)).value;
  rec.timestamp = kCampaignTimestamp;
  const ComplexMatrix a =
      campaign_trial_matrix(config, index, &rec.generator, &rec.params, &rec.structured, &rec.expect_circular);
  rec.admitted = admit_trial(a);
  if (!rec.admitted) {
    rec.classification = "excluded";
    return rec;
  }

  rec.disc = fit_disc(a, config.samples);
  rec.circular = is_circular(rec.disc, config.tol_disc);
  rec.center_modulus = std::abs(rec.disc.center);

  try {
    std::string kinds;
    for (const auto& c : classify_curve(a)) {
      if (!kinds.empty()) kinds += ",";
      kinds += to_string(c.kind);
    }
    rec.classification = kinds;
  } catch (const Error& err) {
    rec.classification = std::string("error: ") + err.what();
  }

  // Simple eigenvalues of Re(e^{-i theta} A) are expected on the S_5 class.
  if (!rec.structured && is_class_Sn(a, 1e-9)) rec.flat_anomaly = !detect_flat(a, 64).empty();
  return rec;
}

CampaignResult conjecture_campaign(const CampaignConfig& config) {
  if (config.n_trials < 1) throw std::invalid_argument("campaign needs nTrials >= 1");
  if (config.ker_dims.empty()) throw std::invalid_argument("campaign needs at least one kernel dimension");
  for (int m : config.ker_dims) {
    if (m < 0 || m > 5) throw std::invalid_argument("kernel dimensions must lie in [0, 5]");
  }
  if (config.samples < 16) throw std::invalid_argument("campaign needs samples >= 16");

  const auto start = std::chrono::steady_clock::now();
  CampaignResult result;
  result.config = config;
  result.records.resize(static_cast<std::size_t>(config.n_trials));

  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.n_trials);
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < config.n_trials; i = next++) {
      result.records[static_cast<std::size_t>(i)] = run_trial(config, i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CampaignSummary& s = result.summary;
  s.id = campaign_id(config);
  s.n_trials = config.n_trials;
  for (const auto& r : result.records) {
    if (!r.admitted) continue;
    ++s.admitted;
    if (r.structured) ++s.structured;
    if (r.expect_circular && !r.circular) ++s.structured_missed;
    if (r.flat_anomaly) ++s.flat_anomalies;
    if (!r.circular) continue;
    ++s.circular;
    s.max_center_circular = std::max(s.max_center_circular, r.center_modulus);
    if (!(r.center_modulus < config.tol_center)) ++s.violations;
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::filesystem::path runs_root() {
  if (const char* env = std::getenv("KIPP_RUNS_DIR"); env && *env) return env;
  return "runs";
}

std::filesystem::path persist_campaign(const CampaignResult& result, const std::filesystem::path& root) {
  const std::filesystem::path dir = root / campaign_id(result.config);
  std::filesystem::create_directories(dir);
  write_text(dir / "config.json", to_json(result.config).dump(2) + "\n");
  std::ostringstream lines;
  for (const auto& r : result.records) lines << to_json(r).dump() << '\n';
  write_text(dir / "records.jsonl", lines.str());
  write_text(dir / "summary.json", to_json(result.summary).dump(2) + "\n");
  return dir;
}

}  // namespace kipp
