#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kipp/classify.hpp"
#include "kipp/generators.hpp"
#include "kipp/types.hpp"

namespace kipp {

// ---------------------------------------------------------------------------
// Determinant vs expansion

struct OracleReport {
  int count = 0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double max_discrepancy = 0.0;
  double mean_discrepancy = 0.0;
  int worst_index = -1;
  ComplexMatrix worst;
};

/// `count` seeded random upper triangular 5x5 matrices with entries in the
/// disc of radius `scale`. With `diagonal_only` the strict upper part is zero.
OracleReport oracle_identity_suite(int count, Seed seed, double scale = 1.0, bool diagonal_only = false);

// ---------------------------------------------------------------------------
// S_5 identities on B = s5_family(a, b, c) - aI

struct S5Params {
  double a = 0.0;
  Complex b{}, c{};
};

struct Theorem32Row {
  S5Params params;
  bool partial_isometry = false;
  double sum_sq = 0.0;
  Complex b_rhs{}, c_rhs{}, d_rhs{};
  /// (d) row with a circle about the two zero eigenvalues and the disc
  /// shape: S |a (b - a)(c - a)| where S is the (a)-row sum.
  double d_row_residual = 0.0;
  /// Only for b = c = a: smallest (b)-row residual over role assignments and
  /// splits 4r^2 + s^2 = S with s <= 2r. Negative when not applicable.
  double b_residual = -1.0;
};

struct Theorem32Report {
  std::vector<Theorem32Row> rows;
  double max_d_rhs = 0.0;
  /// Smallest b_residual over rows with a > 0 (infinity when there are none).
  double b_margin = 0.0;
  /// Largest b_residual over rows with a = 0.
  double b_at_zero = 0.0;
  bool passed(double d_tol = 1e-12, double margin = 1e-4) const;
};

/// 5x5 grid of (a, b, c) plus the a-grid {0.1, ..., 0.5} with b = c = a.
std::vector<S5Params> default_theorem32_grid();

Theorem32Report theorem32_identity_check(const std::vector<S5Params>& samples);

// ---------------------------------------------------------------------------
// dim ker = 2 identities

struct Case2Row {
  std::uint64_t seed = 0;
  bool b_equals_a = false;
  double a = 0.0;
  /// The (d) combination; evaluated on every instance.
  Complex comb_d{};
  /// The (c) combination; only meaningful when b = a.
  Complex comb_c{};
  /// |comb_d - d-RHS of A - aI| from the generic entry-side sums.
  double cross_check = 0.0;
  /// Largest |comb| after moving one entry by 1e-3 off the constraint set.
  double perturbed = 0.0;
};

struct Case2Report {
  std::vector<Case2Row> rows;
  double max_comb = 0.0;       // over comb_d (all rows) and comb_c (b = a rows)
  double max_cross = 0.0;
  double min_perturbed = 0.0;  // sensitivity control
  bool passed(double tol = 1e-10, double sensitivity = 1e-5) const;
};

/// Each sample draws one generic and one b = a instance of ker2_family.
Case2Report case2_identity_check(int samples, Seed seed);

Complex case2_comb_d(const Ker2Entries& e);
Complex case2_comb_c(const Ker2Entries& e);

// ---------------------------------------------------------------------------
// Conjecture campaign

struct CampaignConfig {
  int n_trials = 10000;
  std::uint64_t seed = 1;
  std::vector<int> ker_dims{0, 1, 2, 3, 4};
  bool include_structured = true;
  double tol_disc = 1e-8;
  double tol_center = 1e-7;
  int samples = 256;
  int threads = 0;  // 0: hardware concurrency
  std::string id;   // empty: derived from seed and n_trials
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::string params;  // compact JSON object
  bool structured = false;
  bool expect_circular = false;
  bool admitted = true;  // passed the partial-isometry gate
  DiscFit disc;
  bool circular = false;
  double center_modulus = 0.0;
  std::string classification;
  bool flat_anomaly = false;
  std::string timestamp;
};

struct CampaignSummary {
  std::string id;
  int n_trials = 0;
  int admitted = 0;
  int circular = 0;
  int violations = 0;
  int structured = 0;
  int structured_missed = 0;
  int flat_anomalies = 0;
  double max_center_circular = 0.0;
  double seconds = 0.0;
  bool passed() const { return violations == 0; }
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TrialRecord> records;
  CampaignSummary summary;
};

/// Deterministic timestamp written into records and config.
inline constexpr const char* kCampaignTimestamp = "1970-01-01T00:00:00Z";

std::string campaign_id(const CampaignConfig& config);

/// Rebuilds the matrix of trial `index`; reproduces its record exactly.
ComplexMatrix campaign_trial_matrix(const CampaignConfig& config, int index, std::string* generator = nullptr,
                                    std::string* params = nullptr, bool* structured = nullptr,
                                    bool* expect_circular = nullptr);

/// Partial-isometry gate applied before a trial is fitted.
bool admit_trial(const ComplexMatrix& a);

TrialRecord run_trial(const CampaignConfig& config, int index);

/// Throws std::invalid_argument on n_trials < 1 or an empty kernel list.
CampaignResult conjecture_campaign(const CampaignConfig& config);

/// KIPP_RUNS_DIR when set, otherwise "runs".
std::filesystem::path runs_root();

/// Writes runs/<id>/{config.json, records.jsonl, summary.json}; returns the
/// directory.
std::filesystem::path persist_campaign(const CampaignResult& result, const std::filesystem::path& root);

}  // namespace kipp
