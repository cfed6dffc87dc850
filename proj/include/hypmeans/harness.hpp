#pragma once

// Verification suites over an experiment configuration, and the CSV / JSON
// report writers used by the command-line tool.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypmeans/ball_geometry.hpp"
#include "hypmeans/fields.hpp"

namespace hypmeans {

/// Malformed or inconsistent configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Radii s_per_x geometric in [max(s_min, d + r + gap), s_max] for each x at
/// geodesic distance d along e_1.
struct GridSpec {
  std::vector<double> x_distances;
  int s_per_x = 4;
  double s_min = 1.2;
  double s_max = 3.0;
  double gap = 0.01;
};

struct ExperimentConfig {
  std::uint64_t seed = 20240611;
  AnnulusSpec annulus = AnnulusSpec::unbounded(0.5);

  struct Sufficiency {
    std::vector<int> dims{2, 3};
    int k_max_2d = 4;
    int k_max_3d = 3;
    int order_2d = 128;
    int order_3d = 24;
    GridSpec grid{{0.0, 0.1, 0.2, 0.3, 0.4}, 4, 1.2, 3.0, 0.01};
    double vanish_tol_2d = 1e-8;
    double vanish_tol_3d = 1e-7;
    /// Explicit C_1..C_k per degree k; degrees not listed draw random coefficients.
    std::vector<std::pair<int, std::vector<double>>> coefficients;
  } sufficiency;

  struct Necessity {
    int n = 2;
    int k_max = 3;
    int m_min = -5;
    int m_max = 5;
    int order = 256;
    GridSpec grid{{0.0, 0.25, 0.5, 1.0, 1.5}, 8, 0.0, 6.0, 0.011};  // s_max is d + 6
    double null_tol = 1e-8;
    double angle_tol = 1e-6;
    int precondition_samples = 400;
  } necessity;

  struct Algebra {
    int n_max = 5;
    int k_max = 6;
    int random_profiles = 200;
    int m_range = 10;
    int xp_identity_points = 50;
    int xp_identity_k_max = 3;
    double xp_identity_tol = 1e-10;
    int shift_k_max = 5;
    double shift_tol = 1e-9;
  } algebra;

  struct Darboux {
    int order = 128;
    double h = 1e-3;
    int k_max = 3;
    int random_functions = 5;
    double tol = 1e-6;
  } darboux;

  struct Ode {
    std::vector<int> dims{2, 3};
    int order_2d = 1024;
    int order_3d = 384;
    int k_max = 2;
    double center_distance = 4.5;
    double s_min = 1.5;
    double s_max = 3.5;
    int points = 41;
    double tol = 1e-5;
    double constant_tol = 1e-12;
  } ode;

  struct Decay {
    double s_min = 3.0;
    double s_max = 6.0;
    int samples = 61;
    int k_max = 3;
    double tol = 0.02;
    int indicial_k_max = 6;
    double indicial_tol = 1e-12;
  } decay;

  struct Support {
    double bump_radius = 0.8;
    double step = 0.05;
    double r_max = 1.5;
    int order = 256;
    double vanish_tol = 1e-12;
  } support;

  /// Parses key = value lines grouped in [section] blocks. Unknown sections or
  /// keys and unparsable values raise ConfigError.
  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig load(const std::filesystem::path& path);

  /// Flattened "section.key = value" lines, in a fixed order.
  std::vector<std::string> echo() const;
};

/// One checked quantity. Unused integer columns hold -1 and are written empty.
struct Record {
  std::string experiment;
  int n = -1;
  int k = -1;
  int j = -1;
  int i = -1;
  std::vector<double> x;
  std::optional<double> s;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Record> records;
  std::vector<std::string> notes;

  /// Appends a record with pass = value <= tolerance (NaN fails).
  Record& check(Record r);
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !records.empty(); }
};

SuiteReport run_sufficiency(const ExperimentConfig& cfg);
SuiteReport run_necessity_scan(const ExperimentConfig& cfg);
SuiteReport run_algebra_suite(const ExperimentConfig& cfg);
SuiteReport run_darboux(const ExperimentConfig& cfg);
SuiteReport run_ode(const ExperimentConfig& cfg);
SuiteReport run_decay(const ExperimentConfig& cfg);
SuiteReport run_support(const ExperimentConfig& cfg);

/// Null space of the mean map for one (n, k): coefficient vectors over the
/// dictionary rho^m_min .. rho^m_max, plus the singular values.
struct NullSpace {
  int n;
  int k;
  int m_min;
  std::vector<std::vector<double>> basis;
  std::vector<double> singular_values;  // of the preconditioned map, descending
  double max_angle;                     // largest principal angle to the family span
};

NullSpace necessity_null_space(const ExperimentConfig& cfg, int k);

struct SupportResult {
  std::optional<double> r_hat;  // empty: no grid radius up to r_max qualified
  bool zero_outside = false;
  double max_outside = 0.0;
  std::string verdict;
};

/// Smallest r on the grid starting at r_start such that every sampled
/// admissible mean for Ann(r, inf) is below vanish_tol, then whether f is
/// numerically zero outside B_r(0).
SupportResult detect_support(const ExperimentConfig& cfg, const BallFunction& f, int n, double r_start);

/// Smooth radial bump exp(-1 / (1 - (d/radius)^2)) for d = d(0, y) < radius.
BallFunction radial_bump(double radius);

enum class Suite { sufficiency, necessity, algebra, darboux, ode, decay, support };

std::vector<Suite> all_suites();
std::string suite_name(Suite s);
SuiteReport run_suite(Suite s, const ExperimentConfig& cfg);

enum class Format { csv, json };

/// Report body: config echo, records and summary. Identical inputs give
/// identical bytes.
void write_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<SuiteReport>& reports);
void write_json(std::ostream& out, const ExperimentConfig& cfg, const std::vector<SuiteReport>& reports,
                const std::string& generated);

/// CSV field quoting per RFC 4180.
std::string csv_field(const std::string& s);
/// Shortest round-trippable decimal form.
std::string format_number(double v);

}  // namespace hypmeans
