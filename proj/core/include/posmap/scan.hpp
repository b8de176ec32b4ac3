#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posmap/criterion_spec.hpp"

namespace posmap {

// Inclusive linspace: points values from lo to hi.
struct Axis {
  std::string name;
  double lo = 0;
  double hi = 1;
  int points = 1;

  double at(int i) const;
  static Axis parse(const std::string& text);  // "name=lo:hi:points"
  static Axis from_step(std::string name, double lo, double hi, double step);
};

// Families and their parameters:
//   rot_invariant      p, q, r, s   (exactly one left out; it is 1 minus the rest)
//   isotropic          d (default 4), p
//   two_qubit          a, q
//   random_separable   dA, dB, terms, sample (index; state seeded from seed + sample)
//   random_rot_invariant  sample
struct FamilySpec {
  std::string name;
  std::map<std::string, double> fixed;
  std::vector<Axis> axes;

  // "name" or "name:key=value,..." for the fixed parameters.
  static FamilySpec parse(const std::string& text);
};

Dims family_dims(const FamilySpec& f);
// nullopt for infeasible parameter points (e.g. outside the simplex).
std::optional<BipartiteState> family_state(const FamilySpec& f, const std::map<std::string, double>& params,
                                           std::uint64_t seed);

struct ScanConfig {
  FamilySpec family;
  std::string map = "transposition";
  std::string decomposition = "canonical";
  Subsystem side = Subsystem::B;
  std::vector<CriterionSpec> criteria;
  std::optional<CriterionSpec> reference;  // defaults to positive_map
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int workers = 1;

  void validate() const;
  CriterionSpec reference_or_default() const;
};

struct PointRecord {
  size_t index = 0;  // row-major grid index, first axis slowest
  std::vector<double> params;
  // verdicts[c] holds the verdicts of criteria[c]
  std::vector<std::vector<CriterionVerdict>> verdicts;
  bool reference_violated = false;

  bool passed(size_t criterion) const;
};

struct CriterionSummary {
  std::string label;
  double total_power = 0;
  size_t violated = 0;
  double detection_fraction = 0;  // violated / evaluated points
  double reference_fraction = 0;  // violated / reference-violated, 0 if the reference detects nothing
};

struct ScanReport {
  std::vector<std::string> param_names;
  std::vector<CriterionSpec> criteria;
  std::vector<PointRecord> points;  // feasible points in grid order
  size_t grid_size = 0;
  size_t skipped_infeasible = 0;
  std::string reference_label;
  size_t reference_violated = 0;
  std::vector<CriterionSummary> summary;

  size_t evaluated() const { return points.size(); }
  // index into criteria of the criterion with this label, or nullopt
  std::optional<size_t> find(const std::string& label) const;
};

ScanReport run_scan(const ScanConfig& cfg);

// Region label at total power n: S (positive map), R (theorem2 alpha=1,
// beta=n-1), N (theorem2 alpha=n-1, beta=1), M (moment alpha=n).  A point gets the
// label of the smallest of these pass-sets containing it, "none" if it passes none.
std::vector<std::string> classify_regions(const ScanReport& report, int n);
std::vector<CriterionSpec> region_criteria(int n);  // {M, N, R, S}

inline constexpr const char* kPointsCsvVersion = "posmap-scan-points v1";
inline constexpr const char* kFractionsCsvVersion = "posmap-scan-fractions v1";
inline constexpr const char* kRegionsCsvVersion = "posmap-regions v1";
inline constexpr const char* kPowerTableVersion = "posmap-power-table v1";

void write_points_csv(std::ostream& out, const ScanReport& report, const ScanConfig& cfg);
void write_fractions_csv(std::ostream& out, const ScanReport& report, const ScanConfig& cfg);
void write_regions_csv(std::ostream& out, const ScanReport& report, int n);
// One row per total power, one fraction column per labelled report.
void write_power_table(std::ostream& out, const std::vector<std::pair<std::string, ScanReport>>& reports,
                       bool use_reference_fraction = false);

}  // namespace posmap
