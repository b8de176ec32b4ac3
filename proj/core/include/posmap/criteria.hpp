#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posmap/majorization.hpp"
#include "posmap/maps.hpp"
#include "posmap/states.hpp"

namespace posmap {

enum VerdictFlag : unsigned {
  kFlagWeakRegime = 1u << 0,          // moment inequality with alpha < 1
  kFlagOperatorOrder = 1u << 1,       // fractional power of a non-PSD Theta; verdict from the operator test
  kFlagInconclusive = 1u << 2,        // q_max undefined / empty support
  kFlagThresholdSensitive = 1u << 3,  // q_max changes within a 10x overlap-threshold sweep
  kFlagUnsupported = 1u << 4,         // channel majorization with eta < xi
  kFlagNotDetected = 1u << 5,         // witness requested for a state the map does not detect
};

std::string describe_flags(unsigned flags);

struct CriterionVerdict {
  std::string criterion_id;
  bool passed = true;
  double margin = 0;  // negative = violated
  Subsystem side = Subsystem::B;
  std::optional<double> alpha;
  std::optional<double> beta;
  unsigned flags = 0;
};

struct CriteriaOptions {
  double tolerance = 1e-9;     // passed <=> margin >= -tolerance
  double overlap_tol = 1e-10;  // q_max "nonzero mean value" threshold
};

// Theta_1(rho), Theta_2(rho) for one (state, decomposition, side), with spectra
// computed on first use.  Not safe for concurrent use of a single instance.
class MapEvaluation {
 public:
  MapEvaluation(BipartiteState rho, const DecomposedMap& dec, Subsystem side = Subsystem::B);

  const BipartiteState& state() const { return rho_; }
  Subsystem side() const { return side_; }
  Index mapped_dim() const { return rho_.dims().of(side_); }
  Index other_dim() const { return rho_.dims().of(other(side_)); }
  const std::optional<TraceForm>& trace_form() const { return trace_form_; }
  const std::string& map_name() const { return map_name_; }

  const HermitianMatrix& theta1() const { return theta1_; }
  const HermitianMatrix& theta2() const { return theta2_; }
  HermitianMatrix difference() const { return theta1_ - theta2_; }
  // reduced state of the subsystem the map does not act on
  const HermitianMatrix& other_marginal() const;

  const Spectrum& spectrum1() const;
  const Spectrum& spectrum2() const;
  const Spectrum& difference_spectrum() const;

 private:
  BipartiteState rho_;
  Subsystem side_;
  std::optional<TraceForm> trace_form_;
  std::string map_name_;
  HermitianMatrix theta1_;
  HermitianMatrix theta2_;
  mutable std::optional<HermitianMatrix> other_;
  mutable std::optional<Spectrum> s1_, s2_, sd_;
};

// Tr M^r from a spectrum, with the same pseudo-power convention as matrix_power.
double trace_power(const Spectrum& s, double r);

CriterionVerdict check_positive_map(const MapEvaluation& ev, const CriteriaOptions& opt = {});
CriterionVerdict check_ppt(const BipartiteState& rho, const CriteriaOptions& opt = {});
CriterionVerdict check_nielsen_kempe(const BipartiteState& rho, Subsystem side, const CriteriaOptions& opt = {});
CriterionVerdict check_weak_majorization(const MapEvaluation& ev, const CriteriaOptions& opt = {});
CriterionVerdict check_moment_inequality(const MapEvaluation& ev, double alpha, const CriteriaOptions& opt = {});
// kind is renyi or tsallis; alpha > 1 (for alpha <= 1 the inequality is not
// implied by the moment inequality on unnormalised Theta).
CriterionVerdict check_renyi_inequality(const MapEvaluation& ev, double alpha, EntropyKind kind,
                                        const CriteriaOptions& opt = {});
CriterionVerdict check_norm_inequality(const MapEvaluation& ev, const CriteriaOptions& opt = {});

enum class Theorem2Variant { i, ii };
CriterionVerdict check_theorem2(const MapEvaluation& ev, double alpha, double beta, Theorem2Variant variant,
                                const CriteriaOptions& opt = {});

struct QmaxResult {
  std::optional<double> qmax;
  CriterionVerdict verdict;
};
QmaxResult compute_qmax(const MapEvaluation& ev, const CriteriaOptions& opt = {});

enum class ChannelEntropyVariant { renyi_alpha, alpha_free, von_neumann, norm };
ChannelEntropyVariant parse_channel_variant(const std::string& s);
const char* to_string(ChannelEntropyVariant v);
// Phi = Lambda2 / eta applied on the mapped side; requires a trace-form decomposition.
CriterionVerdict check_channel_entropy(const MapEvaluation& ev, double alpha, ChannelEntropyVariant variant,
                                       const CriteriaOptions& opt = {});

// S(rho) - S(rho_side).
double conditional_entropy(const BipartiteState& rho, Subsystem side);

// (rho_s^{-1/2} (x) 1) rho (rho_s^{-1/2} (x) 1), renormalised; side s must be full rank.
BipartiteState local_filter(const BipartiteState& rho, Subsystem side);

struct WitnessSeriesPoint {
  double beta = 0;
  double raw = 0;         // Tr{[I (x) Lambda](rho) Theta_2^beta}
  double normalized = 0;  // raw / lambda_max(Theta_2)^beta
};

struct WitnessReport {
  HermitianMatrix witness;
  double mean_value = 0;
  double lambda_minus = 0;
  Index projector_rank = 0;
  bool detected = false;
  unsigned flags = 0;
  std::vector<WitnessSeriesPoint> approximation_series;
};

// W = [I (x) Lambda^+](P_- / rank P_-), P_- the eigenprojector of the minimal eigenvalue.
WitnessReport tailor_made_witness(const BipartiteState& rho, const DecomposedMap& dec, Subsystem side,
                                  const std::vector<double>& betas = {}, const CriteriaOptions& opt = {});

struct EquivalenceVerdicts {
  CriterionVerdict v_map;
  CriterionVerdict v_submaj;
  CriterionVerdict v_norm;
  bool agree() const { return v_map.passed == v_submaj.passed && v_map.passed == v_norm.passed; }
};
EquivalenceVerdicts check_maximally_mixed_equivalence(const MapEvaluation& ev, const CriteriaOptions& opt = {});

struct Aeq1Beq1Verdicts {
  CriterionVerdict v_a;
  CriterionVerdict v_b;
};
Aeq1Beq1Verdicts check_aeq1_beq1(const MapEvaluation& ev, int n, const CriteriaOptions& opt = {});

CriterionVerdict check_channel_majorization(const MapEvaluation& ev, const CriteriaOptions& opt = {});

bool is_maximally_mixed(const HermitianMatrix& m, double tol = 1e-8);

}  // namespace posmap
