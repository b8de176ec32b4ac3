#include "posmap/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "posmap/errors.hpp"

namespace posmap {

std::string describe_flags(unsigned flags) {
  static const std::pair<unsigned, const char*> names[] = {
      {kFlagWeakRegime, "weak_regime"},       {kFlagOperatorOrder, "operator_order"},
      {kFlagInconclusive, "inconclusive"},    {kFlagThresholdSensitive, "threshold_sensitive"},
      {kFlagUnsupported, "unsupported"},      {kFlagNotDetected, "not_detected"},
  };
  std::string out;
  for (const auto& [bit, name] : names)
    if (flags & bit) {
      if (!out.empty()) out += '|';
      out += name;
    }
  return out;
}

MapEvaluation::MapEvaluation(BipartiteState rho, const DecomposedMap& dec, Subsystem side)
    : rho_(std::move(rho)), side_(side), trace_form_(dec.trace_form()), map_name_(dec.name()) {
  ExtendedImages im = apply_extended(dec, rho_.matrix(), rho_.dims(), side_);
  theta1_ = std::move(im.theta1);
  theta2_ = std::move(im.theta2);
}

const HermitianMatrix& MapEvaluation::other_marginal() const {
  if (!other_) other_ = rho_.reduced(other(side_));
  return *other_;
}

const Spectrum& MapEvaluation::spectrum1() const {
  if (!s1_) s1_ = eig_hermitian(theta1_);
  return *s1_;
}

const Spectrum& MapEvaluation::spectrum2() const {
  if (!s2_) s2_ = eig_hermitian(theta2_);
  return *s2_;
}

const Spectrum& MapEvaluation::difference_spectrum() const {
  if (!sd_) sd_ = eig_hermitian(difference());
  return *sd_;
}

double trace_power(const Spectrum& s, double r) {
  const Index n = s.size();
  double acc = 0;
  if (r >= 1 && r == std::floor(r)) {
    for (Index k = 0; k < n; ++k) acc += std::pow(s.values(k), r);
    return acc;
  }
  const double top = std::max(s.max(), 0.0);
  if (s.min() < -psd_tolerance(s.values.cwiseAbs().maxCoeff()))
    throw DomainError("trace_power: negative eigenvalue with non-integer exponent");
  for (Index k = 0; k < n; ++k) {
    const double l = s.values(k);
    if (l > kRankCutoff * top && l > 0) acc += (r == 0 ? 1.0 : std::pow(l, r));
  }
  return acc;
}

namespace {

CriterionVerdict make(std::string id, double margin, Subsystem side, const CriteriaOptions& opt,
                      std::optional<double> alpha = std::nullopt, std::optional<double> beta = std::nullopt) {
  if (!std::isfinite(margin)) throw ConsistencyError("criterion " + id + ": non-finite margin");
  CriterionVerdict v;
  v.criterion_id = std::move(id);
  v.margin = margin;
  v.passed = margin >= -opt.tolerance;
  v.side = side;
  v.alpha = alpha;
  v.beta = beta;
  return v;
}

// Used when a fractional power meets a non-PSD Theta: the verdict is the operator-order test.
CriterionVerdict deferred(std::string id, const MapEvaluation& ev, const CriteriaOptions& opt,
                          std::optional<double> alpha, std::optional<double> beta) {
  CriterionVerdict pm = check_positive_map(ev, opt);
  CriterionVerdict v = make(std::move(id), pm.margin, ev.side(), opt, alpha, beta);
  v.flags |= kFlagOperatorOrder;
  return v;
}

const TraceForm& require_trace_form(const MapEvaluation& ev, const char* what) {
  if (!ev.trace_form())
    throw ContractViolation(std::string(what) + ": decomposition '" + ev.map_name() +
                            "' has no trace form; use canonical_decomposition");
  const TraceForm& tf = *ev.trace_form();
  if (!(tf.xi > 0) || !(tf.eta > 0)) throw DomainError(std::string(what) + ": trace form needs xi, eta > 0");
  return tf;
}

void require_maximally_mixed(const MapEvaluation& ev, const char* what) {
  if (!is_maximally_mixed(ev.other_marginal()))
    throw ContractViolation(std::string(what) + ": subsystem " + to_string(other(ev.side())) +
                            " is not maximally mixed (apply local_filter first)");
}

SortedSpectrum sorted(const Spectrum& s, size_t pad = 0) { return SortedSpectrum(s.values, pad); }

}  // namespace

bool is_maximally_mixed(const HermitianMatrix& m, double tol) {
  const Index d = m.dim();
  return operator_norm(m - HermitianMatrix::identity(d) * (1.0 / static_cast<double>(d))) <= tol;
}

CriterionVerdict check_positive_map(const MapEvaluation& ev, const CriteriaOptions& opt) {
  return make("positive_map", ev.difference_spectrum().min(), ev.side(), opt);
}

CriterionVerdict check_ppt(const BipartiteState& rho, const CriteriaOptions& opt) {
  return make("ppt", eigenvalues(rho.partial_transpose(Subsystem::B)).minCoeff(), Subsystem::B, opt);
}

CriterionVerdict check_nielsen_kempe(const BipartiteState& rho, Subsystem side, const CriteriaOptions& opt) {
  const auto n = static_cast<size_t>(rho.dim());
  SortedSpectrum x = SortedSpectrum::of(rho.reduced(side), n);
  SortedSpectrum y = SortedSpectrum::of(rho.matrix());
  return make("nielsen_kempe", majorization_margin(x, y), side, opt);
}

CriterionVerdict check_weak_majorization(const MapEvaluation& ev, const CriteriaOptions& opt) {
  return make("weak_majorization", weak_majorization_margin(sorted(ev.spectrum1()), sorted(ev.spectrum2())),
              ev.side(), opt);
}

CriterionVerdict check_moment_inequality(const MapEvaluation& ev, double alpha, const CriteriaOptions& opt) {
  if (!(alpha >= 0)) throw DomainError("moment inequality: alpha must be >= 0");
  CriterionVerdict v;
  try {
    v = make("moment", trace_power(ev.spectrum1(), alpha) - trace_power(ev.spectrum2(), alpha), ev.side(), opt,
             alpha);
  } catch (const DomainError&) {
    v = deferred("moment", ev, opt, alpha, std::nullopt);
  }
  if (alpha < 1) v.flags |= kFlagWeakRegime;
  return v;
}

CriterionVerdict check_renyi_inequality(const MapEvaluation& ev, double alpha, EntropyKind kind,
                                        const CriteriaOptions& opt) {
  if (kind != EntropyKind::renyi && kind != EntropyKind::tsallis)
    throw ContractViolation("renyi inequality: kind must be renyi or tsallis");
  if (!(alpha > 1)) throw DomainError("renyi inequality: requires alpha > 1");
  const std::string id = kind == EntropyKind::renyi ? "renyi" : "tsallis";
  SortedSpectrum x = sorted(ev.spectrum1()), y = sorted(ev.spectrum2());
  try {
    if (power_sum(x, alpha) <= 0 || power_sum(y, alpha) <= 0) {
      CriterionVerdict v = make(id, 0.0, ev.side(), opt, alpha);
      v.flags |= kFlagInconclusive;
      return v;
    }
    return make(id, entropy(y, kind, alpha) - entropy(x, kind, alpha), ev.side(), opt, alpha);
  } catch (const DomainError&) {
    return deferred(id, ev, opt, alpha, std::nullopt);
  }
}

CriterionVerdict check_norm_inequality(const MapEvaluation& ev, const CriteriaOptions& opt) {
  const auto& s1 = ev.spectrum1();
  const auto& s2 = ev.spectrum2();
  const double n1 = std::max(std::abs(s1.max()), std::abs(s1.min()));
  const double n2 = std::max(std::abs(s2.max()), std::abs(s2.min()));
  return make("norm", n1 - n2, ev.side(), opt);
}

CriterionVerdict check_theorem2(const MapEvaluation& ev, double alpha, double beta, Theorem2Variant variant,
                                const CriteriaOptions& opt) {
  const std::string id = variant == Theorem2Variant::i ? "theorem2_i" : "theorem2_ii";
  if (variant == Theorem2Variant::i && !(alpha >= 0 && beta >= 0))
    throw DomainError("theorem2 (i): requires alpha, beta >= 0");
  if (variant == Theorem2Variant::ii && !(alpha > 0 && alpha <= 1 && beta >= 0))
    throw DomainError("theorem2 (ii): requires alpha in (0, 1], beta >= 0");
  try {
    const Spectrum& s1 = ev.spectrum1();
    const Spectrum& s2 = ev.spectrum2();
    HermitianMatrix b = matrix_power(s2, beta);
    double margin;
    if (variant == Theorem2Variant::i) {
      HermitianMatrix a = matrix_power(s1, alpha);
      margin = trace_product(a.matrix(), b.matrix()) - trace_power(s2, alpha + beta);
    } else {
      HermitianMatrix a = matrix_power(s1, -alpha);
      margin = trace_power(s2, beta - alpha) - trace_product(a.matrix(), b.matrix());
    }
    return make(id, margin, ev.side(), opt, alpha, beta);
  } catch (const DomainError&) {
    return deferred(id, ev, opt, alpha, beta);
  }
}

namespace {

std::optional<double> qmax_at(const MapEvaluation& ev, double threshold) {
  const Spectrum& s1 = ev.spectrum1();
  const Matrix& t2 = ev.theta2().matrix();
  for (Index k = 0; k < s1.size(); ++k) {
    const auto v = s1.vectors.col(k);
    const double overlap = (v.adjoint() * t2 * v)(0, 0).real();
    if (overlap > threshold) return s1.values(k);
  }
  return std::nullopt;
}

}  // namespace

QmaxResult compute_qmax(const MapEvaluation& ev, const CriteriaOptions& opt) {
  QmaxResult r;
  r.qmax = qmax_at(ev, opt.overlap_tol);
  const auto& s2 = ev.spectrum2();
  const double norm2 = std::max(std::abs(s2.max()), std::abs(s2.min()));
  if (!r.qmax) {
    r.verdict = make("qmax", 0.0, ev.side(), opt);
    r.verdict.flags |= kFlagInconclusive;
    return r;
  }
  r.verdict = make("qmax", *r.qmax - norm2, ev.side(), opt);
  if (qmax_at(ev, opt.overlap_tol * 10) != r.qmax || qmax_at(ev, opt.overlap_tol / 10) != r.qmax)
    r.verdict.flags |= kFlagThresholdSensitive;
  return r;
}

ChannelEntropyVariant parse_channel_variant(const std::string& s) {
  if (s == "renyi_alpha") return ChannelEntropyVariant::renyi_alpha;
  if (s == "alpha_free") return ChannelEntropyVariant::alpha_free;
  if (s == "von_neumann") return ChannelEntropyVariant::von_neumann;
  if (s == "norm") return ChannelEntropyVariant::norm;
  throw ParseError("unknown channel entropy variant '" + s + "'");
}

const char* to_string(ChannelEntropyVariant v) {
  switch (v) {
    case ChannelEntropyVariant::renyi_alpha: return "renyi_alpha";
    case ChannelEntropyVariant::alpha_free: return "alpha_free";
    case ChannelEntropyVariant::von_neumann: return "von_neumann";
    case ChannelEntropyVariant::norm: return "norm";
  }
  return "?";
}

CriterionVerdict check_channel_entropy(const MapEvaluation& ev, double alpha, ChannelEntropyVariant variant,
                                       const CriteriaOptions& opt) {
  const TraceForm& tf = require_trace_form(ev, "channel entropy");
  const std::string id = std::string("channel_") + to_string(variant);
  HermitianMatrix phi = ev.theta2() * (1.0 / tf.eta);
  const HermitianMatrix& other_marginal = ev.other_marginal();
  const double ratio = tf.eta / tf.xi;
  const double d = static_cast<double>(ev.mapped_dim());
  switch (variant) {
    case ChannelEntropyVariant::von_neumann: {
      double lhs = entropy(phi, EntropyKind::von_neumann, 1) - entropy(other_marginal, EntropyKind::von_neumann, 1);
      return make(id, lhs - std::log(ratio), ev.side(), opt);
    }
    case ChannelEntropyVariant::alpha_free: {
      if (!(alpha >= 0)) throw DomainError("channel entropy: alpha must be >= 0");
      double lhs = entropy(phi, EntropyKind::renyi, alpha) - entropy(other_marginal, EntropyKind::renyi, alpha);
      return make(id, lhs - std::log(ratio), ev.side(), opt, alpha);
    }
    case ChannelEntropyVariant::renyi_alpha: {
      if (!(alpha > 1)) throw DomainError("channel entropy (renyi_alpha): requires alpha > 1");
      double lhs = entropy(phi, EntropyKind::renyi, alpha) - entropy(other_marginal, EntropyKind::renyi, alpha);
      double rhs = std::log(ratio) - std::log(d / ratio) / (alpha - 1);
      return make(id, lhs - rhs, ev.side(), opt, alpha);
    }
    case ChannelEntropyVariant::norm:
      return make(id, operator_norm(other_marginal) - ratio * operator_norm(phi), ev.side(), opt);
  }
  throw ContractViolation("channel entropy: unknown variant");
}

double conditional_entropy(const BipartiteState& rho, Subsystem side) {
  return entropy(rho.matrix(), EntropyKind::von_neumann, 1) - entropy(rho.reduced(side), EntropyKind::von_neumann, 1);
}

BipartiteState local_filter(const BipartiteState& rho, Subsystem side) {
  const Spectrum s = eig_hermitian(rho.reduced(side));
  if (!(s.min() > kRankCutoff * s.max()))
    throw DomainError(std::string("local_filter: subsystem ") + to_string(side) + " is not full rank");
  const Matrix f = matrix_power(s, -0.5).matrix();
  const Dims dims = rho.dims();
  const Matrix big = side == Subsystem::A ? kron(f, Matrix::Identity(dims.b, dims.b))
                                          : kron(Matrix::Identity(dims.a, dims.a), f);
  Matrix out = big * rho.matrix().matrix() * big.adjoint();
  out /= out.trace().real();
  return BipartiteState(HermitianMatrix::hermitian_part(out), dims);
}

WitnessReport tailor_made_witness(const BipartiteState& rho, const DecomposedMap& dec, Subsystem side,
                                  const std::vector<double>& betas, const CriteriaOptions& opt) {
  MapEvaluation ev(rho, dec, side);
  const Spectrum& sd = ev.difference_spectrum();
  WitnessReport r;
  r.lambda_minus = sd.min();
  r.detected = r.lambda_minus < -opt.tolerance;
  if (!r.detected) r.flags |= kFlagNotDetected;

  Matrix p = Matrix::Zero(rho.dim(), rho.dim());
  for (Index k = 0; k < sd.size(); ++k)
    if (std::abs(sd.values(k) - r.lambda_minus) <= 1e-9) {
      p += sd.vectors.col(k) * sd.vectors.col(k).adjoint();
      ++r.projector_rank;
    }
  HermitianMatrix pm = HermitianMatrix::hermitian_part(p / static_cast<double>(r.projector_rank));
  r.witness = apply_extended(dec.lambda1().adjoint(), pm, rho.dims(), side) -
              apply_extended(dec.lambda2().adjoint(), pm, rho.dims(), side);
  r.mean_value = trace_product(r.witness.matrix(), rho.matrix().matrix());

  const HermitianMatrix diff = ev.difference();
  const double top = ev.spectrum2().max();
  for (double beta : betas) {
    WitnessSeriesPoint pt;
    pt.beta = beta;
    pt.raw = trace_product(diff.matrix(), matrix_power(ev.spectrum2(), beta).matrix());
    pt.normalized = top > 0 ? pt.raw / std::pow(top, beta) : pt.raw;
    r.approximation_series.push_back(pt);
  }
  return r;
}

EquivalenceVerdicts check_maximally_mixed_equivalence(const MapEvaluation& ev, const CriteriaOptions& opt) {
  const TraceForm& tf = require_trace_form(ev, "maximally mixed equivalence");
  require_maximally_mixed(ev, "maximally mixed equivalence");
  const double flat = tf.xi / static_cast<double>(ev.other_dim());
  const auto n = static_cast<size_t>(ev.state().dim());
  EquivalenceVerdicts out;
  out.v_map = check_positive_map(ev, opt);
  SortedSpectrum x(std::vector<double>(n, flat));
  out.v_submaj = make("mm_weak_majorization", weak_majorization_margin(x, sorted(ev.spectrum2())), ev.side(), opt);
  const auto& s2 = ev.spectrum2();
  out.v_norm = make("mm_norm", flat - std::max(std::abs(s2.max()), std::abs(s2.min())), ev.side(), opt);
  return out;
}

Aeq1Beq1Verdicts check_aeq1_beq1(const MapEvaluation& ev, int n, const CriteriaOptions& opt) {
  if (n < 2) throw DomainError("aeq1/beq1: n must be >= 2");
  const TraceForm& tf = require_trace_form(ev, "aeq1/beq1");
  require_maximally_mixed(ev, "aeq1/beq1");
  const double t = tf.xi / static_cast<double>(ev.other_dim());
  const Spectrum& s2 = ev.spectrum2();
  double worst = std::numeric_limits<double>::infinity();
  for (int beta = 2; beta <= n; ++beta)
    worst = std::min(worst, t * trace_power(s2, beta - 1) - trace_power(s2, beta));
  Aeq1Beq1Verdicts out;
  out.v_a = make("aeq1", worst, ev.side(), opt, 1.0, static_cast<double>(n));
  out.v_b = make("beq1", std::pow(t, n - 1) * trace_power(s2, 1) - trace_power(s2, n), ev.side(), opt,
                 static_cast<double>(n - 1), 1.0);
  return out;
}

CriterionVerdict check_channel_majorization(const MapEvaluation& ev, const CriteriaOptions& opt) {
  const TraceForm& tf = require_trace_form(ev, "channel majorization");
  const auto n = static_cast<size_t>(ev.state().dim());
  SortedSpectrum x = SortedSpectrum::of(ev.other_marginal(), n);
  SortedSpectrum y(RealVector(ev.spectrum2().values / tf.eta));
  CriterionVerdict v = make("channel_majorization", majorization_margin(x, y), ev.side(), opt);
  if (tf.eta < tf.xi) v.flags |= kFlagUnsupported;
  return v;
}

}  // namespace posmap
