#include "posmap/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "posmap/errors.hpp"

namespace posmap {

SortedSpectrum::SortedSpectrum(std::vector<double> values, size_t padded_length) : v_(std::move(values)) {
  if (padded_length != 0) {
    if (padded_length < v_.size()) throw DimensionMismatch("SortedSpectrum: padded length shorter than input");
    v_.resize(padded_length, 0.0);
  }
  std::sort(v_.begin(), v_.end(), std::greater<>());
}

SortedSpectrum::SortedSpectrum(const RealVector& values, size_t padded_length)
    : SortedSpectrum(std::vector<double>(values.data(), values.data() + values.size()), padded_length) {}

SortedSpectrum SortedSpectrum::of(const HermitianMatrix& m, size_t padded_length) {
  return SortedSpectrum(eigenvalues(m), padded_length);
}

double SortedSpectrum::sum() const { return std::accumulate(v_.begin(), v_.end(), 0.0); }

double SortedSpectrum::abs_sum() const {
  double s = 0;
  for (double x : v_) s += std::abs(x);
  return s;
}

namespace {

void check_lengths(const SortedSpectrum& x, const SortedSpectrum& y) {
  if (x.size() != y.size() || x.size() == 0)
    throw DimensionMismatch("majorization: spectra must have equal, non-zero padded lengths");
}

}  // namespace

double weak_majorization_margin(const SortedSpectrum& x, const SortedSpectrum& y) {
  check_lengths(x, y);
  double sx = 0, sy = 0, m = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    m = std::min(m, sx - sy);
  }
  return m;
}

double majorization_margin(const SortedSpectrum& x, const SortedSpectrum& y) {
  check_lengths(x, y);
  double sx = 0, sy = 0, m = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k + 1 < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    m = std::min(m, sx - sy);
  }
  return std::min(m, -std::abs(x.sum() - y.sum()));
}

double majorization_tolerance(const SortedSpectrum& x) { return 1e-10 * std::max(1.0, x.abs_sum()); }

bool weak_majorizes(const SortedSpectrum& x, const SortedSpectrum& y, double tol) {
  return weak_majorization_margin(x, y) >= -tol;
}

bool weak_majorizes(const SortedSpectrum& x, const SortedSpectrum& y) {
  return weak_majorizes(x, y, majorization_tolerance(x));
}

bool majorizes(const SortedSpectrum& x, const SortedSpectrum& y, double tol) {
  return majorization_margin(x, y) >= -tol;
}

bool majorizes(const SortedSpectrum& x, const SortedSpectrum& y) { return majorizes(x, y, majorization_tolerance(x)); }

EntropyKind parse_entropy_kind(const std::string& s) {
  if (s == "moment") return EntropyKind::moment;
  if (s == "renyi") return EntropyKind::renyi;
  if (s == "tsallis") return EntropyKind::tsallis;
  if (s == "arimoto") return EntropyKind::arimoto;
  if (s == "von_neumann") return EntropyKind::von_neumann;
  throw ParseError("unknown entropy kind '" + s + "'");
}

const char* to_string(EntropyKind k) {
  switch (k) {
    case EntropyKind::moment: return "moment";
    case EntropyKind::renyi: return "renyi";
    case EntropyKind::tsallis: return "tsallis";
    case EntropyKind::arimoto: return "arimoto";
    case EntropyKind::von_neumann: return "von_neumann";
  }
  return "?";
}

namespace {

// Entries treated as exact zeros; throws on negatives beyond tolerance.
std::vector<double> support(const SortedSpectrum& x) {
  if (x.size() == 0) throw DimensionMismatch("entropy: empty spectrum");
  const double top = std::max(x[0], 0.0);
  const double neg_tol = kPsdTol * std::max(1.0, top);
  if (x[x.size() - 1] < -neg_tol) throw DomainError("entropy: spectrum has a negative entry");
  std::vector<double> s;
  for (double v : x.values())
    if (v > kRankCutoff * top && v > 0) s.push_back(v);
  return s;
}

double von_neumann(const std::vector<double>& s) {
  double h = 0;
  for (double v : s) h -= v * std::log(v);
  return h;
}

// log sum x^alpha, computed with a max shift so alpha ~ 200 does not underflow.
double log_power_sum(const std::vector<double>& s, double alpha) {
  if (s.empty()) return -std::numeric_limits<double>::infinity();
  double lmax = std::log(s.front());
  double acc = 0;
  for (double v : s) acc += std::exp(alpha * (std::log(v) - lmax));
  return alpha * lmax + std::log(acc);
}

}  // namespace

double power_sum(const SortedSpectrum& x, double alpha) {
  if (alpha < 0) throw DomainError("power_sum: alpha must be >= 0");
  auto s = support(x);
  if (alpha == 0) return static_cast<double>(s.size());
  double f = 0;
  for (double v : s) f += std::pow(v, alpha);
  return f;
}

double entropy(const SortedSpectrum& x, EntropyKind kind, double alpha) {
  if (alpha < 0) throw DomainError("entropy: alpha must be >= 0");
  auto s = support(x);
  switch (kind) {
    case EntropyKind::moment:
      return power_sum(x, alpha);
    case EntropyKind::von_neumann:
      return von_neumann(s);
    case EntropyKind::renyi:
      if (alpha == 1) return von_neumann(s);
      if (alpha == 0) return std::log(static_cast<double>(s.size()));
      return log_power_sum(s, alpha) / (1 - alpha);
    case EntropyKind::tsallis:
      if (alpha == 1) return von_neumann(s);
      return (power_sum(x, alpha) - 1) / (1 - alpha);
    case EntropyKind::arimoto: {
      if (alpha == 1) return von_neumann(s);
      if (alpha == 0) throw DomainError("entropy: Arimoto entropy needs alpha > 0");
      double f = power_sum(x, 1 / alpha);
      return (std::pow(f, alpha) - 1) / (alpha - 1);
    }
  }
  return 0;
}

double entropy(const HermitianMatrix& m, EntropyKind kind, double alpha) {
  return entropy(SortedSpectrum::of(m), kind, alpha);
}

}  // namespace posmap
