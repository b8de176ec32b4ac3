#pragma once

#include <string>
#include <vector>

#include "posmap/hermitian.hpp"

namespace posmap {

// Descending real vector, zero-padded to a declared length.
class SortedSpectrum {
 public:
  SortedSpectrum() = default;
  explicit SortedSpectrum(std::vector<double> values, size_t padded_length = 0);
  explicit SortedSpectrum(const RealVector& values, size_t padded_length = 0);
  static SortedSpectrum of(const HermitianMatrix& m, size_t padded_length = 0);

  const std::vector<double>& values() const { return v_; }
  size_t size() const { return v_.size(); }
  double operator[](size_t k) const { return v_[k]; }
  double sum() const;
  double abs_sum() const;

 private:
  std::vector<double> v_;
};

// min_k (X_k - Y_k) over descending partial sums, k = 0..n-1.
double weak_majorization_margin(const SortedSpectrum& x, const SortedSpectrum& y);
// min(partial-sum slack for k = 0..n-2, -|sum x - sum y|).
double majorization_margin(const SortedSpectrum& x, const SortedSpectrum& y);

double majorization_tolerance(const SortedSpectrum& x);  // 1e-10 * max(1, sum |x|)
bool weak_majorizes(const SortedSpectrum& x, const SortedSpectrum& y);
bool weak_majorizes(const SortedSpectrum& x, const SortedSpectrum& y, double tol);
bool majorizes(const SortedSpectrum& x, const SortedSpectrum& y);
bool majorizes(const SortedSpectrum& x, const SortedSpectrum& y, double tol);

enum class EntropyKind { moment, renyi, tsallis, arimoto, von_neumann };

EntropyKind parse_entropy_kind(const std::string& s);
const char* to_string(EntropyKind k);

// f_alpha(x) = sum x_i^alpha over strictly positive entries (0^0 := 0, so f_0 counts
// entries above kRankCutoff * max x).  Natural log everywhere.
double power_sum(const SortedSpectrum& x, double alpha);
double entropy(const SortedSpectrum& x, EntropyKind kind, double alpha);
double entropy(const HermitianMatrix& m, EntropyKind kind, double alpha);

}  // namespace posmap
