#include "posmap/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "posmap/errors.hpp"

namespace posmap {

double Axis::at(int i) const {
  if (points <= 1) return lo;
  if (i == points - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

Axis Axis::parse(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("grid axis must be name=lo:hi:points, got '" + text + "'");
  Axis a;
  a.name = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  std::replace(rest.begin(), rest.end(), ':', ' ');
  std::istringstream is(rest);
  std::string extra;
  if (!(is >> a.lo >> a.hi >> a.points) || (is >> extra))
    throw ParseError("grid axis must be name=lo:hi:points, got '" + text + "'");
  if (a.points < 1) throw ParseError("grid axis '" + a.name + "' needs at least one point");
  return a;
}

Axis Axis::from_step(std::string name, double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw ContractViolation("Axis::from_step: need step > 0 and hi >= lo");
  Axis a;
  a.name = std::move(name);
  a.lo = lo;
  a.hi = hi;
  a.points = static_cast<int>(std::llround((hi - lo) / step)) + 1;
  return a;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec f;
  auto colon = text.find(':');
  f.name = text.substr(0, colon);
  if (colon == std::string::npos) return f;
  std::istringstream is(text.substr(colon + 1));
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("family parameter must be key=value: '" + item + "'");
    try {
      size_t pos = 0;
      const std::string val = item.substr(eq + 1);
      f.fixed[item.substr(0, eq)] = std::stod(val, &pos);
      if (pos != val.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("family parameter '" + item + "' is not numeric");
    }
  }
  return f;
}

namespace {

const std::map<std::string, std::vector<std::string>>& family_params() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"rot_invariant", {"p", "q", "r", "s"}},
      {"isotropic", {"d", "p"}},
      {"two_qubit", {"a", "q"}},
      {"random_separable", {"dA", "dB", "terms", "sample"}},
      {"random_rot_invariant", {"sample"}},
  };
  return m;
}

double get(const std::map<std::string, double>& p, const std::string& key, std::optional<double> fallback = {}) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw ContractViolation("family parameter '" + key + "' missing");
}

Index as_index(double v, const char* what) {
  if (v != std::floor(v) || v < 1) throw ContractViolation(std::string(what) + " must be a positive integer");
  return static_cast<Index>(v);
}

}  // namespace

Dims family_dims(const FamilySpec& f) {
  if (f.name == "rot_invariant" || f.name == "random_rot_invariant") return {4, 4};
  if (f.name == "two_qubit") return {2, 2};
  if (f.name == "isotropic") {
    Index d = as_index(get(f.fixed, "d", 4.0), "d");
    return {d, d};
  }
  if (f.name == "random_separable")
    return {as_index(get(f.fixed, "dA", 2.0), "dA"), as_index(get(f.fixed, "dB", 2.0), "dB")};
  throw ParseError("unknown family '" + f.name + "'");
}

std::optional<BipartiteState> family_state(const FamilySpec& f, const std::map<std::string, double>& p,
                                           std::uint64_t seed) {
  if (f.name == "rot_invariant") {
    static const char* names[] = {"p", "q", "r", "s"};
    double w[4];
    int missing = -1;
    double given = 0;
    for (int k = 0; k < 4; ++k) {
      auto it = p.find(names[k]);
      if (it == p.end()) {
        if (missing >= 0) throw ContractViolation("rot_invariant: give three of p, q, r, s");
        missing = k;
      } else {
        w[k] = it->second;
        if (w[k] < 0) return std::nullopt;
        given += w[k];
      }
    }
    if (missing < 0) {
      if (std::abs(given - 1) > 1e-12) return std::nullopt;
    } else {
      w[missing] = 1 - given;
      if (w[missing] < -1e-12) return std::nullopt;
      w[missing] = std::max(w[missing], 0.0);
    }
    return rot_invariant_state(w[0], w[1], w[2], w[3]);
  }
  if (f.name == "isotropic") {
    const Index d = as_index(get(p, "d", 4.0), "d");
    const double pp = get(p, "p");
    const double dd = static_cast<double>(d);
    if (pp > 1 || pp < -1 / (dd * dd - 1)) return std::nullopt;
    return isotropic_state(d, pp);
  }
  if (f.name == "two_qubit") {
    const double a = get(p, "a"), q = get(p, "q");
    if (a < 0 || a > 1 || q < 0 || q > 1) return std::nullopt;
    return two_qubit_family(a, q);
  }
  if (f.name == "random_separable") {
    Rng rng(seed, static_cast<std::uint64_t>(get(p, "sample", 0.0)));
    return random_separable(as_index(get(p, "dA", 2.0), "dA"), as_index(get(p, "dB", 2.0), "dB"),
                            static_cast<int>(as_index(get(p, "terms", 4.0), "terms")), rng);
  }
  if (f.name == "random_rot_invariant") {
    Rng rng(seed, static_cast<std::uint64_t>(get(p, "sample", 0.0)));
    return random_rot_invariant(rng);
  }
  throw ParseError("unknown family '" + f.name + "'");
}

void ScanConfig::validate() const {
  auto it = family_params().find(family.name);
  if (it == family_params().end()) throw ParseError("unknown family '" + family.name + "'");
  const auto& allowed = it->second;
  std::set<std::string> seen;
  for (const auto& [k, v] : family.fixed) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw ParseError("family '" + family.name + "' has no parameter '" + k + "'");
    seen.insert(k);
  }
  if (family.axes.empty()) throw ContractViolation("scan: at least one swept axis required");
  for (const auto& a : family.axes) {
    if (std::find(allowed.begin(), allowed.end(), a.name) == allowed.end())
      throw ParseError("family '" + family.name + "' has no parameter '" + a.name + "'");
    if (!seen.insert(a.name).second) throw ParseError("parameter '" + a.name + "' given twice");
    if (a.points < 1) throw ContractViolation("scan: axis '" + a.name + "' is empty");
  }
  if (criteria.empty()) throw ContractViolation("scan: criteria list is empty");
  if (workers < 1) throw ContractViolation("scan: workers must be >= 1");
  if (!(tolerance >= 0)) throw ContractViolation("scan: tolerance must be >= 0");
}

CriterionSpec ScanConfig::reference_or_default() const {
  return reference ? *reference : CriterionSpec{};
}

bool PointRecord::passed(size_t criterion) const {
  for (const auto& v : verdicts[criterion])
    if (!v.passed) return false;
  return true;
}

std::optional<size_t> ScanReport::find(const std::string& label) const {
  for (size_t c = 0; c < criteria.size(); ++c)
    if (criteria[c].label() == label) return c;
  return std::nullopt;
}

ScanReport run_scan(const ScanConfig& cfg) {
  cfg.validate();
  const Dims dims = family_dims(cfg.family);
  const CriterionSpec reference = cfg.reference_or_default();
  const bool needs_map = reference.needs_map() || std::any_of(cfg.criteria.begin(), cfg.criteria.end(),
                                                              [](const auto& c) { return c.needs_map(); });
  std::optional<DecomposedMap> dec;
  if (needs_map) dec = resolve_decomposition(cfg.map, cfg.decomposition, dims.of(cfg.side));

  CriteriaOptions opt;
  opt.tolerance = cfg.tolerance;

  size_t total = 1;
  for (const auto& a : cfg.family.axes) total *= static_cast<size_t>(a.points);

  std::vector<std::optional<PointRecord>> results(total);
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      std::map<std::string, double> params = cfg.family.fixed;
      for (size_t idx = next++; idx < total; idx = next++) {
        PointRecord rec;
        rec.index = idx;
        rec.params.resize(cfg.family.axes.size());
        size_t rem = idx;
        for (size_t k = cfg.family.axes.size(); k-- > 0;) {
          const auto& ax = cfg.family.axes[k];
          const auto i = static_cast<int>(rem % static_cast<size_t>(ax.points));
          rem /= static_cast<size_t>(ax.points);
          rec.params[k] = ax.at(i);
          params[ax.name] = rec.params[k];
        }
        auto state = family_state(cfg.family, params, cfg.seed);
        if (!state) continue;
        std::optional<MapEvaluation> ev;
        if (dec) ev.emplace(*state, *dec, cfg.side);
        const MapEvaluation* evp = ev ? &*ev : nullptr;
        for (const auto& c : cfg.criteria) rec.verdicts.push_back(evaluate_criterion(c, *state, evp, cfg.side, opt));
        for (const auto& v : evaluate_criterion(reference, *state, evp, cfg.side, opt))
          if (!v.passed) rec.reference_violated = true;
        results[idx] = std::move(rec);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next = total;
    }
  };

  const size_t nthreads = std::min(static_cast<size_t>(cfg.workers), std::max<size_t>(total, 1));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  ScanReport report;
  for (const auto& a : cfg.family.axes) report.param_names.push_back(a.name);
  report.criteria = cfg.criteria;
  report.grid_size = total;
  report.reference_label = reference.label();
  for (auto& r : results) {
    if (!r) {
      ++report.skipped_infeasible;
      continue;
    }
    if (r->reference_violated) ++report.reference_violated;
    report.points.push_back(std::move(*r));
  }
  const double n = static_cast<double>(report.points.size());
  for (size_t c = 0; c < cfg.criteria.size(); ++c) {
    CriterionSummary s;
    s.label = cfg.criteria[c].label();
    s.total_power = cfg.criteria[c].total_power();
    for (const auto& p : report.points)
      if (!p.passed(c)) ++s.violated;
    s.detection_fraction = n > 0 ? static_cast<double>(s.violated) / n : 0.0;
    s.reference_fraction =
        report.reference_violated > 0 ? static_cast<double>(s.violated) / static_cast<double>(report.reference_violated)
                                      : 0.0;
    report.summary.push_back(s);
  }
  return report;
}

std::vector<CriterionSpec> region_criteria(int n) {
  if (n < 2) throw ContractViolation("region_criteria: total power must be >= 2");
  const std::string a = format_number(n - 1);
  return {CriterionSpec::parse("moment:alpha=" + format_number(n)),
          CriterionSpec::parse("theorem2:alpha=" + a + ",beta=1"),
          CriterionSpec::parse("theorem2:alpha=1,beta=" + a), CriterionSpec::parse("positive_map")};
}

std::vector<std::string> classify_regions(const ScanReport& report, int n) {
  const auto specs = region_criteria(n);
  static const char* names[] = {"M", "N", "R", "S"};
  size_t idx[4];
  for (int k = 0; k < 4; ++k) {
    auto c = report.find(specs[static_cast<size_t>(k)].label());
    if (!c) throw ContractViolation("classify_regions: scan lacks criterion " + specs[static_cast<size_t>(k)].label());
    idx[k] = *c;
  }
  std::vector<std::string> out;
  out.reserve(report.points.size());
  for (const auto& p : report.points) {
    std::string label = "none";
    for (int k = 3; k >= 0; --k)
      if (p.passed(idx[k])) {
        label = names[k];
        break;
      }
    out.push_back(label);
  }
  return out;
}

}  // namespace posmap
