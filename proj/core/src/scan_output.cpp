#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "posmap/errors.hpp"
#include "posmap/scan.hpp"

namespace posmap {

namespace {

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

std::string describe(const ScanConfig& cfg) {
  std::ostringstream os;
  os << "family=" << cfg.family.name;
  for (const auto& [k, v] : cfg.family.fixed) os << ' ' << k << '=' << format_number(v);
  os << " grid=";
  for (size_t i = 0; i < cfg.family.axes.size(); ++i) {
    const auto& a = cfg.family.axes[i];
    os << (i ? ";" : "") << a.name << '=' << format_number(a.lo) << ':' << format_number(a.hi) << ':' << a.points;
  }
  os << " map=" << cfg.map << " dec=" << cfg.decomposition << " side=" << to_string(cfg.side)
     << " tol=" << format_number(cfg.tolerance) << " seed=" << cfg.seed
     << " reference=" << cfg.reference_or_default().label();
  return os.str();
}

}  // namespace

void write_points_csv(std::ostream& out, const ScanReport& report, const ScanConfig& cfg) {
  std::ostringstream os;
  os << "# " << kPointsCsvVersion << '\n' << "# " << describe(cfg) << '\n';
  os << "index";
  for (const auto& n : report.param_names) os << ',' << n;
  os << ",criterion,criterion_id,side,alpha,beta,margin,passed,flags\n";
  for (const auto& p : report.points) {
    for (size_t c = 0; c < report.criteria.size(); ++c) {
      const std::string label = report.criteria[c].label();
      for (const auto& v : p.verdicts[c]) {
        os << p.index;
        for (double x : p.params) os << ',' << format_number(x);
        os << ',' << '"' << label << '"' << ',' << v.criterion_id << ',' << to_string(v.side) << ','
           << opt_number(v.alpha) << ',' << opt_number(v.beta) << ',' << exact(v.margin) << ','
           << (v.passed ? 1 : 0) << ',' << describe_flags(v.flags) << '\n';
      }
    }
  }
  out << os.str();
}

void write_fractions_csv(std::ostream& out, const ScanReport& report, const ScanConfig& cfg) {
  std::ostringstream os;
  os << "# " << kFractionsCsvVersion << '\n' << "# " << describe(cfg) << '\n';
  os << "# grid_points=" << report.grid_size << " evaluated=" << report.evaluated()
     << " skipped_infeasible=" << report.skipped_infeasible << " reference_violated=" << report.reference_violated
     << '\n';
  os << "criterion,total_power,violated,detection_fraction,reference_fraction\n";
  for (const auto& s : report.summary)
    os << '"' << s.label << '"' << ',' << format_number(s.total_power) << ',' << s.violated << ','
       << exact(s.detection_fraction) << ',' << exact(s.reference_fraction) << '\n';
  out << os.str();
}

void write_regions_csv(std::ostream& out, const ScanReport& report, int n) {
  const auto labels = classify_regions(report, n);
  std::ostringstream os;
  os << "# " << kRegionsCsvVersion << '\n';
  os << "# total_power=" << n << " S=positive_map R=theorem2(alpha=1) N=theorem2(beta=1) M=moment\n";
  for (const auto& name : report.param_names) os << name << ',';
  os << "region\n";
  for (size_t i = 0; i < report.points.size(); ++i) {
    for (double x : report.points[i].params) os << format_number(x) << ',';
    os << labels[i] << '\n';
  }
  out << os.str();
}

void write_power_table(std::ostream& out, const std::vector<std::pair<std::string, ScanReport>>& reports,
                       bool use_reference_fraction) {
  std::map<double, std::map<size_t, double>> rows;
  for (size_t r = 0; r < reports.size(); ++r)
    for (const auto& s : reports[r].second.summary) {
      auto& row = rows[s.total_power];
      if (!row.count(r)) row[r] = use_reference_fraction ? s.reference_fraction : s.detection_fraction;
    }
  std::ostringstream os;
  os << "# " << kPowerTableVersion << '\n';
  os << "# " << (use_reference_fraction ? "reference_fraction" : "detection_fraction") << '\n';
  os << "total_power";
  for (const auto& [label, rep] : reports) os << ',' << label;
  os << '\n';
  for (const auto& [power, row] : rows) {
    os << format_number(power);
    for (size_t r = 0; r < reports.size(); ++r) {
      os << ',';
      auto it = row.find(r);
      if (it != row.end()) os << exact(it->second);
    }
    os << '\n';
  }
  out << os.str();
}

}  // namespace posmap
