#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "posmap/posmap.hpp"

namespace posmap::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::string point;
  std::string state;
  std::string map = "transposition";
  std::string dec = "canonical";
  std::string side = "B";
  std::vector<std::string> grid;
  std::vector<std::string> criteria;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::string reference;
  double tol = 1e-9;
  double overlap_tol = 1e-10;
  std::uint64_t seed = 0;
  int workers = 1;
  int regions = 0;
  int dim = 0;
  std::string out;
  std::string format = "csv";
};

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json verdict_json(const std::string& label, const CriterionVerdict& v) {
  json j{{"criterion", label},
         {"criterion_id", v.criterion_id},
         {"side", to_string(v.side)},
         {"margin", v.margin},
         {"passed", v.passed},
         {"flags", describe_flags(v.flags)}};
  j["alpha"] = v.alpha ? json(*v.alpha) : json(nullptr);
  j["beta"] = v.beta ? json(*v.beta) : json(nullptr);
  return j;
}

// Writes to --out when given, otherwise to the command's stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + o.out + "'");
  f << text;
  if (!f) throw ParseError("write failed for '" + o.out + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ParseError("write failed for '" + path + "'");
}

BipartiteState load_state(const Options& o) {
  if (!o.state.empty() && !o.family.empty()) throw ContractViolation("give either --state or --family, not both");
  if (!o.state.empty()) {
    MatrixFile f = read_matrix_file(o.state);
    return BipartiteState(f.matrix, f.dims);
  }
  if (o.family.empty()) throw ContractViolation("a state is required: --state FILE or --family NAME --point k=v,...");
  FamilySpec f = FamilySpec::parse(o.family);
  std::map<std::string, double> params = f.fixed;
  if (!o.point.empty())
    for (const auto& [k, v] : FamilySpec::parse(f.name + ":" + o.point).fixed) params[k] = v;
  auto s = family_state(f, params, o.seed);
  if (!s) throw DomainError("parameter point lies outside the family's domain");
  return *s;
}

std::vector<CriterionSpec> criteria_of(const Options& o, const std::vector<std::string>& fallback) {
  return expand_criteria(o.criteria.empty() ? fallback : o.criteria, o.alpha, o.beta);
}

int run_check(const Options& o, std::ostream& out) {
  const BipartiteState rho = load_state(o);
  const Subsystem side = parse_subsystem(o.side);
  const auto specs = criteria_of(o, {"positive_map"});
  std::optional<DecomposedMap> dec;
  std::optional<MapEvaluation> ev;
  for (const auto& s : specs)
    if (s.needs_map() && !ev) {
      dec.emplace(resolve_decomposition(o.map, o.dec, rho.dims().of(side)));
      ev.emplace(rho, *dec, side);
    }
  const CriteriaOptions opt{o.tol, o.overlap_tol};

  bool violated = false;
  std::ostringstream csv;
  json rows = json::array();
  csv << "# posmap-check v1\n# dims=" << rho.dims().a << 'x' << rho.dims().b << " map=" << o.map << " dec=" << o.dec
      << " side=" << to_string(side) << " tol=" << format_number(o.tol) << '\n';
  csv << "criterion,criterion_id,side,alpha,beta,margin,passed,flags\n";
  for (const auto& s : specs) {
    const std::string label = s.label();
    for (const auto& v : evaluate_criterion(s, rho, ev ? &*ev : nullptr, side, opt)) {
      violated |= !v.passed;
      csv << '"' << label << "\"," << v.criterion_id << ',' << to_string(v.side) << ','
          << (v.alpha ? format_number(*v.alpha) : "") << ',' << (v.beta ? format_number(*v.beta) : "") << ','
          << exact(v.margin) << ',' << (v.passed ? 1 : 0) << ',' << describe_flags(v.flags) << '\n';
      rows.push_back(verdict_json(label, v));
    }
  }
  if (o.format == "json") {
    json j{{"format", "posmap-check v1"},
           {"dims", {rho.dims().a, rho.dims().b}},
           {"map", o.map},
           {"decomposition", o.dec},
           {"side", to_string(side)},
           {"tolerance", o.tol},
           {"verdicts", rows},
           {"passed", !violated}};
    emit(o, out, j.dump(2) + "\n");
  } else {
    emit(o, out, csv.str());
  }
  return violated ? 1 : 0;
}

ScanConfig scan_config(const Options& o) {
  if (o.family.empty()) throw ContractViolation("scan needs --family");
  ScanConfig cfg;
  cfg.family = FamilySpec::parse(o.family);
  for (const auto& g : o.grid) cfg.family.axes.push_back(Axis::parse(g));
  cfg.map = o.map;
  cfg.decomposition = o.dec;
  cfg.side = parse_subsystem(o.side);
  if (!o.criteria.empty()) cfg.criteria = criteria_of(o, {});
  if (o.regions > 0)
    for (const auto& rc : region_criteria(o.regions)) {
      bool have = false;
      for (const auto& c : cfg.criteria) have |= c.label() == rc.label();
      if (!have) cfg.criteria.push_back(rc);
    }
  if (!o.reference.empty()) cfg.reference = CriterionSpec::parse(o.reference);
  cfg.tolerance = o.tol;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.validate();
  return cfg;
}

json scan_json(const ScanReport& r, const ScanConfig& cfg, int regions) {
  json summary = json::array();
  for (const auto& s : r.summary)
    summary.push_back({{"criterion", s.label},
                       {"total_power", s.total_power},
                       {"violated", s.violated},
                       {"detection_fraction", s.detection_fraction},
                       {"reference_fraction", s.reference_fraction}});
  std::vector<std::string> labels;
  if (regions > 0) labels = classify_regions(r, regions);
  json points = json::array();
  for (size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    json params = json::object();
    for (size_t k = 0; k < p.params.size(); ++k) params[r.param_names[k]] = p.params[k];
    json verdicts = json::array();
    for (size_t c = 0; c < r.criteria.size(); ++c)
      for (const auto& v : p.verdicts[c]) verdicts.push_back(verdict_json(r.criteria[c].label(), v));
    json jp{{"index", p.index}, {"params", params}, {"verdicts", verdicts}};
    if (regions > 0) jp["region"] = labels[i];
    points.push_back(std::move(jp));
  }
  json fixed = json::object();
  for (const auto& [k, v] : cfg.family.fixed) fixed[k] = v;
  json axes = json::array();
  for (const auto& a : cfg.family.axes) axes.push_back({{"name", a.name}, {"lo", a.lo}, {"hi", a.hi}, {"points", a.points}});
  return json{{"format", "posmap-scan v1"},
              {"family", cfg.family.name},
              {"fixed", fixed},
              {"axes", axes},
              {"map", cfg.map},
              {"decomposition", cfg.decomposition},
              {"side", to_string(cfg.side)},
              {"tolerance", cfg.tolerance},
              {"seed", cfg.seed},
              {"grid_points", r.grid_size},
              {"evaluated", r.evaluated()},
              {"skipped_infeasible", r.skipped_infeasible},
              {"reference", r.reference_label},
              {"reference_violated", r.reference_violated},
              {"summary", summary},
              {"points", points}};
}

int run_scan_cmd(const Options& o, std::ostream& out) {
  const ScanConfig cfg = scan_config(o);
  const ScanReport r = run_scan(cfg);
  if (o.format == "json") {
    emit(o, out, scan_json(r, cfg, o.regions).dump(2) + "\n");
    return 0;
  }
  std::ostringstream fractions;
  write_fractions_csv(fractions, r, cfg);
  out << fractions.str();
  if (!o.out.empty()) {
    std::ostringstream points;
    write_points_csv(points, r, cfg);
    write_file(o.out + ".points.csv", points.str());
    write_file(o.out + ".fractions.csv", fractions.str());
    if (o.regions > 0) {
      std::ostringstream regions;
      write_regions_csv(regions, r, o.regions);
      write_file(o.out + ".regions.csv", regions.str());
    }
  }
  return 0;
}

int run_decompose(const Options& o, std::ostream& out) {
  Index d = o.dim;
  MapParams params;
  const std::string name = parse_map_spec(o.map, params);
  if (d == 0 && name == "choi") d = read_matrix_file(params["file"]).dims.a;
  if (d < 1) throw ContractViolation("decompose needs --dim");
  const DecomposedMap dec = resolve_decomposition(o.map, o.dec, d);
  const double err = (dec.choi().matrix() - dec.target_choi().matrix()).cwiseAbs().maxCoeff();
  const bool cp = is_completely_positive(dec.target_choi());
  const auto& tf = dec.trace_form();
  if (o.format == "json") {
    json j{{"format", "posmap-decompose v1"},
           {"map", o.map},
           {"decomposition", o.dec},
           {"d", d},
           {"kappa1", dec.kappa1()},
           {"kappa2", dec.kappa2()},
           {"choi_error", err},
           {"completely_positive", cp}};
    j["xi"] = tf ? json(tf->xi) : json(nullptr);
    j["eta"] = tf ? json(tf->eta) : json(nullptr);
    emit(o, out, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "# posmap-decompose v1\n";
  os << "map,decomposition,d,xi,eta,kappa1,kappa2,choi_error,completely_positive\n";
  os << '"' << o.map << "\"," << o.dec << ',' << d << ',' << (tf ? exact(tf->xi) : "") << ','
     << (tf ? exact(tf->eta) : "") << ',' << dec.kappa1() << ',' << dec.kappa2() << ',' << exact(err) << ','
     << (cp ? 1 : 0) << '\n';
  emit(o, out, os.str());
  return 0;
}

// --out names the witness matrix file; the report always goes to stdout.
int run_witness(const Options& o, std::ostream& out) {
  const BipartiteState rho = load_state(o);
  const Subsystem side = parse_subsystem(o.side);
  const DecomposedMap dec = resolve_decomposition(o.map, o.dec, rho.dims().of(side));
  const std::vector<double> betas = o.beta.empty() ? std::vector<double>{1, 2, 4, 8, 16} : o.beta;
  const WitnessReport w = tailor_made_witness(rho, dec, side, betas, CriteriaOptions{o.tol, o.overlap_tol});
  if (!o.out.empty()) write_matrix_file(o.out, w.witness, rho.dims());
  if (o.format == "json") {
    json series = json::array();
    for (const auto& p : w.approximation_series)
      series.push_back({{"beta", p.beta}, {"raw", p.raw}, {"normalized", p.normalized}});
    json j{{"format", "posmap-witness v1"},
           {"lambda_minus", w.lambda_minus},
           {"mean_value", w.mean_value},
           {"projector_rank", w.projector_rank},
           {"detected", w.detected},
           {"flags", describe_flags(w.flags)},
           {"series", series}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "# posmap-witness v1\n";
  out << "# lambda_minus=" << exact(w.lambda_minus) << " mean_value=" << exact(w.mean_value)
      << " projector_rank=" << w.projector_rank << " detected=" << (w.detected ? 1 : 0)
      << " flags=" << describe_flags(w.flags) << '\n';
  out << "beta,raw,normalized\n";
  for (const auto& p : w.approximation_series)
    out << format_number(p.beta) << ',' << exact(p.raw) << ',' << exact(p.normalized) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"posmap: separability criteria from positive maps"};
  app.name("posmap");
  app.set_config("--config", "", "flat key=value file; flags on the command line override it");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--family", o.family, "state family, e.g. rot_invariant:p=0 or isotropic:d=4");
  app.add_option("--point", o.point, "family parameters for check/witness, e.g. a=0.5,q=0.3");
  app.add_option("--state", o.state, "matrix file holding the state");
  app.add_option("--map", o.map, "transposition, reduction, breuer_hall, generalized_choi:k=K, werner_holevo, "
                                 "epsilon, choi:FILE")
      ->capture_default_str();
  app.add_option("--dec", o.dec, "builtin, canonical, minimal, shifted:K, shifted:I,J,..., red1, red2, red3")
      ->capture_default_str();
  app.add_option("--side", o.side, "subsystem the map acts on")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  app.add_option("--grid", o.grid, "swept axis name=lo:hi:points (repeatable)");
  app.add_option("--criterion", o.criteria, "criterion, e.g. ppt, moment:alpha=2, theorem2:alpha=1,beta=2 (repeatable)");
  app.add_option("--alpha", o.alpha, "alpha values for bare criterion names")->delimiter(',');
  app.add_option("--beta", o.beta, "beta values for bare criterion names; witness series exponents")->delimiter(',');
  app.add_option("--reference", o.reference, "reference criterion for reference fractions (default positive_map)");
  app.add_option("--tol", o.tol, "verdict tolerance")->capture_default_str();
  app.add_option("--overlap-tol", o.overlap_tol, "q_max overlap threshold")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for random families")->capture_default_str();
  app.add_option("--workers", o.workers, "scan worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--regions", o.regions, "scan: also classify M/N/R/S regions at this total power");
  app.add_option("--dim", o.dim, "decompose: input dimension of the map");
  app.add_option("--out", o.out, "output file (scan: prefix for .points/.fractions/.regions.csv)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  auto* check = app.add_subcommand("check", "evaluate criteria on one state; exit 1 if any is violated");
  auto* scan = app.add_subcommand("scan", "evaluate criteria over a parameter grid");
  auto* decompose = app.add_subcommand("decompose", "print xi, eta, kappa1, kappa2 of a decomposition");
  auto* witness = app.add_subcommand("witness", "build the tailor-made witness of a state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (scan->parsed()) return run_scan_cmd(o, out);
    if (decompose->parsed()) return run_decompose(o, out);
    if (witness->parsed()) return run_witness(o, out);
  } catch (const std::exception& e) {
    err << "posmap: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace posmap::cli
