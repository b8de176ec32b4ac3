#include "posmap/maps.hpp"

#include <cmath>
#include <sstream>

#include "posmap/errors.hpp"
#include "posmap/matrix_io.hpp"

namespace posmap {

namespace {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Matrix unit(Index d, Index i, Index j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

// Shift operator S|j> = |j+1 mod d>.
Matrix cyclic_shift(Index d) {
  Matrix s = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) s((j + 1) % d, j) = 1.0;
  return s;
}

Matrix dephase(const Matrix& x) { return Matrix(x.diagonal().asDiagonal()); }

// Lambda1 = xi Lambda_Tr, Lambda2 extracted from xi 1 - C.
DecomposedMap trace_form_split(std::string name, const HermitianMatrix& target, double xi,
                               std::optional<TraceForm> tf) {
  const Index d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(target.dim()))));
  HermitianMatrix c2 = HermitianMatrix::identity(target.dim()) * xi - target;
  KrausMap l2 = KrausMap::from_choi(c2);
  return DecomposedMap(std::move(name), scaled_trace_map(d, xi), std::move(l2), target, tf);
}

void check_dim(Index d, Index min, const char* what) {
  if (d < min) throw ContractViolation(std::string(what) + ": dimension too small");
}

}  // namespace

DecomposedMap::DecomposedMap(std::string name, KrausMap lambda1, KrausMap lambda2, HermitianMatrix target,
                             std::optional<TraceForm> trace_form)
    : name_(std::move(name)),
      l1_(std::move(lambda1)),
      l2_(std::move(lambda2)),
      target_(std::move(target)),
      trace_form_(trace_form) {
  if (l1_.dim() != l2_.dim()) throw DimensionMismatch("DecomposedMap: Lambda1 and Lambda2 dimensions differ");
  if (target_.dim() != l1_.dim() * l1_.dim()) throw DimensionMismatch("DecomposedMap: target Choi dimension");
  double err = max_abs(choi().matrix() - target_.matrix());
  if (err > 1e-10 * std::max(1.0, target_.max_abs()))
    throw ConsistencyError("DecomposedMap '" + name_ + "': Lambda1 - Lambda2 does not reproduce the map (error " +
                           std::to_string(err) + ")");
}

HermitianMatrix DecomposedMap::choi() const { return choi_matrix(l1_) - choi_matrix(l2_); }

HermitianMatrix choi_matrix(const DecomposedMap& dec) { return dec.choi(); }

ExtendedImages apply_extended(const DecomposedMap& dec, const HermitianMatrix& rho, Dims dims, Subsystem side) {
  return ExtendedImages{apply_extended(dec.lambda1(), rho, dims, side),
                        apply_extended(dec.lambda2(), rho, dims, side)};
}

std::optional<TraceForm> detect_trace_form(const KrausMap& lambda1, const KrausMap& lambda2, double tol) {
  const Index d = lambda1.dim();
  HermitianMatrix c1 = choi_matrix(lambda1);
  const double xi = c1(0, 0).real();
  if (max_abs(c1.matrix() - xi * Matrix::Identity(d * d, d * d)) > tol * std::max(1.0, std::abs(xi)))
    return std::nullopt;
  HermitianMatrix t = partial_trace(choi_matrix(lambda2), Dims{d, d}, Subsystem::A);
  const double eta = t(0, 0).real();
  if (max_abs(t.matrix() - eta * Matrix::Identity(d, d)) > tol * std::max(1.0, std::abs(eta))) return std::nullopt;
  return TraceForm{xi, eta};
}

KrausMap identity_map(Index d) { return KrausMap({Matrix::Identity(d, d)}); }

KrausMap trace_map(Index d) { return scaled_trace_map(d, 1.0); }

KrausMap scaled_trace_map(Index d, double xi) {
  if (xi <= 0) return KrausMap::zero(d);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(d * d));
  const double w = std::sqrt(xi);
  for (Index i = 0; i < d; ++i)
    for (Index a = 0; a < d; ++a) ops.push_back(w * unit(d, a, i));
  return KrausMap(std::move(ops));
}

KrausMap epsilon_map(Index d) {
  std::vector<Matrix> ops;
  for (Index j = 0; j < d; ++j) ops.push_back(unit(d, j, j));
  return KrausMap(std::move(ops));
}

std::vector<Matrix> antisymmetric_kraus_ops(Index d) {
  std::vector<Matrix> ops;
  const double w = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) ops.push_back(w * (unit(d, i, j) - unit(d, j, i)));
  return ops;
}

KrausMap werner_holevo_channel(Index d) {
  check_dim(d, 2, "werner_holevo");
  return KrausMap(antisymmetric_kraus_ops(d)).scaled(2.0 / static_cast<double>(d - 1));
}

KrausMap adjoint_map(const KrausMap& map) { return map.adjoint(); }

namespace builtin {

Matrix default_breuer_hall_unitary(Index d) {
  Matrix u = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) u(i, d - 1 - i) = (i % 2 == 0) ? 1.0 : -1.0;
  return u;
}

HermitianMatrix reduction_choi(Index d) {
  return choi_from_action(d, [d](const Matrix& x) { return Matrix(x.trace() * Matrix::Identity(d, d) - x); });
}

HermitianMatrix transposition_choi(Index d, const std::optional<Matrix>& u) {
  Matrix uu = u ? *u : Matrix::Identity(d, d);
  return choi_from_action(d, [&](const Matrix& x) { return Matrix(uu * x.transpose() * uu.adjoint()); });
}

HermitianMatrix breuer_hall_choi(Index d, const Matrix& u) {
  return choi_from_action(d, [&](const Matrix& x) {
    return Matrix(x.trace() * Matrix::Identity(d, d) - x - u * x.transpose() * u.adjoint());
  });
}

HermitianMatrix generalized_choi_choi(Index d, Index k) {
  const Matrix s = cyclic_shift(d);
  return choi_from_action(d, [&](const Matrix& x) {
    Matrix out = static_cast<double>(d - k) * dephase(x) - x;
    Matrix si = Matrix::Identity(d, d);
    for (Index i = 1; i <= k; ++i) {
      si = s * si;
      out += dephase(si * x * si.adjoint());
    }
    return out;
  });
}

DecomposedMap reduction(Index d) {
  check_dim(d, 2, "reduction");
  return DecomposedMap("reduction", trace_map(d), identity_map(d), reduction_choi(d), TraceForm{1.0, 1.0});
}

DecomposedMap transposition(Index d, const std::optional<Matrix>& u) {
  check_dim(d, 2, "transposition");
  if (u) {
    if (u->rows() != d || u->cols() != d) throw DimensionMismatch("transposition: U dimension mismatch");
    if (max_abs(u->adjoint() * *u - Matrix::Identity(d, d)) > 1e-12)
      throw ContractViolation("transposition: U is not unitary");
  }
  return trace_form_split("transposition", transposition_choi(d, u), 1.0,
                          TraceForm{1.0, static_cast<double>(d - 1)});
}

DecomposedMap breuer_hall(Index d, const std::optional<Matrix>& u_in, bool allow_subunitary) {
  check_dim(d, 2, "breuer_hall");
  if (d % 2 != 0) throw ContractViolation("breuer_hall: requires even dimension");
  Matrix u = u_in ? *u_in : default_breuer_hall_unitary(d);
  if (u.rows() != d || u.cols() != d) throw DimensionMismatch("breuer_hall: U dimension mismatch");
  if (max_abs(u.transpose() + u) > 1e-12) throw ContractViolation("breuer_hall: U is not antisymmetric");
  bool subunitary = false;
  Matrix utu = u.adjoint() * u;
  if (max_abs(utu - Matrix::Identity(d, d)) > 1e-12) {
    double top = eigenvalues(HermitianMatrix::hermitian_part(utu))(0);
    if (!allow_subunitary || top > 1.0 + 1e-12)
      throw ContractViolation("breuer_hall: U is not unitary");
    subunitary = true;
  }
  DecomposedMap dec = trace_form_split("breuer_hall", breuer_hall_choi(d, u), 2.0,
                                       TraceForm{2.0, static_cast<double>(d + 2)});
  if (subunitary) {
    // with U^+U != 1 the trace of Lambda2(X) depends on X, so there is no trace form
    dec = DecomposedMap(dec.name(), dec.lambda1(), dec.lambda2(), dec.target_choi(),
                        detect_trace_form(dec.lambda1(), dec.lambda2()));
    dec.flagged_subunitary = true;
  }
  return dec;
}

DecomposedMap generalized_choi(Index d, Index k) {
  check_dim(d, 2, "generalized_choi");
  if (k < 0 || k > d - 1) throw ContractViolation("generalized_choi: requires 0 <= k <= d-1");
  const double xi = static_cast<double>(d - k);
  const double eta = static_cast<double>(d * (d - k) - d + 1);
  return trace_form_split("generalized_choi", generalized_choi_choi(d, k), xi, TraceForm{xi, eta});
}

DecomposedMap werner_holevo(Index d) {
  KrausMap phi = werner_holevo_channel(d);
  return DecomposedMap("werner_holevo", phi, KrausMap::zero(d), choi_matrix(phi));
}

DecomposedMap epsilon(Index d) {
  check_dim(d, 1, "epsilon");
  KrausMap e = epsilon_map(d);
  return DecomposedMap("epsilon", e, KrausMap::zero(d), choi_matrix(e));
}

}  // namespace builtin

DecomposedMap canonical_decomposition(const HermitianMatrix& choi, std::string name) {
  const Index n = choi.dim();
  const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw DimensionMismatch("canonical_decomposition: Choi dimension is not a square");
  const double xi = std::max(eigenvalues(choi)(0), 0.0);
  HermitianMatrix c2 = HermitianMatrix::identity(n) * xi - choi;
  KrausMap l1 = scaled_trace_map(d, xi);
  KrausMap l2 = KrausMap::from_choi(c2);
  auto tf = detect_trace_form(l1, l2);
  return DecomposedMap(std::move(name), std::move(l1), std::move(l2), choi, tf);
}

DecomposedMap shift_kraus(const DecomposedMap& dec, const Matrix& v) {
  if (v.rows() != dec.dim() || v.cols() != dec.dim()) throw DimensionMismatch("shift_kraus: dimension mismatch");
  if (v.cwiseAbs().maxCoeff() == 0.0) return dec;
  KrausMap l1 = dec.lambda1().with_op(v);
  KrausMap l2 = dec.lambda2().with_op(v);
  auto tf = detect_trace_form(l1, l2);
  return DecomposedMap(dec.name(), std::move(l1), std::move(l2), dec.target_choi(), tf);
}

DecomposedMap minimal_transposition_decomposition(Index d) {
  check_dim(d, 2, "minimal_transposition_decomposition");
  std::vector<Matrix> sym;
  const double w = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) sym.push_back(w * (unit(d, i, j) + unit(d, j, i)));
  for (Index i = 0; i < d; ++i) sym.push_back(unit(d, i, i));
  return DecomposedMap("transposition", KrausMap(std::move(sym)), KrausMap(antisymmetric_kraus_ops(d)),
                       builtin::transposition_choi(d));
}

DecomposedMap shifted_transposition(Index d, const std::vector<Index>& op_indices) {
  DecomposedMap dec = minimal_transposition_decomposition(d);
  const auto ops = antisymmetric_kraus_ops(d);
  for (Index k : op_indices) {
    if (k < 0 || k >= static_cast<Index>(ops.size()))
      throw ContractViolation("shifted_transposition: Kraus index " + std::to_string(k) + " out of range");
    dec = shift_kraus(dec, ops[static_cast<size_t>(k)]);
  }
  return dec;
}

DecomposedMap reduction_preset(Index d, int which) {
  check_dim(d, 2, "reduction_preset");
  const double dd = static_cast<double>(d);
  switch (which) {
    case 1: {
      HermitianMatrix c1 = choi_matrix(trace_map(d)) - choi_matrix(identity_map(d)) * (1.0 / dd);
      return DecomposedMap("reduction", KrausMap::from_choi(c1), identity_map(d).scaled(1.0 - 1.0 / dd),
                           builtin::reduction_choi(d));
    }
    case 2:
      return builtin::reduction(d);
    case 3:
      return DecomposedMap("reduction", trace_map(d).combined(identity_map(d)), identity_map(d).scaled(2.0),
                           builtin::reduction_choi(d));
    default:
      throw ContractViolation("reduction_preset: expected 1, 2 or 3");
  }
}

std::string parse_map_spec(const std::string& spec, MapParams& params) {
  params.clear();
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (name.empty()) throw ParseError("empty map name");
  if (colon == std::string::npos) return name;
  std::string rest = spec.substr(colon + 1);
  if (name == "choi") {
    // the remainder is a path, which may itself contain '=' or ','
    params["file"] = rest.rfind("file=", 0) == 0 ? rest.substr(5) : rest;
    return name;
  }
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("map parameter must be key=value: '" + item + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return name;
}

namespace {

Index param_index(const MapParams& p, const std::string& key, const std::string& map) {
  auto it = p.find(key);
  if (it == p.end()) throw ParseError("map '" + map + "' requires parameter " + key);
  try {
    size_t pos = 0;
    long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return static_cast<Index>(v);
  } catch (const std::exception&) {
    throw ParseError("map parameter " + key + " must be an integer");
  }
}

DecomposedMap builtin_by_name(const std::string& name, const MapParams& p, Index d) {
  if (name == "reduction") return builtin::reduction(d);
  if (name == "transposition") return builtin::transposition(d);
  if (name == "breuer_hall") return builtin::breuer_hall(d);
  if (name == "generalized_choi") return builtin::generalized_choi(d, param_index(p, "k", name));
  if (name == "werner_holevo") return builtin::werner_holevo(d);
  if (name == "epsilon") return builtin::epsilon(d);
  throw ParseError("unknown map '" + name + "'");
}

}  // namespace

HermitianMatrix map_choi(const std::string& map_spec, Index d) {
  MapParams p;
  std::string name = parse_map_spec(map_spec, p);
  if (name == "choi") {
    MatrixFile f = read_matrix_file(p.at("file"));
    if (f.matrix.dim() != d * d)
      throw DimensionMismatch("Choi file dimension " + std::to_string(f.matrix.dim()) + " does not match d=" +
                              std::to_string(d));
    return f.matrix;
  }
  if (name == "reduction") return builtin::reduction_choi(d);
  if (name == "transposition") return builtin::transposition_choi(d);
  if (name == "breuer_hall") {
    if (d % 2 != 0) throw ContractViolation("breuer_hall: requires even dimension");
    return builtin::breuer_hall_choi(d, builtin::default_breuer_hall_unitary(d));
  }
  if (name == "generalized_choi") {
    Index k = param_index(p, "k", name);
    if (k < 0 || k > d - 1) throw ContractViolation("generalized_choi: requires 0 <= k <= d-1");
    return builtin::generalized_choi_choi(d, k);
  }
  if (name == "werner_holevo") return choi_matrix(werner_holevo_channel(d));
  if (name == "epsilon") return choi_matrix(epsilon_map(d));
  throw ParseError("unknown map '" + name + "'");
}

DecomposedMap resolve_decomposition(const std::string& map_spec, const std::string& dec_spec, Index d) {
  MapParams p;
  const std::string name = parse_map_spec(map_spec, p);
  if (dec_spec == "canonical") return canonical_decomposition(map_choi(map_spec, d), name);
  if (dec_spec == "builtin") {
    if (name == "choi") throw ContractViolation("custom Choi maps have no builtin decomposition; use canonical");
    return builtin_by_name(name, p, d);
  }
  if (dec_spec == "minimal") {
    if (name == "transposition") return minimal_transposition_decomposition(d);
    if (name == "reduction") return reduction_preset(d, 1);
    throw ContractViolation("no minimal decomposition registered for map '" + name + "'");
  }
  if (dec_spec.rfind("shifted:", 0) == 0) {
    if (name != "transposition") throw ContractViolation("shifted decompositions are defined for transposition");
    std::string arg = dec_spec.substr(8);
    std::vector<Index> idx;
    try {
      if (arg.find(',') == std::string::npos) {
        size_t pos = 0;
        long long k = std::stoll(arg, &pos);
        if (pos != arg.size() || k < 0) throw std::invalid_argument("");
        for (Index i = 0; i < k; ++i) idx.push_back(i);
      } else {
        std::istringstream is(arg);
        std::string item;
        while (std::getline(is, item, ',')) {
          size_t pos = 0;
          long long k = std::stoll(item, &pos);
          if (pos != item.size()) throw std::invalid_argument("");
          idx.push_back(static_cast<Index>(k));
        }
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad shifted decomposition '" + dec_spec + "'");
    }
    return shifted_transposition(d, idx);
  }
  if (dec_spec == "red1" || dec_spec == "red2" || dec_spec == "red3") {
    if (name != "reduction") throw ContractViolation("decomposition " + dec_spec + " applies to the reduction map");
    return reduction_preset(d, dec_spec[3] - '0');
  }
  throw ParseError("unknown decomposition '" + dec_spec + "'");
}

}  // namespace posmap
