#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posmap/kraus.hpp"

namespace posmap {

// Lambda(X) = xi Tr(X) 1 - eta Phi(X) with Phi a channel.
struct TraceForm {
  double xi = 0;
  double eta = 0;
};

// Positive map Lambda = Lambda1 - Lambda2 with both parts CP.  `target` is the
// Choi matrix of Lambda from its direct definition; construction verifies that
// the Kraus parts reproduce it.
class DecomposedMap {
 public:
  DecomposedMap(std::string name, KrausMap lambda1, KrausMap lambda2, HermitianMatrix target,
                std::optional<TraceForm> trace_form = std::nullopt);

  const std::string& name() const { return name_; }
  const KrausMap& lambda1() const { return l1_; }
  const KrausMap& lambda2() const { return l2_; }
  const HermitianMatrix& target_choi() const { return target_; }
  const std::optional<TraceForm>& trace_form() const { return trace_form_; }
  Index dim() const { return l1_.dim(); }

  // Choi(Lambda1) - Choi(Lambda2) from the Kraus forms.
  HermitianMatrix choi() const;
  Index kappa1() const { return kraus_rank(l1_); }
  Index kappa2() const { return kraus_rank(l2_); }

  // Subunitary Breuer-Hall U accepted but flagged.
  bool flagged_subunitary = false;

 private:
  std::string name_;
  KrausMap l1_;
  KrausMap l2_;
  HermitianMatrix target_;
  std::optional<TraceForm> trace_form_;
};

struct ExtendedImages {
  HermitianMatrix theta1;
  HermitianMatrix theta2;
};

ExtendedImages apply_extended(const DecomposedMap& dec, const HermitianMatrix& rho, Dims dims, Subsystem side);
HermitianMatrix choi_matrix(const DecomposedMap& dec);

// Returns (xi, eta) when Lambda1 = xi Lambda_Tr and Tr Lambda2(X) = eta Tr X.
std::optional<TraceForm> detect_trace_form(const KrausMap& lambda1, const KrausMap& lambda2, double tol = 1e-10);

KrausMap identity_map(Index d);
KrausMap trace_map(Index d);
KrausMap epsilon_map(Index d);
KrausMap werner_holevo_channel(Index d);

// Lambda_Tr scaled by xi: Kraus ops sqrt(xi)|a><i|.
KrausMap scaled_trace_map(Index d, double xi);

namespace builtin {

DecomposedMap reduction(Index d);
DecomposedMap transposition(Index d, const std::optional<Matrix>& u = std::nullopt);
DecomposedMap breuer_hall(Index d, const std::optional<Matrix>& u = std::nullopt, bool allow_subunitary = false);
DecomposedMap generalized_choi(Index d, Index k);
DecomposedMap werner_holevo(Index d);
DecomposedMap epsilon(Index d);

// Antidiagonal with entries (+1, -1, +1, ...) read from the top-right corner downwards.
Matrix default_breuer_hall_unitary(Index d);

// Choi matrices from the direct definitions.
HermitianMatrix reduction_choi(Index d);
HermitianMatrix transposition_choi(Index d, const std::optional<Matrix>& u = std::nullopt);
HermitianMatrix breuer_hall_choi(Index d, const Matrix& u);
HermitianMatrix generalized_choi_choi(Index d, Index k);

}  // namespace builtin

// Lambda1 = xi Lambda_Tr with xi = lambda_max(Choi), Lambda2 from the Choi matrix xi 1 - C.
DecomposedMap canonical_decomposition(const HermitianMatrix& choi, std::string name = "canonical");

// Lambda1 + V.V^+ and Lambda2 + V.V^+; a zero V leaves the decomposition unchanged.
DecomposedMap shift_kraus(const DecomposedMap& dec, const Matrix& v);

// T = T1 - T2 with T1(X) = (Tr X 1 + X^T)/2, T2(X) = (Tr X 1 - X^T)/2.
DecomposedMap minimal_transposition_decomposition(Index d);
// The d(d-1)/2 antisymmetric Kraus operators of T2 in lexicographic (i<j) order.
std::vector<Matrix> antisymmetric_kraus_ops(Index d);
// Minimal transposition decomposition shifted by the listed antisymmetric ops.
DecomposedMap shifted_transposition(Index d, const std::vector<Index>& op_indices);

// Reduction-map presets: 1 = minimal (Lambda_Tr - I/d, (1 - 1/d) I), 2 = (Lambda_Tr, I), 3 = (Lambda_Tr + I, 2I).
DecomposedMap reduction_preset(Index d, int which);

KrausMap adjoint_map(const KrausMap& map);

using MapParams = std::map<std::string, std::string>;

// "name" or "name:key=value,key=value"; returns the name and fills params.
std::string parse_map_spec(const std::string& spec, MapParams& params);

// Choi matrix of the named map ("transposition", "reduction", "breuer_hall",
// "generalized_choi" (k), "werner_holevo", "epsilon", "choi" (file)).
HermitianMatrix map_choi(const std::string& map_spec, Index d);

// Decomposition selector: "builtin", "canonical", "minimal", "shifted:k" or
// "shifted:i,j,...", "red1" / "red2" / "red3".
DecomposedMap resolve_decomposition(const std::string& map_spec, const std::string& dec_spec, Index d);

}  // namespace posmap
