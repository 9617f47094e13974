#pragma once

#include "drg/arrays.hpp"
#include "drg/errors.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace drg {

/// Geometric parameters of a putative geometric distance-regular graph with
/// smallest eigenvalue -3: tau_1..tau_D, psi_0..psi_{D-1} and the Delsarte
/// clique size 1 + k/3.
struct GeometricParams {
  std::vector<long> tau;  // tau[i-1] = tau_i, i = 1..D
  std::vector<long> psi;  // psi[i] = psi_i, i = 0..D-1
  Integer clique_size;

  long tau_at(int i) const { return tau.at(i - 1); }
  long psi_at(int i) const { return psi.at(i); }

  friend bool operator==(const GeometricParams&, const GeometricParams&) = default;
};

/// Why an array admits no (tau, psi). `step` is the index i at which the
/// left-to-right solve failed (0 for global preconditions).
class GeometryInconsistent : public InfeasibleError {
 public:
  GeometryInconsistent(std::string kind, int step, const std::string& reason)
      : InfeasibleError(kind, "geometric parameters inconsistent at step " +
                                  std::to_string(step) + ": " + reason),
        step_(step),
        reason_(reason) {}

  int step() const noexcept { return step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int step_;
  std::string reason_;
};

/// Solves c_i = tau_i psi_{i-1} and b_i = (3 - tau_i)(1 + k/3 - psi_i) left to
/// right, starting from psi_0 = 1, and requires tau_D = 3.
///
/// Throws GeometryInconsistent with kind NotMinusThree, NonDivisible,
/// OutOfRange or TauDNotThree.
GeometricParams solve_tau_psi(const IntersectionArray& array);

struct BoundViolation {
  std::string constraint;
  std::string detail;
};

/// psi_1 <= tau_2 <= 3, psi_1^2 <= c_2 <= 9, c_D = 3 psi_{D-1} and c_D >= 3.
/// Empty when all hold.
std::vector<BoundViolation> check_bounds(const GeometricParams& params,
                                         const IntersectionArray& array);

enum class LocalStructure { ThreeCliques, TwoPerClique, ThreePerClique };

std::string to_string(LocalStructure kind);

/// Classifies by psi_1 and checks the identity that goes with it
/// (k = 3(a_1+1), b_1 = 2(k-3)/3, or c_2 = 9). Throws
/// GeometryInconsistent("LocalStructureMismatch") if the identity fails.
LocalStructure local_structure_kind(const GeometricParams& params,
                                    const IntersectionArray& array);

/// Recomputes (b_1..b_{D-1}, c_1..c_D) from the parameters.
IntersectionArray reconstruct_array(const GeometricParams& params, const Integer& k);

nlohmann::ordered_json to_json(const GeometricParams& params);
nlohmann::ordered_json to_json(const GeometryInconsistent& error);
nlohmann::ordered_json to_json(const BoundViolation& violation);

}  // namespace drg
