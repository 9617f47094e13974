#include "drg/geometry.hpp"

#include "drg/spectrum.hpp"

namespace drg {

namespace {

constexpr long kMinusTheta = 3;

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

}  // namespace

GeometricParams solve_tau_psi(const IntersectionArray& array) {
  const auto cert = certify_minus3(array);
  if (!cert.holds()) {
    throw GeometryInconsistent("NotMinusThree", 0,
                               "smallest eigenvalue is not -3 (p(-3) = " +
                                   cert.value_at_minus3.get_str() + ", " +
                                   std::to_string(cert.roots_below) + " roots below -3)");
  }
  const Integer& k = array.k();
  if (k % kMinusTheta != 0) {
    throw GeometryInconsistent("NonDivisible", 0, "k = " + k.get_str() + " is not divisible by 3");
  }

  GeometricParams out;
  out.clique_size = 1 + k / kMinusTheta;
  out.psi.push_back(1);
  const int d = array.diameter();
  for (int i = 1; i <= d; ++i) {
    const Integer ci = array.c_at(i);
    const long prev_psi = out.psi.back();
    if (ci % prev_psi != 0) {
      throw GeometryInconsistent("NonDivisible", i,
                                 idx("c", i) + " = " + ci.get_str() + " is not divisible by " +
                                     idx("psi", i - 1) + " = " + std::to_string(prev_psi));
    }
    const Integer tau = ci / prev_psi;
    if (tau < 1 || tau > kMinusTheta) {
      throw GeometryInconsistent("OutOfRange", i,
                                 idx("tau", i) + " = " + tau.get_str() + " is outside 1..3");
    }
    out.tau.push_back(tau.get_si());
    if (i == d) break;

    if (tau == kMinusTheta) {
      throw GeometryInconsistent("OutOfRange", i,
                                 idx("tau", i) + " = 3 before the diameter forces " +
                                     idx("b", i) + " = 0");
    }
    const Integer divisor = kMinusTheta - tau;
    const Integer bi = array.b_at(i);
    if (bi % divisor != 0) {
      throw GeometryInconsistent("NonDivisible", i,
                                 idx("b", i) + " = " + bi.get_str() + " is not divisible by 3 - " +
                                     idx("tau", i) + " = " + divisor.get_str());
    }
    const Integer psi = out.clique_size - bi / divisor;
    if (psi < 1 || psi > out.clique_size - 1) {
      throw GeometryInconsistent("OutOfRange", i,
                                 idx("psi", i) + " = " + psi.get_str() + " is outside 1.." +
                                     Integer(out.clique_size - 1).get_str());
    }
    out.psi.push_back(psi.get_si());
  }
  if (out.tau.back() != kMinusTheta) {
    throw GeometryInconsistent("TauDNotThree", d,
                               idx("tau", d) + " = " + std::to_string(out.tau.back()) +
                                   " but must equal -theta_min = 3");
  }
  return out;
}

std::vector<BoundViolation> check_bounds(const GeometricParams& gp, const IntersectionArray& array) {
  std::vector<BoundViolation> out;
  const int d = array.diameter();
  const long psi1 = gp.psi_at(1);
  const long tau2 = gp.tau_at(2);
  const Integer c2 = array.c_at(2);
  const Integer cd = array.c_at(d);

  if (psi1 > tau2) {
    out.push_back({"psi_1 <= tau_2", std::to_string(psi1) + " > " + std::to_string(tau2)});
  }
  if (tau2 > kMinusTheta) {
    out.push_back({"tau_2 <= 3", std::to_string(tau2) + " > 3"});
  }
  if (Integer(psi1 * psi1) > c2) {
    out.push_back({"psi_1^2 <= c_2", std::to_string(psi1 * psi1) + " > " + c2.get_str()});
  }
  if (c2 > kMinusTheta * kMinusTheta) {
    out.push_back({"c_2 <= 9", c2.get_str() + " > 9"});
  }
  if (cd != kMinusTheta * gp.psi_at(d - 1)) {
    out.push_back({"c_D = 3 psi_{D-1}",
                   cd.get_str() + " != 3*" + std::to_string(gp.psi_at(d - 1))});
  }
  if (cd < kMinusTheta) {
    out.push_back({"c_D >= 3", cd.get_str() + " < 3"});
  }
  return out;
}

std::string to_string(LocalStructure kind) {
  switch (kind) {
    case LocalStructure::ThreeCliques: return "ThreeCliques";
    case LocalStructure::TwoPerClique: return "TwoPerClique";
    case LocalStructure::ThreePerClique: return "ThreePerClique";
  }
  return "?";
}

LocalStructure local_structure_kind(const GeometricParams& gp, const IntersectionArray& array) {
  const Integer& k = array.k();
  switch (gp.psi_at(1)) {
    case 1:
      if (k != 3 * (array.a_at(1) + 1)) {
        throw GeometryInconsistent("LocalStructureMismatch", 1, "psi_1 = 1 but k != 3(a_1+1)");
      }
      return LocalStructure::ThreeCliques;
    case 2:
      if (3 * array.b_at(1) != 2 * (k - 3)) {
        throw GeometryInconsistent("LocalStructureMismatch", 1, "psi_1 = 2 but b_1 != 2(k-3)/3");
      }
      return LocalStructure::TwoPerClique;
    case 3:
      if (array.c_at(2) != 9) {
        throw GeometryInconsistent("LocalStructureMismatch", 2, "psi_1 = 3 but c_2 != 9");
      }
      return LocalStructure::ThreePerClique;
    default:
      throw GeometryInconsistent("OutOfRange", 1,
                                 "psi_1 = " + std::to_string(gp.psi_at(1)) + " is outside 1..3");
  }
}

IntersectionArray reconstruct_array(const GeometricParams& gp, const Integer& k) {
  const int d = static_cast<int>(gp.tau.size());
  std::vector<Integer> b{k};
  std::vector<Integer> c;
  for (int i = 1; i <= d; ++i) {
    c.emplace_back(gp.tau_at(i) * gp.psi_at(i - 1));
    if (i < d) b.emplace_back((kMinusTheta - gp.tau_at(i)) * (gp.clique_size - gp.psi_at(i)));
  }
  return IntersectionArray(std::move(b), std::move(c), ArrayOptions{false});
}

nlohmann::ordered_json to_json(const GeometricParams& gp) {
  nlohmann::ordered_json out;
  out["tau"] = gp.tau;
  out["psi"] = gp.psi;
  out["clique_size"] = to_json(gp.clique_size);
  return out;
}

nlohmann::ordered_json to_json(const GeometryInconsistent& error) {
  nlohmann::ordered_json out;
  out["inconsistent_at"] = error.step();
  out["kind"] = error.kind();
  out["reason"] = error.reason();
  return out;
}

nlohmann::ordered_json to_json(const BoundViolation& violation) {
  nlohmann::ordered_json out;
  out["constraint"] = violation.constraint;
  out["detail"] = violation.detail;
  return out;
}

}  // namespace drg
