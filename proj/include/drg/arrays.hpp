#pragma once

#include "drg/numeric.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace drg {

struct ArrayOptions {
  /// b_i non-increasing and c_i non-decreasing. Every distance-regular graph
  /// satisfies this; turning it off is only useful for experiments.
  bool enforce_monotonicity = true;
};

/// Intersection array {b_0,...,b_{D-1}; c_1,...,c_D} of a non-complete
/// distance-regular graph (D >= 2). Immutable once constructed; the
/// constructor checks every structural invariant.
class IntersectionArray {
 public:
  /// Throws InputError("InvalidArray") naming the violated invariant.
  IntersectionArray(std::vector<Integer> b, std::vector<Integer> c, ArrayOptions options = {});

  int diameter() const { return static_cast<int>(b_.size()); }
  const Integer& k() const { return b_.front(); }

  /// b_0..b_{D-1} as written in the array.
  const std::vector<Integer>& b() const { return b_; }
  /// c_1..c_D as written in the array.
  const std::vector<Integer>& c() const { return c_; }

  /// Full index range 0..D, with b_D = 0 and c_0 = 0.
  Integer b_at(int i) const;
  Integer c_at(int i) const;
  Integer a_at(int i) const;

  friend bool operator==(const IntersectionArray& lhs, const IntersectionArray& rhs) {
    return lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_;
  }

 private:
  std::vector<Integer> b_;
  std::vector<Integer> c_;
};

/// Convenience for literals in code and tests.
IntersectionArray make_array(std::initializer_list<long> b, std::initializer_list<long> c,
                             ArrayOptions options = {});

/// Canonical text form, e.g. "{6,4,2;1,2,3}".
std::string format(const IntersectionArray& array);

/// Accepts the canonical form with arbitrary ASCII whitespace. Throws
/// InputError("ParseError") for malformed text and
/// InputError("InvalidArray") for invariant violations.
IntersectionArray parse_array(std::string_view text, ArrayOptions options = {});

struct DerivedParams {
  std::vector<Integer> a;        // a_0..a_D
  std::vector<Integer> k_shell;  // k_0..k_D
  Integer v;
  int head = 0;
};

/// Throws InfeasibleError("NonIntegralShell") when some k_i is not an
/// integer.
DerivedParams derive(const IntersectionArray& array);

/// |{ j : (c_j,a_j,b_j) = (c_1,a_1,b_1), 1 <= j <= D-1 }|.
int head(const IntersectionArray& array);

struct SrgParams {
  Integer v;
  Integer k;
  Integer lambda;
  Integer mu;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Throws InputError("NotDiameterTwo").
SrgParams srg_of(const IntersectionArray& array);

/// Throws InputError("InconsistentSrg") unless k(k-lambda-1) = (v-k-1)mu
/// and mu > 0.
IntersectionArray srg_to_array(const SrgParams& params, ArrayOptions options = {});

nlohmann::ordered_json to_json(const IntersectionArray& array);
nlohmann::ordered_json to_json(const DerivedParams& derived);
nlohmann::ordered_json to_json(const SrgParams& params);

}  // namespace drg
