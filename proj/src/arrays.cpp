#include "drg/arrays.hpp"

#include "drg/errors.hpp"

#include <cctype>
#include <sstream>

namespace drg {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw InputError("InvalidArray", "invalid intersection array: " + message);
}

[[noreturn]] void parse_error(std::string_view text, const std::string& message) {
  throw InputError("ParseError",
                   "cannot parse intersection array '" + std::string(text) + "': " + message);
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].get_str();
  }
  return out;
}

nlohmann::ordered_json to_json(const std::vector<Integer>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& value : values) out.push_back(drg::to_json(value));
  return out;
}

}  // namespace

IntersectionArray::IntersectionArray(std::vector<Integer> b, std::vector<Integer> c,
                                     ArrayOptions options)
    : b_(std::move(b)), c_(std::move(c)) {
  if (b_.size() != c_.size()) {
    invalid("halves have different lengths (" + std::to_string(b_.size()) + " vs " +
            std::to_string(c_.size()) + ")");
  }
  if (b_.empty()) invalid("empty array");
  if (b_.size() == 1) invalid("diameter 1 (complete graph) is excluded");

  const int d = diameter();
  for (int i = 0; i < d; ++i) {
    if (b_[i] < 1) invalid("b_" + std::to_string(i) + " must be positive");
    if (c_[i] < 1) invalid("c_" + std::to_string(i + 1) + " must be positive");
  }
  if (c_[0] != 1) invalid("c_1 must equal 1");
  if (b_[0] <= b_[1]) invalid("b_0 > b_1 is required");
  if (options.enforce_monotonicity) {
    for (int i = 1; i + 1 < d; ++i) {
      if (b_[i] < b_[i + 1]) {
        invalid("b_" + std::to_string(i) + " >= b_" + std::to_string(i + 1) + " is required");
      }
    }
    for (int i = 0; i + 1 < d; ++i) {
      if (c_[i] > c_[i + 1]) {
        invalid("c_" + std::to_string(i + 1) + " <= c_" + std::to_string(i + 2) +
                " is required");
      }
    }
  }
  for (int i = 0; i <= d; ++i) {
    if (a_at(i) < 0) {
      invalid("a_" + std::to_string(i) + " = " + a_at(i).get_str() + " is negative");
    }
  }
}

Integer IntersectionArray::b_at(int i) const {
  return i < diameter() ? b_[i] : Integer(0);
}

Integer IntersectionArray::c_at(int i) const { return i == 0 ? Integer(0) : c_[i - 1]; }

Integer IntersectionArray::a_at(int i) const { return k() - b_at(i) - c_at(i); }

IntersectionArray make_array(std::initializer_list<long> b, std::initializer_list<long> c,
                             ArrayOptions options) {
  std::vector<Integer> bs(b.begin(), b.end());
  std::vector<Integer> cs(c.begin(), c.end());
  return IntersectionArray(std::move(bs), std::move(cs), options);
}

std::string format(const IntersectionArray& array) {
  return "{" + join(array.b()) + ";" + join(array.c()) + "}";
}

IntersectionArray parse_array(std::string_view text, ArrayOptions options) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    parse_error(text, "expected '{b0,...;c1,...}'");
  }
  const std::string body = compact.substr(1, compact.size() - 2);
  const auto semicolon = body.find(';');
  if (semicolon == std::string::npos || body.find(';', semicolon + 1) != std::string::npos) {
    parse_error(text, "expected exactly one ';'");
  }

  auto parse_half = [&](const std::string& half, const char* which) {
    std::vector<Integer> values;
    std::size_t start = 0;
    while (true) {
      const auto comma = half.find(',', start);
      const std::string token =
          half.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (token.empty()) {
        parse_error(text, std::string("empty entry in the ") + which + " half");
      }
      for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          parse_error(text, "'" + token + "' is not a non-negative integer");
        }
      }
      values.emplace_back(token, 10);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return values;
  };

  auto b = parse_half(body.substr(0, semicolon), "b");
  auto c = parse_half(body.substr(semicolon + 1), "c");
  if (b.size() != c.size()) {
    parse_error(text, "halves have different lengths");
  }
  return IntersectionArray(std::move(b), std::move(c), options);
}

int head(const IntersectionArray& array) {
  const Integer c1 = array.c_at(1);
  const Integer a1 = array.a_at(1);
  const Integer b1 = array.b_at(1);
  int count = 0;
  for (int j = 1; j <= array.diameter() - 1; ++j) {
    if (array.c_at(j) == c1 && array.a_at(j) == a1 && array.b_at(j) == b1) ++count;
  }
  return count;
}

DerivedParams derive(const IntersectionArray& array) {
  const int d = array.diameter();
  DerivedParams out;
  out.a.reserve(d + 1);
  out.k_shell.reserve(d + 1);
  for (int i = 0; i <= d; ++i) out.a.push_back(array.a_at(i));

  out.k_shell.emplace_back(1);
  for (int i = 1; i <= d; ++i) {
    const Integer numerator = out.k_shell.back() * array.b_at(i - 1);
    const Integer& divisor = array.c()[i - 1];
    if (numerator % divisor != 0) {
      throw InfeasibleError("NonIntegralShell", "k_" + std::to_string(i) + " = " +
                                                    numerator.get_str() + "/" +
                                                    divisor.get_str() + " is not an integer");
    }
    out.k_shell.push_back(numerator / divisor);
  }
  out.v = 0;
  for (const auto& ki : out.k_shell) out.v += ki;
  out.head = head(array);
  return out;
}

SrgParams srg_of(const IntersectionArray& array) {
  if (array.diameter() != 2) {
    throw InputError("NotDiameterTwo", "array " + format(array) + " has diameter " +
                                           std::to_string(array.diameter()) + ", not 2");
  }
  const auto derived = derive(array);
  return {derived.v, array.k(), array.a_at(1), array.c_at(2)};
}

IntersectionArray srg_to_array(const SrgParams& p, ArrayOptions options) {
  if (p.mu <= 0) {
    throw InputError("InconsistentSrg", "mu must be positive");
  }
  const Integer lhs = p.k * (p.k - p.lambda - 1);
  const Integer rhs = (p.v - p.k - 1) * p.mu;
  if (lhs != rhs) {
    throw InputError("InconsistentSrg", "k(k-lambda-1) = " + lhs.get_str() +
                                            " differs from (v-k-1)mu = " + rhs.get_str());
  }
  return IntersectionArray({p.k, p.k - p.lambda - 1}, {Integer(1), p.mu}, options);
}

nlohmann::ordered_json to_json(const IntersectionArray& array) {
  nlohmann::ordered_json out;
  out["d"] = array.diameter();
  out["b"] = to_json(array.b());
  out["c"] = to_json(array.c());
  return out;
}

nlohmann::ordered_json to_json(const DerivedParams& derived) {
  nlohmann::ordered_json out;
  out["a"] = to_json(derived.a);
  out["k_shell"] = to_json(derived.k_shell);
  out["v"] = to_json(derived.v);
  out["head"] = derived.head;
  return out;
}

nlohmann::ordered_json to_json(const SrgParams& params) {
  nlohmann::ordered_json out;
  out["v"] = to_json(params.v);
  out["k"] = to_json(params.k);
  out["lambda"] = to_json(params.lambda);
  out["mu"] = to_json(params.mu);
  return out;
}

}  // namespace drg
