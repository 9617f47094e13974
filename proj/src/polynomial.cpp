#include "drg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

namespace {

template <typename Coeff>
void trim(std::vector<Coeff>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

int sign(const Rational& value) { return sgn(value); }

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

RatPoly remainder(const RatPoly& dividend, const RatPoly& divisor) {
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly rem = dividend;
  trim(rem);
  const int dd = degree(divisor);
  const Rational& lead = divisor.back();
  while (!rem.empty() && degree(rem) >= dd) {
    const int shift = degree(rem) - dd;
    const Rational factor = rem.back() / lead;
    for (int i = 0; i <= dd; ++i) rem[i + shift] -= factor * divisor[i];
    rem.back() = 0;
    trim(rem);
  }
  return rem;
}

IntPoly deflate(const IntPoly& p, const Integer& root) {
  // Synthetic division from the leading coefficient down.
  const int n = degree(p);
  IntPoly quotient(n);
  Integer carry = 0;
  for (int i = n; i >= 1; --i) {
    carry = p[i] + carry * root;
    quotient[i - 1] = carry;
  }
  if (p[0] + carry * root != 0) {
    throw std::logic_error("deflate: " + root.get_str() + " is not a root");
  }
  return quotient;
}

SturmChain::SturmChain(const RatPoly& p) {
  RatPoly first = p;
  trim(first);
  chain_.push_back(first);
  RatPoly second = derivative(first);
  if (second.empty()) return;
  chain_.push_back(second);
  while (true) {
    RatPoly next = remainder(chain_[chain_.size() - 2], chain_.back());
    if (next.empty()) break;
    for (auto& coeff : next) coeff = -coeff;
    chain_.push_back(std::move(next));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign(evaluate(q, x)));
  return variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    if (q.empty()) continue;
    const int s = sign(q.back());
    signs.push_back(degree(q) % 2 == 0 ? s : -s);
  }
  return variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    if (!q.empty()) signs.push_back(sign(q.back()));
  }
  return variations(signs);
}

Rational root_bound(const IntPoly& p) {
  if (p.empty()) throw std::domain_error("root bound of the zero polynomial");
  Rational largest = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational ratio = Rational(abs(p[i])) / Rational(abs(p.back()));
    largest = std::max(largest, ratio);
  }
  return largest + 1;
}

}  // namespace drg
