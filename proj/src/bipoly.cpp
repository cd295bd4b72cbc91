#include "hyptile/bipoly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace hyptile {

BiPoly::BiPoly(Int c) {
  if (c != 0) terms_.emplace(Monom{0, 0}, std::move(c));
}

BiPoly BiPoly::monomial(Int coeff, int deg_a, int deg_b) {
  if (deg_a < 0 || deg_b < 0)
    throw ParameterError("monomial: negative exponent (" + std::to_string(deg_a) + ", " +
                         std::to_string(deg_b) + ")");
  BiPoly p;
  if (coeff != 0) p.terms_.emplace(Monom{deg_a, deg_b}, std::move(coeff));
  return p;
}

bool BiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monom{0, 0};
}

Int BiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw ParameterError("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

Int BiPoly::coeff(int deg_a, int deg_b) const {
  auto it = terms_.find(Monom{deg_a, deg_b});
  return it == terms_.end() ? Int(0) : it->second;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Highest graded term comes first.
  const Monom& m = terms_.begin()->first;
  return m.da + m.db;
}

void BiPoly::add_term(const Monom& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly r;
  for (const auto& [ml, cl] : lhs.terms_)
    for (const auto& [mr, cr] : rhs.terms_)
      r.add_term(Monom{ml.da + mr.da, ml.db + mr.db}, cl * cr);
  return r;
}

BiPoly operator*(BiPoly p, const Int& c) {
  if (c == 0) return BiPoly();
  BiPoly r;
  for (const auto& [m, v] : p.terms()) r += BiPoly::monomial(v * c, m.da, m.db);
  return r;
}

BiPoly operator*(const Int& c, BiPoly p) { return std::move(p) * c; }

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw ParameterError("pow: negative exponent");
  BiPoly r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Int BiPoly::eval(const Int& a_val, const Int& b_val) const {
  int max_da = 0, max_db = 0;
  for (const auto& [m, c] : terms_) {
    max_da = std::max(max_da, m.da);
    max_db = std::max(max_db, m.db);
  }
  std::vector<Int> pa(max_da + 1), pb(max_db + 1);
  pa[0] = 1;
  for (int i = 1; i <= max_da; ++i) pa[i] = pa[i - 1] * a_val;
  pb[0] = 1;
  for (int i = 1; i <= max_db; ++i) pb[i] = pb[i - 1] * b_val;
  Int sum = 0;
  for (const auto& [m, c] : terms_) sum += c * pa[m.da] * pb[m.db];
  return sum;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    if (m.da > 0) {
      factors += "a";
      if (m.da > 1) factors += "^" + std::to_string(m.da);
    }
    if (m.db > 0) {
      if (!factors.empty()) factors += "*";
      factors += "b";
      if (m.db > 1) factors += "^" + std::to_string(m.db);
    }
    if (factors.empty())
      out += mag.str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.str() + "*" + factors;
  }
  return out;
}

}  // namespace hyptile
