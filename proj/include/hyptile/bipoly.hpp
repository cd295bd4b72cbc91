#ifndef HYPTILE_BIPOLY_HPP
#define HYPTILE_BIPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "hyptile/errors.hpp"

namespace hyptile {

using Int = boost::multiprecision::cpp_int;

// Exponent pair of one term a^da * b^db.
struct Monom {
  int da = 0;
  int db = 0;
  friend bool operator==(const Monom&, const Monom&) = default;
};

// Graded lexicographic by (total degree, degree in a), highest term first.
// Map iteration order is therefore the canonical term order used by str()
// and by the JSON rendering.
struct MonomOrder {
  bool operator()(const Monom& x, const Monom& y) const {
    const int gx = x.da + x.db;
    const int gy = y.da + y.db;
    if (gx != gy) return gx > gy;
    return x.da > y.da;
  }
};

// Sparse bivariate polynomial in the color variables a, b with exact
// arbitrary-precision integer coefficients.  Zero coefficients are never
// stored, so equality is plain term-map equality.
class BiPoly {
public:
  using TermMap = std::map<Monom, Int, MonomOrder>;

  BiPoly() = default;  // zero
  explicit BiPoly(int c) : BiPoly(Int(c)) {}
  explicit BiPoly(Int c);

  static BiPoly monomial(Int coeff, int deg_a, int deg_b);
  static BiPoly var_a() { return monomial(1, 1, 0); }
  static BiPoly var_b() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()

  const TermMap& terms() const { return terms_; }
  Int coeff(int deg_a, int deg_b) const;
  int total_degree() const;  // -1 for the zero polynomial

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(int e) const;  // e >= 0

  // Exact integer evaluation at a = a_val, b = b_val.
  Int eval(const Int& a_val, const Int& b_val) const;

  // "a^4 + 4*a^2*b + 2*b^2" in canonical order; "0" for the zero polynomial.
  std::string str() const;

private:
  void add_term(const Monom& m, const Int& c);

  TermMap terms_;
};

BiPoly operator*(BiPoly p, const Int& c);
BiPoly operator*(const Int& c, BiPoly p);

}  // namespace hyptile

#endif
