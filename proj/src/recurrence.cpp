#include "hyptile/recurrence.hpp"

#include <utility>

namespace hyptile {

Int shifted_fib(int n) {
  if (n < -1) throw ParameterError("shifted_fib: index must be >= -1");
  Int prev = 0, cur = 1;  // f_{-1}, f_0
  for (int i = 0; i < n; ++i) {
    Int next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == -1 ? prev : cur;
}

USeq::USeq(int max_n) {
  if (max_n < 0) throw ParameterError("USeq: max_n must be >= 0");
  vals_.resize(max_n + 2);
  vals_[0] = BiPoly();         // u_{-1}
  vals_[1] = BiPoly(1);        // u_0
  if (max_n >= 1) vals_[2] = BiPoly::var_a();
  const BiPoly a = BiPoly::var_a();
  const BiPoly b = BiPoly::var_b();
  for (int n = 2; n <= max_n; ++n) vals_[n + 1] = a * vals_[n] + b * vals_[n - 1];
}

const BiPoly& USeq::at(int n) const {
  if (n < -1 || n > max_index()) throw ParameterError("USeq: index out of range");
  return vals_[n + 1];
}

std::string seq_kind_name(SeqKind k) {
  switch (k) {
    case SeqKind::R: return "R";
    case SeqKind::A: return "A";
    case SeqKind::B: return "B";
    case SeqKind::C: return "C";
    case SeqKind::Rtilde: return "Rtilde";
    case SeqKind::Atilde: return "Atilde";
    case SeqKind::Btilde: return "Btilde";
    case SeqKind::Ctilde: return "Ctilde";
    case SeqKind::u: return "u";
    case SeqKind::r: return "r";
    case SeqKind::rtilde: return "rtilde";
  }
  return "?";
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::oracle: return "oracle";
    case Provenance::system: return "system";
    case Provenance::closed: return "closed";
    case Provenance::fib: return "fib";
  }
  return "?";
}

std::string tilde_mode_name(TildeMode m) {
  return m == TildeMode::AsStated ? "as_stated" : "corrected";
}

const BiPoly& SequenceTable::at(int n) const {
  if (n < 0 || n > max_index())
    throw ParameterError(seq_kind_name(kind) + " table: index " + std::to_string(n) +
                         " out of range 0.." + std::to_string(max_index()));
  return values[n];
}

SequenceTable u_table(int N) {
  USeq u(N);
  SequenceTable t{0, SeqKind::u, Provenance::closed, {}};
  for (int n = 0; n <= N; ++n) t.values.push_back(u.at(n));
  return t;
}

namespace {

void check_q(int q, const char* where) {
  if (q < 4) throw ParameterError(std::string(where) + ": q must be >= 4");
}

void check_n(int N, const char* where, int min = 0) {
  if (N < min) throw ParameterError(std::string(where) + ": N must be >= " + std::to_string(min));
}

struct QContext {
  BiPoly a = BiPoly::var_a();
  BiPoly b = BiPoly::var_b();
  BiPoly u2, u3, u4, u5;  // u_{q-2}, u_{q-3}, u_{q-4}, u_{q-5}

  explicit QContext(int q) {
    USeq u(q - 2);
    u2 = u.at(q - 2);
    u3 = u.at(q - 3);
    u4 = u.at(q - 4);
    u5 = u.at(q - 5);
  }
};

}  // namespace

SystemTables system_tables(int q, int N) {
  check_q(q, "system_tables");
  check_n(N, "system_tables");
  QContext c(q);
  SystemTables t{{q, SeqKind::R, Provenance::system, {BiPoly(1)}},
                 {q, SeqKind::A, Provenance::system, {BiPoly()}},
                 {q, SeqKind::B, Provenance::system, {BiPoly()}},
                 {q, SeqKind::C, Provenance::system, {BiPoly()}}};
  for (int n = 1; n <= N; ++n) {
    const BiPoly& R = t.R.values[n - 1];
    const BiPoly& A = t.A.values[n - 1];
    const BiPoly& B = t.B.values[n - 1];
    const BiPoly& C = t.C.values[n - 1];
    t.R.values.push_back(c.u2 * R + c.a * c.b * c.u4 * A + c.b * c.u3 * B + c.b * c.b * c.u4 * C);
    t.A.values.push_back(c.u3 * R + c.a * c.b * c.u5 * A + c.b * c.u4 * B + c.b * c.b * c.u5 * C);
    t.B.values.push_back(c.u3 * R + c.b * c.u4 * A);
    t.C.values.push_back(c.u4 * R + c.b * c.u5 * A);
  }
  return t;
}

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m.entries[i][i] = BiPoly(1);
  return m;
}

Matrix4 coefficient_matrix(int q) {
  check_q(q, "coefficient_matrix");
  QContext c(q);
  const BiPoly ab = c.a * c.b;
  const BiPoly b2 = c.b * c.b;
  Matrix4 m;
  m.entries = {{{c.u2, ab * c.u4, c.b * c.u3, b2 * c.u4},
                {c.u3, ab * c.u5, c.b * c.u4, b2 * c.u5},
                {c.u3, c.b * c.u4, BiPoly(), BiPoly()},
                {c.u4, c.b * c.u5, BiPoly(), BiPoly()}}};
  return m;
}

namespace {

// Dense univariate polynomials in x with BiPoly coefficients, just enough
// for the 4x4 determinant expansion.
using XPoly = std::vector<BiPoly>;

XPoly xp_mul(const XPoly& p, const XPoly& q) {
  if (p.empty() || q.empty()) return {};
  XPoly r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

void xp_add_scaled(XPoly& acc, const XPoly& p, bool negate) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (negate)
      acc[i] -= p[i];
    else
      acc[i] += p[i];
  }
}

XPoly xp_det(const std::vector<std::vector<XPoly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  XPoly det;
  for (size_t k = 0; k < n; ++k) {
    std::vector<std::vector<XPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<XPoly> row;
      for (size_t j = 0; j < n; ++j)
        if (j != k) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    xp_add_scaled(det, xp_mul(m[0][k], xp_det(minor)), k % 2 == 1);
  }
  return det;
}

}  // namespace

std::array<BiPoly, 4> characteristic_coeffs(const Matrix4& m) {
  std::vector<std::vector<XPoly>> xm(4, std::vector<XPoly>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      XPoly e{-m.entries[i][j]};
      if (i == j) e.push_back(BiPoly(1));
      xm[i][j] = std::move(e);
    }
  XPoly det = xp_det(xm);
  det.resize(5);
  if (!(det[4] == BiPoly(1)))
    throw InvariantViolation("characteristic_coeffs: leading coefficient is not 1");
  return {det[3], det[2], det[1], det[0]};
}

CoeffSet closed_coeffs(int q) {
  check_q(q, "closed_coeffs");
  QContext c(q);
  const BiPoly& a = c.a;
  const BiPoly& b = c.b;
  const BiPoly a2 = a * a;
  const BiPoly b2 = b * b;
  const BiPoly b3 = b2 * b;
  const BiPoly b4 = b2 * b2;
  const BiPoly &u2 = c.u2, &u3 = c.u3, &u4 = c.u4, &u5 = c.u5;

  // first closed form, in u_{q-5}..u_{q-2}
  const BiPoly alpha1 = a * b * u5 + u2;
  const BiPoly beta1 =
      b * (b2 * u5 * u5 - a * u5 * u2 + BiPoly(2) * b * u4 * u4 + a * u4 * u3 + u3 * u3);
  const BiPoly gamma1 =
      -(b2 * (b * u5 * u5 * u2 - BiPoly(2) * u4 * u3 * u3 + a * u5 * u3 * u3 + u4 * u4 * u2));
  const BiPoly delta_quartic =
      -(b4 * (u5 * u5 * u3 * u3 - BiPoly(2) * u5 * u4 * u4 * u3 + u4 * u4 * u4 * u4));

  // second closed form, in u_{q-4} and u_{q-5} only
  const BiPoly alpha2 = (a2 + b) * u4 + BiPoly(2) * a * b * u5;
  const BiPoly beta2 = (BiPoly(2) * a2 + BiPoly(2) * b) * b * u4 * u4 +
                       (-(a2 * a) + BiPoly(2) * a * b) * b * u4 * u5 +
                       (-(a2 * b) + BiPoly(2) * b2) * b * u5 * u5;
  const BiPoly gamma2 = (a2 - b) * b2 * u4 * u4 * u4 -
                        (a2 * a - BiPoly(3) * a * b) * b2 * u4 * u4 * u5 -
                        (BiPoly(3) * a2 * b - b2) * b2 * u4 * u5 * u5 -
                        BiPoly(2) * a * b4 * u5 * u5 * u5;
  const BiPoly delta_pow = -BiPoly::monomial(1, 0, 2 * (q - 2));

  if (!(alpha1 == alpha2 && beta1 == beta2 && gamma1 == gamma2 && delta_quartic == delta_pow))
    throw InvariantViolation("closed_coeffs: the two closed forms disagree at q = " +
                             std::to_string(q));
  return {q, alpha1, beta1, gamma1, delta_pow};
}

std::vector<CoeffSet> coeff_tables_recursive(int q_max) {
  check_q(q_max, "coeff_tables_recursive");
  const BiPoly a = BiPoly::var_a();
  const BiPoly b = BiPoly::var_b();
  const BiPoly a2 = a * a;
  const BiPoly b2 = b * b;
  const BiPoly b3 = b2 * b;

  // seeds
  std::vector<BiPoly> alpha{a2 + b, a * (a2 + BiPoly(3) * b)};
  std::vector<BiPoly> beta{BiPoly(2) * b * (a2 + b), b * (a2 + b) * (a2 + BiPoly(2) * b),
                           b * (a2.pow(3) + BiPoly(6) * a2 * a2 * b +
                                BiPoly(10) * a2 * b2 + BiPoly(2) * b3)};
  std::vector<BiPoly> gamma{b2 * (a2 - b), -(a * b3 * (a2 + b))};
  std::vector<BiPoly> delta{-(b2 * b2)};

  for (int q = 6; q <= q_max; ++q) alpha.push_back(a * alpha[q - 5] + b * alpha[q - 6]);
  for (int q = 7; q <= q_max; ++q)
    beta.push_back((a2 + b) * beta[q - 5] + b * (a2 + b) * beta[q - 6] - b3 * beta[q - 7]);
  for (int q = 6; q <= q_max; ++q) gamma.push_back(-(a * b * gamma[q - 5]) + b3 * gamma[q - 6]);
  for (int q = 5; q <= q_max; ++q) delta.push_back(b2 * delta[q - 5]);

  std::vector<CoeffSet> out;
  for (int q = 4; q <= q_max; ++q)
    out.push_back({q, alpha[q - 4], beta[q - 4], gamma[q - 4], delta[q - 4]});
  return out;
}

namespace {

// The two published shapes of R_3; they must expand to the same polynomial.
BiPoly closed_R3_compact(const QContext& c) {
  const BiPoly& a = c.a;
  const BiPoly& b = c.b;
  const BiPoly two(2);
  return (c.u2 * c.u2 + two * a * b * c.u4 * c.u3 + two * b * c.u3 * c.u3 +
          two * b * b * c.u4 * c.u4) *
             c.u2 +
         b * b * (c.u3 * c.u4 + (a * a + b) * c.u4 * c.u5 + a * c.u4 * c.u4) * c.u3 +
         a * b * b * b * c.u4 * c.u4 * c.u5;
}

BiPoly closed_R3_expanded(const QContext& c) {
  const BiPoly& a = c.a;
  const BiPoly& b = c.b;
  const BiPoly b2 = b * b;
  const BiPoly b3 = b2 * b;
  const BiPoly R2 = c.u2 * c.u2 + a * b * c.u4 * c.u3 + b * c.u3 * c.u3 + b2 * c.u4 * c.u4;
  return R2 * c.u2 +
         (a * b * c.u2 * c.u4 + a * a * b2 * c.u4 * c.u5 + b2 * c.u3 * c.u4 +
          b3 * c.u4 * c.u5) *
             c.u3 +
         (b * c.u2 * c.u3 + a * b2 * c.u4 * c.u4) * c.u3 +
         (b2 * c.u2 * c.u4 + a * b3 * c.u4 * c.u5) * c.u4;
}

}  // namespace

SequenceTable closed_R_table(int q, int N) {
  check_q(q, "closed_R_table");
  check_n(N, "closed_R_table");
  QContext c(q);

  const BiPoly R3a = closed_R3_compact(c);
  const BiPoly R3b = closed_R3_expanded(c);
  if (!(R3a == R3b))
    throw InvariantViolation("closed_R_table: the two R_3 forms disagree at q = " +
                             std::to_string(q));

  SequenceTable t{q, SeqKind::R, Provenance::closed, {}};
  t.values.push_back(BiPoly(1));
  if (N >= 1) t.values.push_back(c.u2);
  if (N >= 2)
    t.values.push_back(c.u2 * c.u2 + c.a * c.b * c.u4 * c.u3 + c.b * c.u3 * c.u3 +
                       c.b * c.b * c.u4 * c.u4);
  if (N >= 3) t.values.push_back(R3a);

  const CoeffSet k = closed_coeffs(q);
  for (int n = 4; n <= N; ++n)
    t.values.push_back(k.alpha * t.values[n - 1] + k.beta * t.values[n - 2] +
                       k.gamma * t.values[n - 3] + k.delta * t.values[n - 4]);
  return t;
}

SequenceTable fib_r_table(int q, int N) {
  check_q(q, "fib_r_table");
  check_n(N, "fib_r_table");
  const Int f2 = shifted_fib(q - 2);
  const Int f3 = shifted_fib(q - 3);
  const Int f4 = shifted_fib(q - 4);
  const Int f5 = shifted_fib(q - 5);
  const Int sign_q = q % 2 == 0 ? 1 : -1;  // (-1)^q

  std::vector<Int> r;
  r.push_back(1);
  if (N >= 1) r.push_back(f2);
  if (N >= 2) r.push_back(7 * f4 * f4 + 7 * f4 * f5 + 2 * f5 * f5);
  if (N >= 3)
    r.push_back(22 * f4 * f4 * f4 + 36 * f4 * f4 * f5 + 19 * f4 * f5 * f5 + 3 * f5 * f5 * f5);
  const Int ca = 2 * f3;
  const Int cb = 5 * f4 * f4 - sign_q;  // (-1)^{q-1} = -(-1)^q
  const Int cc = 2 * sign_q * f5;
  for (int n = 4; n <= N; ++n) r.push_back(ca * r[n - 1] + cb * r[n - 2] + cc * r[n - 3] - r[n - 4]);

  SequenceTable t{q, SeqKind::r, Provenance::fib, {}};
  for (int n = 0; n <= N; ++n) t.values.push_back(BiPoly(r[n]));
  return t;
}

UnbreakableTables unbreakable_system_tables(int q, int N) {
  check_q(q, "unbreakable_system_tables");
  check_n(N, "unbreakable_system_tables", 1);
  QContext c(q);
  // index 0: empty board for Rtilde, no board for the subboard kinds
  UnbreakableTables t{{q, SeqKind::Rtilde, Provenance::system, {BiPoly(1)}},
                      {q, SeqKind::Atilde, Provenance::system, {BiPoly()}},
                      {q, SeqKind::Btilde, Provenance::system, {BiPoly()}},
                      {q, SeqKind::Ctilde, Provenance::system, {BiPoly()}}};
  t.R.values.push_back(c.u2);
  t.A.values.push_back(c.u3);
  t.B.values.push_back(c.u3);
  t.C.values.push_back(c.u4);
  for (int n = 2; n <= N; ++n) {
    const BiPoly& A = t.A.values[n - 1];
    const BiPoly& B = t.B.values[n - 1];
    const BiPoly& C = t.C.values[n - 1];
    t.R.values.push_back(c.a * c.b * c.u4 * A + c.b * c.u3 * B + c.b * c.b * c.u4 * C);
    t.A.values.push_back(c.a * c.b * c.u5 * A + c.b * c.u4 * B + c.b * c.b * c.u5 * C);
    t.B.values.push_back(c.b * c.u4 * A);
    t.C.values.push_back(c.b * c.u5 * A);
  }
  return t;
}

SequenceTable unbreakable_closed_table(int q, int N, TildeMode mode) {
  check_q(q, "unbreakable_closed_table");
  check_n(N, "unbreakable_closed_table", 1);
  QContext c(q);
  const BiPoly coef1 = c.a * c.b * c.u5;
  const BiPoly coef2 = c.b * c.b * (c.u4 * c.u4 + c.b * c.u5 * c.u5);

  SequenceTable t{q, SeqKind::Rtilde, Provenance::closed, {}};
  t.values.push_back(BiPoly(1));
  int start;
  if (mode == TildeMode::AsStated) {
    t.values.push_back(c.u2);
    if (N >= 2)
      t.values.push_back(c.a * c.b * c.u3 * c.u4 + c.b * c.u3 * c.u3 + c.b * c.b * c.u4 * c.u4);
    start = 3;
  } else {
    UnbreakableTables sys = unbreakable_system_tables(q, std::min(N, 4));
    for (int n = 1; n <= std::min(N, 4); ++n) t.values.push_back(sys.R.values[n]);
    start = 5;
  }
  for (int n = start; n <= N; ++n)
    t.values.push_back(coef1 * t.values[n - 1] + coef2 * t.values[n - 2]);
  return t;
}

SequenceTable fib_unbreakable_table(int q, int N, TildeMode mode) {
  check_q(q, "fib_unbreakable_table");
  check_n(N, "fib_unbreakable_table", 1);
  const Int f2 = shifted_fib(q - 2);
  const Int f4 = shifted_fib(q - 4);
  const Int f5 = shifted_fib(q - 5);
  const Int sign_q1 = q % 2 == 0 ? -1 : 1;  // (-1)^{q-1}
  const Int coef1 = f5;
  const Int coef2 = f4 * f4 + f5 * f5;

  std::vector<Int> r;
  r.push_back(1);
  int start;
  if (mode == TildeMode::AsStated) {
    r.push_back(f2);
    if (N >= 2) r.push_back(2 * f4 * f2 + sign_q1);
    start = 3;
  } else {
    UnbreakableTables sys = unbreakable_system_tables(q, std::min(N, 4));
    for (int n = 1; n <= std::min(N, 4); ++n) r.push_back(sys.R.values[n].eval(1, 1));
    start = 5;
  }
  for (int n = start; n <= N; ++n) r.push_back(coef1 * r[n - 1] + coef2 * r[n - 2]);

  SequenceTable t{q, SeqKind::rtilde, Provenance::fib, {}};
  for (int n = 0; n <= N; ++n) t.values.push_back(BiPoly(r[n]));
  return t;
}

}  // namespace hyptile
