#ifndef HYPTILE_RECURRENCE_HPP
#define HYPTILE_RECURRENCE_HPP

#include <array>
#include <string>
#include <vector>

#include "hyptile/bipoly.hpp"

namespace hyptile {

// Sequence machinery for the weighted tiling counts R_n of the full
// (2 x n)-board on {4,q} and their companions:
//
//   u_n        strip counts, u_n = a u_{n-1} + b u_{n-2}, u_0 = 1, u_1 = a,
//              with u_{-1} = 0 so every q >= 4 formula evaluates uniformly
//   R/A/B/C    the coupled first-order system over the full board and the
//              three trailing-cell subboards
//   alpha..delta  coefficients of the order-4 recurrence satisfied by R_n,
//              obtainable three ways (characteristic polynomial of the
//              4x4 coefficient matrix, two explicit closed forms, and
//              seeded recurrences in q); all routes must agree
//   tilde      the same apparatus restricted to unbreakable tilings; the
//              collapsed two-term recurrence for Rtilde only annihilates
//              the sequence from n = 5 on (the coupled matrix is rank
//              deficient, giving a two-step transient), so it is provided
//              in an `as_stated` mode seeded at n = 1,2 and a `corrected`
//              mode seeded at n = 3,4
//   r, rtilde  integer specializations at a = b = 1 with coefficients
//              expressed through shifted Fibonacci numbers

// Shifted Fibonacci: f_{-1} = 0, f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}.
Int shifted_fib(int n);

// u_{-1}..u_{max_n}, symbolic.
class USeq {
public:
  explicit USeq(int max_n);
  const BiPoly& at(int n) const;  // n >= -1
  int max_index() const { return static_cast<int>(vals_.size()) - 2; }

private:
  std::vector<BiPoly> vals_;  // vals_[k] = u_{k-1}
};

enum class SeqKind { R, A, B, C, Rtilde, Atilde, Btilde, Ctilde, u, r, rtilde };
enum class Provenance { oracle, system, closed, fib };

std::string seq_kind_name(SeqKind k);
std::string provenance_name(Provenance p);

struct SequenceTable {
  int q = 0;  // 0 when not applicable (u tables)
  SeqKind kind = SeqKind::R;
  Provenance provenance = Provenance::closed;
  std::vector<BiPoly> values;  // index n = 0..N

  const BiPoly& at(int n) const;
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

// u_0..u_N as a table.
SequenceTable u_table(int N);

// Coupled system for n >= 1 from the seeds R_0 = 1, A_0 = B_0 = C_0 = 0.
// The step already reproduces the n = 1 column counts, in particular
// A_1 = u_{q-3} (the count of the (2 x 1) A-subboard, a path of q-3 cells).
struct SystemTables {
  SequenceTable R, A, B, C;
};
SystemTables system_tables(int q, int N);

// 4x4 coefficient matrix of the coupled system, rows and columns ordered
// (R, A, B, C).
struct Matrix4 {
  std::array<std::array<BiPoly, 4>, 4> entries;
  static Matrix4 identity();
};
Matrix4 coefficient_matrix(int q);

// (c3, c2, c1, c0) with det(x I - M) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0,
// by exact symbolic expansion.
std::array<BiPoly, 4> characteristic_coeffs(const Matrix4& m);

struct CoeffSet {
  int q = 0;
  BiPoly alpha, beta, gamma, delta;  // R_n = alpha R_{n-1} + ... + delta R_{n-4}
  friend bool operator==(const CoeffSet&, const CoeffSet&) = default;
};

// Both explicit closed forms of (alpha, beta, gamma, delta); they are
// computed independently and compared before returning (InvariantViolation
// on mismatch).  delta is returned as -b^{2(q-2)} after being checked
// against its quartic product form.
CoeffSet closed_coeffs(int q);

// Coefficient tables for q = 4..q_max grown from seeded recurrences in q:
// alpha and gamma are two-term, beta three-term, delta a plain geometric
// step delta_{q+1} = b^2 delta_q.
std::vector<CoeffSet> coeff_tables_recursive(int q_max);

// R_0..R_3 from the closed initial-value formulas (the R_3 form is
// cross-checked against its expanded variant), then the order-4 recurrence.
SequenceTable closed_R_table(int q, int N);

// Integer specialization at a = b = 1: quartic recurrence with shifted
// Fibonacci coefficients and closed integer seeds.
SequenceTable fib_r_table(int q, int N);

// Unbreakable analogue of the coupled system, n >= 1.  Index 0 stores the
// empty-board count 1 for Rtilde and 0 for the subboard tables.
struct UnbreakableTables {
  SequenceTable R, A, B, C;
};
UnbreakableTables unbreakable_system_tables(int q, int N);

enum class TildeMode { AsStated, Corrected };
std::string tilde_mode_name(TildeMode m);

// Two-term recurrence for the unbreakable counts.
//   AsStated:  seeds at n = 1, 2, recurrence from n = 3 (diverges from the
//              true counts, first at q = 4, n = 4 and q >= 5, n = 3).
//   Corrected: values 1..4 from the coupled system, recurrence from n = 5
//              (matches the system everywhere).
SequenceTable unbreakable_closed_table(int q, int N, TildeMode mode);

// a = b = 1 specialization of the two-term recurrence, same modes.
SequenceTable fib_unbreakable_table(int q, int N, TildeMode mode);

}  // namespace hyptile

#endif
