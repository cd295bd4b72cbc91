#include "hyptile/identity.hpp"

#include <algorithm>

namespace hyptile {

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExpectedFail: return "expected_fail";
  }
  return "?";
}

namespace {

// Collects equality checks into a report; the first mismatch is frozen as
// the counterexample and later checks are skipped.
struct Checker {
  CheckReport rep;
  const std::vector<WeightPoint>& points;

  Checker(std::string leg, std::string params, const std::vector<WeightPoint>& pts)
      : points(pts) {
    rep.leg = std::move(leg);
    rep.params = std::move(params);
  }

  bool failed() const { return rep.status == CheckStatus::Fail; }

  void compare(const BiPoly& lhs, const BiPoly& rhs, int q, int n, int m = -1) {
    if (failed()) return;
    ++rep.checked;
    if (!(lhs == rhs)) {
      rep.status = CheckStatus::Fail;
      rep.counterexample = Counterexample{q, n, m, true, 0, 0, lhs.str(), rhs.str()};
      return;
    }
    // redundant numeric layer at the weight points
    for (const auto& [av, bv] : points) {
      ++rep.checked;
      const Int le = lhs.eval(av, bv);
      const Int re = rhs.eval(av, bv);
      if (le != re) {
        rep.status = CheckStatus::Fail;
        rep.counterexample = Counterexample{q, n, m, false, av, bv, le.str(), re.str()};
        return;
      }
    }
  }
};

struct Tables {
  SystemTables sys;
  UnbreakableTables tilde;
};

Tables make_tables(int q, int N) {
  return {system_tables(q, N), unbreakable_system_tables(q, std::max(N, 1))};
}

const BiPoly& R(const Tables& t, int n) { return t.sys.R.at(n); }
const BiPoly& Rt(const Tables& t, int n) { return t.tilde.R.at(n); }

void run_identity1(const Tables& t, int N, Checker& ck) {
  for (int n = 1; n <= N && !ck.failed(); ++n) {
    BiPoly rhs;
    for (int i = 0; i <= n - 1; ++i) rhs += R(t, i) * Rt(t, n - i);
    ck.compare(R(t, n), rhs, t.sys.R.q, n);
  }
}

void run_identity2(const Tables& t, int N, Checker& ck) {
  for (int n = 1; n <= N && !ck.failed(); ++n) {
    BiPoly rhs;
    for (int i = 1; i <= n; ++i) rhs += R(t, n - i) * Rt(t, i);
    ck.compare(R(t, n), rhs, t.sys.R.q, n);
  }
}

BiPoly concat_rhs(const Tables& t, int n, int m) {
  BiPoly rhs = R(t, n) * R(t, m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) rhs += R(t, n - i) * R(t, m - j) * Rt(t, i + j);
  return rhs;
}

void run_identity3(const Tables& t, int sum_cap, Checker& ck) {
  for (int n = 1; n <= sum_cap - 1 && !ck.failed(); ++n)
    for (int m = 1; n + m <= sum_cap && !ck.failed(); ++m)
      ck.compare(R(t, n + m), concat_rhs(t, n, m), t.sys.R.q, n, m);
}

void run_identity4(const Tables& t, int n_cap, Checker& ck) {
  for (int n = 1; n <= n_cap && !ck.failed(); ++n) {
    BiPoly rhs = R(t, n) * R(t, 1);
    for (int i = 1; i <= n; ++i) rhs += R(t, n - i) * Rt(t, i + 1);
    ck.compare(R(t, n + 1), rhs, t.sys.R.q, n);
  }
}

void run_identity5(const Tables& t, int k_max, int prod_cap, Checker& ck) {
  for (int k = 2; k <= k_max && !ck.failed(); ++k)
    for (int n = 1; k * n <= prod_cap && !ck.failed(); ++n)
      ck.compare(R(t, k * n), concat_rhs(t, n, (k - 1) * n), t.sys.R.q, n, k);
}

void run_identity6(const Tables& t, int n_cap, Checker& ck) {
  for (int n = 1; 2 * n <= n_cap && !ck.failed(); ++n)
    for (int k = 0; k < n && !ck.failed(); ++k)
      ck.compare(R(t, 2 * n), concat_rhs(t, n - k, n + k), t.sys.R.q, n, k);
}

void run_identity7(const Tables& t, int n_max, int m_max, Checker& ck) {
  for (int n = 1; n <= n_max && !ck.failed(); ++n)
    for (int m = 1; m <= m_max && !ck.failed(); ++m) {
      BiPoly rhs;
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j <= m - 1; ++j)
          rhs += R(t, i) * R(t, j) * Rt(t, n - i) * Rt(t, m - j);
      ck.compare(R(t, n) * R(t, m), rhs, t.sys.R.q, n, m);
    }
}

std::string base_params(int q) { return "q=" + std::to_string(q) + " Rtilde=system"; }

}  // namespace

CheckReport check_decomposition(int q, int N, const std::vector<WeightPoint>& points) {
  if (N < 0) throw ParameterError("check_decomposition: N must be >= 0");
  Checker ck("decomposition", base_params(q) + " n<=" + std::to_string(N), points);
  if (N >= 1) {
    Tables t = make_tables(q, N);
    run_identity1(t, N, ck);
    run_identity2(t, N, ck);
  }
  return ck.rep;
}

CheckReport check_concatenation(int q, int n_max, int m_max, int k_max,
                                const std::vector<WeightPoint>& points) {
  if (n_max < 1 || m_max < 1 || k_max < 2)
    throw ParameterError("check_concatenation: need n_max, m_max >= 1 and k_max >= 2");
  const int sum_cap = n_max + m_max;
  Checker ck("concatenation",
             base_params(q) + " n+m<=" + std::to_string(sum_cap) + " k<=" + std::to_string(k_max),
             points);
  Tables t = make_tables(q, sum_cap + 1);
  run_identity3(t, sum_cap, ck);
  run_identity4(t, sum_cap, ck);
  run_identity5(t, k_max, sum_cap, ck);
  run_identity6(t, sum_cap, ck);
  return ck.rep;
}

CheckReport check_product(int q, int n_max, int m_max, const std::vector<WeightPoint>& points) {
  if (n_max < 1 || m_max < 1) throw ParameterError("check_product: need n_max, m_max >= 1");
  Checker ck("product",
             base_params(q) + " n<=" + std::to_string(n_max) + " m<=" + std::to_string(m_max),
             points);
  Tables t = make_tables(q, std::max(n_max, m_max));
  run_identity7(t, n_max, m_max, ck);
  return ck.rep;
}

CheckReport check_identity(int id, int q, int n_max, int m_max, int k_max,
                           const std::vector<WeightPoint>& points) {
  if (id < 1 || id > 7) throw ParameterError("check_identity: id must be 1..7");
  Checker ck("identity_" + std::to_string(id), base_params(q), points);
  const int sum_cap = n_max + m_max;
  switch (id) {
    case 1: {
      Tables t = make_tables(q, n_max);
      run_identity1(t, n_max, ck);
      break;
    }
    case 2: {
      Tables t = make_tables(q, n_max);
      run_identity2(t, n_max, ck);
      break;
    }
    case 3: {
      Tables t = make_tables(q, sum_cap);
      run_identity3(t, sum_cap, ck);
      break;
    }
    case 4: {
      Tables t = make_tables(q, n_max + 1);
      run_identity4(t, n_max, ck);
      break;
    }
    case 5: {
      Tables t = make_tables(q, sum_cap);
      run_identity5(t, k_max, sum_cap, ck);
      break;
    }
    case 6: {
      Tables t = make_tables(q, 2 * n_max);
      run_identity6(t, 2 * n_max, ck);
      break;
    }
    case 7: {
      Tables t = make_tables(q, std::max(n_max, m_max));
      run_identity7(t, n_max, m_max, ck);
      break;
    }
  }
  return ck.rep;
}

bool CrosscheckBundle::pass() const {
  return std::none_of(legs.begin(), legs.end(),
                      [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

namespace {

std::string range_params(IntRange qr, IntRange nr) {
  return "q=" + qr.str() + " n=" + nr.str();
}

CheckReport leg_oracle_R(IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts,
                         int cell_limit) {
  Checker ck("oracle_vs_system_vs_closed_R", range_params(qr, nr), pts);
  int skipped = 0;
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    if (nr.empty()) break;
    SystemTables sys = system_tables(q, nr.hi);
    SequenceTable closed = closed_R_table(q, nr.hi);
    for (int n = std::max(0, nr.lo); n <= nr.hi && !ck.failed(); ++n) {
      if (n * (q - 2) > cell_limit) {
        ++skipped;
        continue;
      }
      BiPoly oracle = weighted_count(build_board(BoardSpec::full(q, n)), cell_limit);
      ck.compare(oracle, sys.R.at(n), q, n);
      ck.compare(sys.R.at(n), closed.at(n), q, n);
    }
  }
  ck.rep.params += " skipped_over_limit=" + std::to_string(skipped);
  return ck.rep;
}

CheckReport leg_oracle_tilde(IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts,
                             int cell_limit) {
  Checker ck("oracle_vs_system_unbreakable", range_params(qr, nr), pts);
  int skipped = 0;
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    if (nr.empty()) break;
    UnbreakableTables tilde = unbreakable_system_tables(q, std::max(1, nr.hi));
    for (int n = std::max(0, nr.lo); n <= nr.hi && !ck.failed(); ++n) {
      if (n * (q - 2) > cell_limit) {
        ++skipped;
        continue;
      }
      BiPoly oracle = unbreakable_count(build_board(BoardSpec::full(q, n)), cell_limit);
      ck.compare(oracle, tilde.R.at(n), q, n);
    }
  }
  ck.rep.params += " skipped_over_limit=" + std::to_string(skipped);
  return ck.rep;
}

CheckReport leg_charpoly(IntRange qr, const std::vector<WeightPoint>& pts) {
  Checker ck("charpoly_vs_closed_coeffs", "q=" + qr.str(), pts);
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    const auto cs = characteristic_coeffs(coefficient_matrix(q));
    const CoeffSet k = closed_coeffs(q);
    ck.compare(cs[0], -k.alpha, q, -1);
    ck.compare(cs[1], -k.beta, q, -1);
    ck.compare(cs[2], -k.gamma, q, -1);
    ck.compare(cs[3], -k.delta, q, -1);
  }
  return ck.rep;
}

CheckReport leg_recursive_coeffs(IntRange qr, const std::vector<WeightPoint>& pts) {
  Checker ck("closed_vs_recursive_coeffs", "q=" + qr.str(), pts);
  if (!qr.empty()) {
    const auto rec = coeff_tables_recursive(qr.hi);
    for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
      const CoeffSet k = closed_coeffs(q);
      const CoeffSet& r = rec[q - 4];
      ck.compare(r.alpha, k.alpha, q, -1);
      ck.compare(r.beta, k.beta, q, -1);
      ck.compare(r.gamma, k.gamma, q, -1);
      ck.compare(r.delta, k.delta, q, -1);
    }
  }
  return ck.rep;
}

CheckReport leg_delta_law(IntRange qr, const std::vector<WeightPoint>& pts) {
  Checker ck("delta_step_law", "q=" + qr.str(), pts);
  const BiPoly b2 = BiPoly::var_b() * BiPoly::var_b();
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    const BiPoly delta = closed_coeffs(q).delta;
    ck.compare(delta, -BiPoly::monomial(1, 0, 2 * (q - 2)), q, -1);
    if (q < qr.hi) ck.compare(closed_coeffs(q + 1).delta, b2 * delta, q, -1);
  }
  return ck.rep;
}

// The q = 4 coefficients factor through the cubic
// x^3 - (a^2+2b) x^2 - a^2 b x + b^3, and both R_n and the shifted sums
// S_n = R_n + b R_{n-1} satisfy that cubic recurrence.
CheckReport leg_q4_reduction(const std::vector<WeightPoint>& pts) {
  Checker ck("q4_cubic_reduction", "q=4 n<=10", pts);
  const BiPoly a = BiPoly::var_a();
  const BiPoly b = BiPoly::var_b();
  const BiPoly a2 = a * a;
  const BiPoly c0 = b.pow(3), c1 = -(a2 * b), c2 = -(a2 + BiPoly(2) * b), c3 = BiPoly(1);

  // (x + b) * cubic == quartic with the closed q = 4 coefficients
  const CoeffSet k = closed_coeffs(4);
  const BiPoly q0 = -k.delta, q1 = -k.gamma, q2 = -k.beta, q3 = -k.alpha;
  ck.compare(b * c0, q0, 4, -1);
  ck.compare(c0 + b * c1, q1, 4, -1);
  ck.compare(c1 + b * c2, q2, 4, -1);
  ck.compare(c2 + b * c3, q3, 4, -1);

  const int N = 10;
  SequenceTable Rt_ = closed_R_table(4, N);
  auto cubic_holds = [&](const std::vector<BiPoly>& s) {
    for (int n = 3; n <= N && !ck.failed(); ++n)
      ck.compare(s[n], (a2 + BiPoly(2) * b) * s[n - 1] + a2 * b * s[n - 2] - b.pow(3) * s[n - 3],
                 4, n);
  };
  cubic_holds(Rt_.values);
  std::vector<BiPoly> S{BiPoly(1)};  // S_0 = R_0 (R_{-1} = 0)
  for (int n = 1; n <= N; ++n) S.push_back(Rt_.at(n) + b * Rt_.at(n - 1));
  cubic_holds(S);

  // integer form: r_n = 3 r_{n-1} + r_{n-2} - r_{n-3}
  SequenceTable r = fib_r_table(4, N);
  for (int n = 3; n <= N && !ck.failed(); ++n)
    ck.compare(r.at(n), BiPoly(3) * r.at(n - 1) + r.at(n - 2) - r.at(n - 3), 4, n);
  return ck.rep;
}

CheckReport leg_fib_R(IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts) {
  Checker ck("fib_specialization_R", range_params(qr, nr), pts);
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    const int N = std::max(0, nr.hi);
    SequenceTable closed = closed_R_table(q, N);
    SequenceTable fib = fib_r_table(q, N);
    for (int n = std::max(0, nr.lo); n <= nr.hi && !ck.failed(); ++n)
      ck.compare(fib.at(n), BiPoly(closed.at(n).eval(1, 1)), q, n);
    // coefficient bridge at a = b = 1
    const CoeffSet k = closed_coeffs(q);
    const Int sq = q % 2 == 0 ? 1 : -1;  // (-1)^q
    ck.compare(BiPoly(k.alpha.eval(1, 1)), BiPoly(2 * shifted_fib(q - 3)), q, -1);
    ck.compare(BiPoly(k.beta.eval(1, 1)),
               BiPoly(5 * shifted_fib(q - 4) * shifted_fib(q - 4) - sq), q, -1);
    ck.compare(BiPoly(k.gamma.eval(1, 1)), BiPoly(2 * sq * shifted_fib(q - 5)), q, -1);
    ck.compare(BiPoly(k.delta.eval(1, 1)), BiPoly(-1), q, -1);
  }
  return ck.rep;
}

CheckReport leg_fib_tilde(IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts) {
  Checker ck("fib_specialization_unbreakable", range_params(qr, nr), pts);
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    const int N = std::max(2, nr.hi);
    UnbreakableTables tilde = unbreakable_system_tables(q, N);
    const Int s1 = q % 2 == 0 ? -1 : 1;  // (-1)^{q-1}
    ck.compare(BiPoly(2 * shifted_fib(q - 4) * shifted_fib(q - 2) + s1),
               BiPoly(tilde.R.at(2).eval(1, 1)), q, 2);
    SequenceTable fib_cor = fib_unbreakable_table(q, N, TildeMode::Corrected);
    for (int n = 1; n <= nr.hi && !ck.failed(); ++n)
      ck.compare(fib_cor.at(n), BiPoly(tilde.R.at(n).eval(1, 1)), q, n);
    SequenceTable fib_as = fib_unbreakable_table(q, N, TildeMode::AsStated);
    SequenceTable closed_as = unbreakable_closed_table(q, N, TildeMode::AsStated);
    for (int n = 1; n <= nr.hi && !ck.failed(); ++n)
      ck.compare(fib_as.at(n), BiPoly(closed_as.at(n).eval(1, 1)), q, n);
  }
  return ck.rep;
}

CheckReport leg_identity(int id, IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts) {
  Checker ck("identity_" + std::to_string(id), range_params(qr, nr) + " Rtilde=system", pts);
  const int cap = std::max(0, nr.hi);
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    if (cap < 1) break;
    Tables t = make_tables(q, std::max(1, cap));
    switch (id) {
      case 1: run_identity1(t, cap, ck); break;
      case 2: run_identity2(t, cap, ck); break;
      case 3: run_identity3(t, cap, ck); break;
      case 4: run_identity4(t, cap - 1, ck); break;
      case 5: run_identity5(t, 3, cap, ck); break;
      case 6: run_identity6(t, cap, ck); break;
      case 7: run_identity7(t, cap / 2, cap / 2, ck); break;
    }
  }
  return ck.rep;
}

CheckReport leg_tilde_corrected(IntRange qr, IntRange nr, const std::vector<WeightPoint>& pts) {
  Checker ck("tilde_closed_corrected_vs_system", range_params(qr, nr), pts);
  for (int q = qr.lo; q <= qr.hi && !ck.failed(); ++q) {
    const int N = std::max(1, nr.hi);
    UnbreakableTables tilde = unbreakable_system_tables(q, N);
    SequenceTable cor = unbreakable_closed_table(q, N, TildeMode::Corrected);
    for (int n = 1; n <= nr.hi && !ck.failed(); ++n) ck.compare(cor.at(n), tilde.R.at(n), q, n);
  }
  return ck.rep;
}

// Exhibit leg: the as-stated two-term recurrence must diverge from the
// coupled system at n = 4 for q = 4 and at n = 3 for q >= 5.  Finding the
// documented divergence is reported as ExpectedFail; anything else (no
// divergence inside a range that must show it, or divergence elsewhere)
// fails the bundle.
CheckReport leg_tilde_as_stated(IntRange qr, IntRange nr) {
  CheckReport rep;
  rep.leg = "tilde_closed_as_stated_vs_system";
  rep.params = range_params(qr, nr);
  int inconclusive = 0;
  for (int q = qr.lo; q <= qr.hi; ++q) {
    const int expected_n = q == 4 ? 4 : 3;
    const int N = std::max(1, nr.hi);
    UnbreakableTables tilde = unbreakable_system_tables(q, N);
    SequenceTable as = unbreakable_closed_table(q, N, TildeMode::AsStated);
    int first = -1;
    for (int n = 1; n <= nr.hi; ++n) {
      ++rep.checked;
      if (!(as.at(n) == tilde.R.at(n))) {
        first = n;
        break;
      }
    }
    if (first == -1) {
      if (nr.hi >= expected_n) {
        rep.status = CheckStatus::Fail;
        rep.counterexample =
            Counterexample{q, nr.hi, -1, true, 0, 0,
                           "as-stated matched the system up to n=" + std::to_string(nr.hi),
                           "expected divergence at n=" + std::to_string(expected_n)};
        return rep;
      }
      ++inconclusive;
      continue;
    }
    if (first != expected_n) {
      rep.status = CheckStatus::Fail;
      rep.counterexample = Counterexample{q, first, -1, true, 0, 0, as.at(first).str(),
                                          tilde.R.at(first).str()};
      return rep;
    }
    rep.status = CheckStatus::ExpectedFail;
    if (!rep.counterexample) {
      const Int le = as.at(first).eval(1, 1);
      const Int re = tilde.R.at(first).eval(1, 1);
      if (le != re)
        rep.counterexample = Counterexample{q, first, -1, false, 1, 1, le.str(), re.str()};
      else
        rep.counterexample = Counterexample{q, first, -1, true, 0, 0, as.at(first).str(),
                                            tilde.R.at(first).str()};
    }
  }
  rep.params += " inconclusive_q=" + std::to_string(inconclusive);
  return rep;
}

}  // namespace

CrosscheckBundle crosscheck_all(IntRange q_range, IntRange n_range,
                                const std::vector<WeightPoint>& points, int cell_limit) {
  if (!q_range.empty() && q_range.lo < 4)
    throw ParameterError("crosscheck_all: q range must start at 4 or above");
  if (!n_range.empty() && n_range.lo < 0)
    throw ParameterError("crosscheck_all: n range must start at 0 or above");

  CrosscheckBundle bundle;
  if (q_range.empty()) return bundle;

  bundle.legs.push_back(leg_oracle_R(q_range, n_range, points, cell_limit));
  bundle.legs.push_back(leg_oracle_tilde(q_range, n_range, points, cell_limit));
  bundle.legs.push_back(leg_charpoly(q_range, points));
  bundle.legs.push_back(leg_recursive_coeffs(q_range, points));
  bundle.legs.push_back(leg_delta_law(q_range, points));
  if (q_range.lo <= 4 && 4 <= q_range.hi) bundle.legs.push_back(leg_q4_reduction(points));
  bundle.legs.push_back(leg_fib_R(q_range, n_range, points));
  bundle.legs.push_back(leg_fib_tilde(q_range, n_range, points));
  for (int id = 1; id <= 7; ++id)
    bundle.legs.push_back(leg_identity(id, q_range, n_range, points));
  bundle.legs.push_back(leg_tilde_corrected(q_range, n_range, points));
  bundle.legs.push_back(leg_tilde_as_stated(q_range, n_range));
  return bundle;
}

}  // namespace hyptile
