#pragma once

// Exact non-reachability probabilities on the complete graph K_n.
//
//   f(n,k) = P_n(no vertex of a fixed k-set reaches s)
//   g(n,k) = P_n(no vertex of a fixed k-set reaches s, and s does not reach b)
//
// Both satisfy recursions that condition on the set L of vertices one step
// out of the k-set:
//
//   f(n,k) = sum_{i=0}^{n-k-1} C(n-k-1, i) (2^k - 1)^i / 2^{k(n-k)} f(n-k, i)
//   g(n,k) = sum_{i=0}^{n-k-2} C(n-k-2, i) (2^k - 1)^i / 2^{k(n-k)} g(n-k, i)
//
// with f(n,0) = 1, f(1,0) = 1, g(n,0) = f(n,1) and g(2,0) = 1/2. With
// A = {a -/-> s} and B = {s -/-> b}, P(A) = f(n,1) and P(A and B) = g(n,1).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orientcorr/dyadic.hpp"

namespace orientcorr {

inline constexpr unsigned kMaxTableN = 30;

/// Memoized f/g tables. Not thread-safe while being filled; share a filled
/// instance read-only or give each thread its own.
class KnRecursion {
public:
  const DyadicProb &f(unsigned n, unsigned k) {
    if (n < 1 || k >= n)
      throw std::invalid_argument("f(n,k) requires n >= k+1 >= 1, got (" +
                                  std::to_string(n) + "," + std::to_string(k) +
                                  ")");
    if (auto it = f_.find({n, k}); it != f_.end())
      return it->second;
    DyadicProb value = DyadicProb::one();
    if (k > 0)
      value = sum_terms(n, k, n - k - 1,
                        [this](unsigned nn, unsigned i) -> const DyadicProb & {
                          return f(nn, i);
                        });
    return f_.emplace(std::pair{n, k}, std::move(value)).first->second;
  }

  const DyadicProb &g(unsigned n, unsigned k) {
    if (n < 2 || k + 2 > n)
      throw std::invalid_argument("g(n,k) requires n >= k+2 >= 2, got (" +
                                  std::to_string(n) + "," + std::to_string(k) +
                                  ")");
    if (auto it = g_.find({n, k}); it != g_.end())
      return it->second;
    DyadicProb value =
        k == 0 ? f(n, 1)
               : sum_terms(n, k, n - k - 2,
                           [this](unsigned nn, unsigned i) -> const DyadicProb & {
                             return g(nn, i);
                           });
    return g_.emplace(std::pair{n, k}, std::move(value)).first->second;
  }

private:
  template <class Next>
  DyadicProb sum_terms(unsigned n, unsigned k, unsigned top, Next next) {
    const BigInt base = pow2(k) - 1;
    const unsigned exp = k * (n - k);
    Dyadic total = 0;
    BigInt power = 1;
    for (unsigned i = 0; i <= top; ++i) {
      total += Dyadic(binomial(top, i) * power, exp) * next(n - k, i).value();
      power *= base;
    }
    return DyadicProb(total);
  }

  std::map<std::pair<unsigned, unsigned>, DyadicProb> f_;
  std::map<std::pair<unsigned, unsigned>, DyadicProb> g_;
};

inline DyadicProb kn_f(unsigned n, unsigned k) { return KnRecursion{}.f(n, k); }
inline DyadicProb kn_g(unsigned n, unsigned k) { return KnRecursion{}.g(n, k); }

/// One row of the complete-graph table.
struct KnRow {
  unsigned n = 0;
  DyadicProb p_a;                  ///< f(n,1)
  std::optional<DyadicProb> p_ab;  ///< g(n,1), n >= 3
  BigInt scaled_a;                 ///< P(A) * 2^C(n,2)
  std::optional<BigInt> scaled_ab; ///< P(A and B) * 2^C(n,2)
  std::optional<Rational> rel_cov; ///< (P(A and B) - P(A)^2) / P(A and B)
};

inline KnRow table_row(KnRecursion &rec, unsigned n) {
  if (n < 2 || n > kMaxTableN)
    throw std::invalid_argument("table row needs 2 <= n <= " +
                                std::to_string(kMaxTableN) + ", got " +
                                std::to_string(n));
  const unsigned pairs = n * (n - 1) / 2;
  KnRow row;
  row.n = n;
  row.p_a = rec.f(n, 1);
  row.scaled_a = row.p_a.value().scaled_by_pow2(pairs);
  if (n >= 3) {
    row.p_ab = rec.g(n, 1);
    row.scaled_ab = row.p_ab->value().scaled_by_pow2(pairs);
    const Rational joint = row.p_ab->to_rational();
    const Rational pa = row.p_a.to_rational();
    row.rel_cov = (joint - pa * pa) / joint;
  }
  return row;
}

inline KnRow table_row(unsigned n) {
  KnRecursion rec;
  return table_row(rec, n);
}

/// Sign of cov(A,B) = g(n,1) - f(n,1)^2 on K_n; equals the sign of the
/// covariance of {a->s} and {s->b}.
inline int covariance_sign_kn(KnRecursion &rec, unsigned n) {
  if (n < 3)
    throw std::invalid_argument("covariance sign needs n >= 3");
  const Dyadic &pa = rec.f(n, 1).value();
  return (rec.g(n, 1).value() - pa * pa).sign();
}

inline int covariance_sign_kn(unsigned n) {
  KnRecursion rec;
  return covariance_sign_kn(rec, n);
}

// ---------------------------------------------------------------------------
// Auxiliary sums used by the P(A) and P(A and B) envelopes

/// a(n) = sum_{k=1}^{n-1} C(n,k) sum_{m=1}^{n-k} C(n-k,m) 2^{-km}
inline Rational a_sum(unsigned n) {
  Rational total = 0;
  for (unsigned k = 1; k + 1 <= n; ++k)
    for (unsigned m = 1; m <= n - k; ++m)
      total += Rational(binomial(n, k) * binomial(n - k, m), pow2(k * m));
  return total;
}

/// b(n) = sum_{k=1}^{n-1} C(n,k) sum_{i=1}^{n-1-k} C(n-k,i) 2^{-ki}
///        sum_{m=1}^{k} C(k,m) 2^{-m(n-k-i)}
inline Rational b_sum(unsigned n) {
  Rational total = 0;
  for (unsigned k = 1; k + 1 <= n; ++k)
    for (unsigned i = 1; i + k + 1 <= n; ++i) {
      Rational inner = 0;
      for (unsigned m = 1; m <= k; ++m)
        inner += Rational(binomial(k, m), pow2(m * (n - k - i)));
      total += Rational(binomial(n, k) * binomial(n - k, i), pow2(k * i)) * inner;
    }
  return total;
}

/// (p/q)^e for any integer e.
inline Rational ratio_pow(unsigned p, unsigned q, long e) {
  using boost::multiprecision::pow;
  const auto k = static_cast<unsigned>(e < 0 ? -e : e);
  const Rational r(pow(BigInt(p), k), pow(BigInt(q), k));
  return e < 0 ? Rational(1) / r : r;
}

/// c(n) = 2^{5-n} + 6.4 (7/8)^{n-1} + 10.24 (49/64)^{n-1}
inline Rational c_sum(unsigned n) {
  const long e = static_cast<long>(n) - 1;
  return pow2_rational(5 - static_cast<long>(n)) +
         Rational(32, 5) * ratio_pow(7, 8, e) +
         Rational(256, 25) * ratio_pow(49, 64, e);
}

/// Checks at one n. Envelope fields are empty where the bound does not apply.
struct BoundCheck {
  unsigned n = 0;
  std::optional<bool> pa_lower;  ///< 2^{2-n}(1 - 2^{1-n}) <= P(A), n >= 2
  std::optional<bool> pa_upper;  ///< P(A) <= 2^{2-n}(1 + 3.2 (7/8)^{n-1})
  std::optional<bool> pab_lower; ///< 2^{3-2n}(3 - 2^{4-n}) <= P(A and B), n >= 3
  std::optional<bool> pab_upper; ///< P(A and B) <= 2^{3-2n}(3 + 20.8 (7/8)^{n-3})
  bool a_bound_7_4 = false;      ///< a(n) <= 5.6 (7/4)^n
  bool a_bound_13_8 = false;     ///< a(n) <= 13.6 (13/8)^n
  bool b_bound = false;          ///< b(n) <= 4 (7/4)^n
  bool c_decreasing = false;     ///< c(n+1) < c(n)
  Rational a_value;
  Rational b_value;
  Rational c_value;

  bool all_true() const {
    auto ok = [](const std::optional<bool> &v) { return v.value_or(true); };
    return ok(pa_lower) && ok(pa_upper) && ok(pab_lower) && ok(pab_upper) &&
           a_bound_7_4 && a_bound_13_8 && b_bound && c_decreasing;
  }
};

struct BoundReport {
  std::vector<BoundCheck> rows; ///< n = 0..n_max
  bool c8_below_5 = false;

  bool all_true() const {
    for (const auto &r : rows)
      if (!r.all_true())
        return false;
    return c8_below_5;
  }
};

inline BoundReport bound_report(unsigned n_max) {
  if (n_max < 3)
    throw std::invalid_argument("bound report needs n_max >= 3");
  const auto power = ratio_pow;

  KnRecursion rec;
  BoundReport report;
  for (unsigned n = 0; n <= n_max; ++n) {
    BoundCheck row;
    row.n = n;
    const long sn = n;
    if (n >= 2) {
      const Rational pa = rec.f(n, 1).to_rational();
      const Rational scale = pow2_rational(2 - sn);
      row.pa_lower = scale * (1 - pow2_rational(1 - sn)) <= pa;
      row.pa_upper = pa <= scale * (1 + Rational(16, 5) * power(7, 8, n - 1));
    }
    if (n >= 3) {
      const Rational pab = rec.g(n, 1).to_rational();
      const Rational scale = pow2_rational(3 - 2 * sn);
      row.pab_lower = scale * (3 - 2 * pow2_rational(3 - sn)) <= pab;
      row.pab_upper =
          pab <= scale * (3 + Rational(104, 5) * power(7, 8, n - 3));
    }
    row.a_value = a_sum(n);
    row.b_value = b_sum(n);
    row.c_value = c_sum(n);
    row.a_bound_7_4 = row.a_value <= Rational(28, 5) * power(7, 4, n);
    row.a_bound_13_8 = row.a_value <= Rational(68, 5) * power(13, 8, n);
    row.b_bound = row.b_value <= 4 * power(7, 4, n);
    row.c_decreasing = c_sum(n + 1) < row.c_value;
    report.rows.push_back(std::move(row));
  }
  report.c8_below_5 = c_sum(8) < 5;
  return report;
}

} // namespace orientcorr
