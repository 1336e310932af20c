#include "chromzeta/euler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "chromzeta/errors.hpp"
#include "prime_zeta.hpp"

namespace chromzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kBlockPrimes = 4096;
constexpr int kMaxTailTerms = 60;
constexpr double kTailFloor = 1e-22;
const double kLogTailFloor = std::log(kTailFloor);

bool is_integer_exponent(double s) { return s == std::floor(s) && s <= 1024.0; }

// a / b for b > 0 without overflowing double on huge operands.
double big_ratio(const BigInt& a, const BigInt& b) {
  if (a == 0) return 0.0;
  const bool negative = a < 0;
  const BigInt mag = negative ? BigInt(-a) : a;
  const auto shift_for = [](const BigInt& x) -> long {
    const long bits = static_cast<long>(boost::multiprecision::msb(x));
    return bits > 62 ? bits - 62 : 0;
  };
  const long sa = shift_for(mag);
  const long sb = shift_for(b);
  const double da = static_cast<double>(static_cast<std::uint64_t>(mag >> sa));
  const double db = static_cast<double>(static_cast<std::uint64_t>(b >> sb));
  const double r = std::ldexp(da / db, static_cast<int>(sa - sb));
  return negative ? -r : r;
}

// log of one Euler factor plus its rounding bound.
struct LogTerm {
  double log = 0.0;
  double error = 0.0;
  bool zero = false;
  bool exact_zero = false;
};

struct NeumaierSum {
  double sum = 0.0;
  double compensation = 0.0;
  double magnitude = 0.0;
  std::size_t terms = 0;

  void add(double x) {
    const double t = sum + x;
    compensation += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    magnitude += std::abs(x);
    ++terms;
  }
  double result() const { return sum + compensation; }
  // |computed - exact| <= 2 eps |exact| + n eps^2 sum |x_i|, padded.
  double rounding_bound() const {
    return 2.0 * kEps * std::abs(result()) + (static_cast<double>(terms) + 2.0) * kEps * kEps * magnitude;
  }
};

struct BlockResult {
  NeumaierSum logs;
  double term_errors = 0.0;
  bool zero = false;
  bool exact_zero = false;
  std::uint64_t zero_prime = 0;
};

// Evaluates term(p) over all primes in fixed-size blocks, then reduces the
// blocks in index order. Block boundaries do not depend on the worker count.
template <class TermFn>
BlockResult reduce_over_primes(const std::vector<std::uint64_t>& primes, unsigned workers, TermFn term) {
  const std::size_t blocks = (primes.size() + kBlockPrimes - 1) / kBlockPrimes;
  std::vector<BlockResult> partial(blocks);

  auto run_block = [&](std::size_t b) {
    BlockResult& r = partial[b];
    const std::size_t end = std::min(primes.size(), (b + 1) * kBlockPrimes);
    for (std::size_t i = b * kBlockPrimes; i < end; ++i) {
      const LogTerm t = term(primes[i]);
      if (t.zero) {
        r.zero = true;
        r.exact_zero = t.exact_zero;
        r.zero_prime = primes[i];
        return;
      }
      r.logs.add(t.log);
      r.term_errors += t.error;
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t b = w; b < blocks; b += workers) run_block(b);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  BlockResult total;
  for (const auto& r : partial) {
    if (r.zero) {
      total.zero = true;
      total.exact_zero = r.exact_zero;
      total.zero_prime = r.zero_prime;
      return total;
    }
    total.logs.add(r.logs.result());
    total.term_errors += r.term_errors + r.logs.rounding_bound();
  }
  return total;
}

class FactorEvaluator {
 public:
  FactorEvaluator(const IntPolynomial& poly, double s) : poly_(poly), s_(s), degree_(poly.degree()) {
    integer_s_ = is_integer_exponent(s);
    for (int i = 0; i < degree_; ++i) {
      coeff_.push_back(poly.coefficients()[i].convert_to<double>());
    }
  }

  LogTerm operator()(std::uint64_t p) const {
    return integer_s_ ? exact_term(p) : float_term(p);
  }

  // Factor value in [0, 1].
  double factor(std::uint64_t p) const {
    if (!integer_s_) {
      const auto [u, mag] = float_deficit(p);
      return std::clamp(1.0 + u, 0.0, 1.0);
    }
    const BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s_));
    const BigInt denom = boost::multiprecision::pow(q, static_cast<unsigned>(degree_));
    const BigInt num = poly_(q);
    if (num <= 0) return 0.0;
    const BigInt deficit = denom - num;
    if (deficit <= 0) return 1.0;
    const double r = big_ratio(deficit, denom);
    return r <= 0.5 ? 1.0 - r : big_ratio(num, denom);
  }

  bool integer_exponent() const { return integer_s_; }

 private:
  LogTerm exact_term(std::uint64_t p) const {
    LogTerm t;
    const BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s_));
    const BigInt denom = boost::multiprecision::pow(q, static_cast<unsigned>(degree_));
    const BigInt num = poly_(q);
    if (num <= 0) {
      t.zero = true;
      t.exact_zero = true;
      return t;
    }
    const BigInt deficit = denom - num;
    if (deficit <= 0) return t;
    const double r = big_ratio(deficit, denom);
    if (r <= 0.5) {
      t.log = std::log1p(-r);
      t.error = 4.0 * kEps * std::max(std::abs(t.log), r);
    } else {
      t.log = std::log(big_ratio(num, denom));
      t.error = 4.0 * kEps * std::max(std::abs(t.log), 1.0);
    }
    return t;
  }

  // 1 - P(q)/q^k = -u with u = sum_j a_{k-j} q^-j, by Horner in 1/q.
  std::pair<double, double> float_deficit(std::uint64_t p) const {
    const double w = std::pow(static_cast<double>(p), -s_);
    double u = 0.0;
    double mag = 0.0;
    for (int i = 0; i < degree_; ++i) {
      u = w * (coeff_[i] + u);
      mag = w * (std::abs(coeff_[i]) + mag);
    }
    return {u, mag};
  }

  LogTerm float_term(std::uint64_t p) const {
    LogTerm t;
    const auto [u, mag] = float_deficit(p);
    if (1.0 + u <= 0.0) {
      t.zero = true;
      return t;
    }
    if (u >= 0.0) return t;
    t.log = std::log1p(u);
    t.error = (2.0 * degree_ + 4.0) * kEps * mag / (1.0 + u) + 2.0 * kEps * std::abs(t.log);
    return t;
  }

  const IntPolynomial& poly_;
  double s_;
  int degree_;
  bool integer_s_ = false;
  std::vector<double> coeff_;
};

void validate_common(double s, const EulerOptions& options, const char* who) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw UsageError(std::string(who) + ": s must be a finite real > 1, got " + std::to_string(s));
  }
  if (!(options.target_tail > 0.0)) {
    throw UsageError(std::string(who) + ": target_tail must be positive");
  }
}

std::uint64_t ceil_to_u64(double x, const char* who, std::uint64_t cap) {
  if (!(x < static_cast<double>(cap) + 1.0)) {
    throw BudgetError(std::string(who) + ": tail target unreachable under the prime cap " +
                      std::to_string(cap));
  }
  return static_cast<std::uint64_t>(std::max(2.0, std::ceil(x)));
}

// ceiling: a priori upper limit on the product (1 for products of factors in [0, 1]).
CertifiedProduct assemble(double log_value, double log_rounding, double tail, std::uint64_t truncation_prime,
                          double ceiling = 1.0) {
  CertifiedProduct out;
  out.truncation_prime = truncation_prime;
  out.tail_epsilon = tail;
  out.value = std::exp(log_value);
  out.rounding = log_rounding + 4.0 * kEps;
  if (!std::isfinite(tail)) {
    out.lower = 0.0;
    out.upper = ceiling;
    return out;
  }
  out.lower = std::max(0.0, out.value * std::exp(-tail) * (1.0 - out.rounding));
  out.upper = std::min(ceiling, out.value * std::exp(tail) * (1.0 + out.rounding));
  out.lower = std::min(out.lower, out.value);
  out.upper = std::max(out.upper, out.value);
  return out;
}

}  // namespace

CertifiedProduct CertifiedProduct::zero(std::uint64_t truncation_prime) {
  CertifiedProduct z;
  z.value = z.lower = z.upper = 0.0;
  z.truncation_prime = truncation_prime;
  z.exact_zero = true;
  return z;
}

double euler_factor(const IntPolynomial& poly, std::uint64_t p, double s) {
  if (!is_prime(p)) throw UsageError("euler_factor: " + std::to_string(p) + " is not prime");
  if (!(s > 1.0)) throw UsageError("euler_factor: s must be > 1");
  if (poly.degree() < 0 || poly.leading() != 1) throw UsageError("euler_factor: polynomial must be monic");
  return FactorEvaluator(poly, s).factor(p);
}

CertifiedProduct monic_euler_product(const IntPolynomial& poly, double s, const EulerOptions& options) {
  validate_common(s, options, "euler product");
  if (poly.degree() < 0 || poly.leading() != 1) {
    throw UsageError("euler product: polynomial must be monic");
  }
  const int degree = poly.degree();
  const FactorEvaluator evaluator(poly, s);

  double coeff_sum = 0.0;  // A = sum_{i<k} |a_i|
  double coeff_max = 0.0;
  for (int i = 0; i < degree; ++i) {
    const double a = std::abs(poly.coefficients()[i].convert_to<double>());
    coeff_sum += a;
    coeff_max = std::max(coeff_max, a);
  }
  const double root_bound = 1.0 + coeff_max;  // Cauchy bound on |roots|

  // Symbolic zero check: P(p^s) <= 0 needs p^s to be at most the root bound.
  if (evaluator.integer_exponent() && coeff_sum > 0.0) {
    const double pmax = std::pow(root_bound, 1.0 / s);
    if (pmax >= 2.0) {
      for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(pmax), options.prime_cap)) {
        const LogTerm t = evaluator(p);
        if (t.exact_zero) return CertifiedProduct::zero(p);
      }
    }
  }

  if (coeff_sum == 0.0) {
    // poly = x^k: every factor is exactly 1.
    CertifiedProduct one;
    one.truncation_prime = 2;
    return one;
  }

  std::uint64_t sieve_bound = 0;
  double tail = 0.0;
  int tail_terms = 0;

  if (options.tail_mode == TailMode::truncated) {
    if (options.truncation_override) {
      sieve_bound = options.truncation_override;
    } else {
      const double m_pre = std::pow(2.0 * coeff_sum, 1.0 / s);
      const double m_tail = std::pow(2.0 * coeff_sum / ((s - 1.0) * options.target_tail), 1.0 / (s - 1.0));
      sieve_bound = ceil_to_u64(std::max(m_pre, m_tail), "euler product", options.prime_cap);
    }
    const double m = static_cast<double>(sieve_bound);
    // |1 - f_p| <= A p^-s <= 1/2 gives |log f_p| <= 2 A p^-s; integral comparison for the sum.
    tail = (std::pow(m, s) >= 2.0 * coeff_sum)
               ? 2.0 * coeff_sum * std::pow(m, 1.0 - s) / (s - 1.0)
               : std::numeric_limits<double>::infinity();
  } else {
    // Remainder after J series terms, summed over p > M:
    //   2 k R^{J+1} / (J+1) * M^{1 - s(J+1)} / (s(J+1) - 1), valid when M^s >= 2R.
    const auto log_remainder = [&](int terms, double m) {
      const double e = s * (terms + 1);
      return std::log(2.0 * degree) + (terms + 1) * std::log(root_bound) - std::log(terms + 1.0) +
             (1.0 - e) * std::log(m) - std::log(e - 1.0);
    };
    const double log_goal = std::log(0.5 * options.target_tail);
    const double m_pre = std::pow(2.0 * root_bound, 1.0 / s);

    auto pick_terms = [&](double m) {
      for (int j = 0; j <= kMaxTailTerms; ++j)
        if (log_remainder(j, m) <= log_goal) return j;
      return -1;
    };

    if (options.truncation_override) {
      sieve_bound = options.truncation_override;
      const double m = static_cast<double>(sieve_bound);
      if (std::pow(m, s) < 2.0 * root_bound) {
        tail = std::numeric_limits<double>::infinity();
      } else {
        tail_terms = std::max(pick_terms(m), 0);
      }
    } else {
      double m = std::max(static_cast<double>(options.min_truncation), std::ceil(m_pre));
      m = std::max(m, 2.0);
      if (m > static_cast<double>(options.prime_cap)) {
        m = std::max(std::ceil(m_pre), 2.0);
      }
      for (;;) {
        sieve_bound = ceil_to_u64(m, "euler product", options.prime_cap);
        tail_terms = pick_terms(static_cast<double>(sieve_bound));
        if (tail_terms >= 0) break;
        m *= 10.0;
      }
    }
    // Past the target, keep adding series terms until the remainder is below
    // double resolution, so a deeper truncation never reports a looser value.
    if (std::isfinite(tail)) {
      const double m = static_cast<double>(sieve_bound);
      while (tail_terms < kMaxTailTerms && log_remainder(tail_terms, m) > kLogTailFloor) ++tail_terms;
      tail = std::exp(log_remainder(tail_terms, m));
    }
  }

  const auto primes = primes_up_to(std::max<std::uint64_t>(sieve_bound, 2), options.prime_cap);
  const BlockResult partial = reduce_over_primes(primes, options.workers, evaluator);
  if (partial.zero) {
    if (partial.exact_zero) return CertifiedProduct::zero(partial.zero_prime);
    CertifiedProduct z = CertifiedProduct::zero(partial.zero_prime);
    z.exact_zero = false;  // clamped negative factor at non-integer s
    return z;
  }

  NeumaierSum log_total;
  log_total.add(partial.logs.result());
  double log_rounding = partial.term_errors + partial.logs.rounding_bound();

  if (options.tail_mode == TailMode::corrected && tail_terms > 0 && std::isfinite(tail)) {
    const double m = static_cast<double>(sieve_bound);
    const auto power_sums = poly.root_power_sums(tail_terms);
    const double negligible = kTailFloor / tail_terms;
    for (int j = 1; j <= tail_terms; ++j) {
      const double weight = std::abs(power_sums[j - 1].convert_to<double>()) / j;
      if (weight == 0.0) continue;
      const double t = s * j;
      const double bound = weight * std::pow(m, 1.0 - t) / (t - 1.0);
      if (bound <= negligible) {
        tail += bound;
        continue;
      }
      const detail::BoundedValue pz = detail::prime_zeta(t);
      NeumaierSum explicit_part;
      for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
        explicit_part.add(std::pow(static_cast<double>(*it), -t));
      }
      const double beyond = pz.value - explicit_part.result();
      const double signed_weight = power_sums[j - 1].convert_to<double>() / j;
      log_total.add(-signed_weight * beyond);
      tail += weight * pz.truncation_error;
      log_rounding += weight * (8.0 * kEps * (pz.magnitude + explicit_part.magnitude) +
                                explicit_part.rounding_bound()) +
                      2.0 * kEps * std::abs(signed_weight * beyond);
    }
  }
  log_rounding += log_total.rounding_bound();

  return assemble(log_total.result(), log_rounding, tail, primes.back());
}

CertifiedProduct zeta_H_inverse(const Graph& g, double s, const EulerOptions& options) {
  validate_common(s, options, "zeta_H_inverse");
  return monic_euler_product(chromatic_polynomial(g, options.chromatic), s, options);
}

CertifiedProduct riemann_zeta_inverse(double s, const EulerOptions& options) {
  validate_common(s, options, "riemann_zeta_inverse");
  return zeta_H_inverse(family("path:2"), s, options);
}

CertifiedProduct cycle_limit_closed_form(int k, double s, const EulerOptions& options) {
  validate_common(s, options, "cycle_limit_closed_form");
  if (k < 3) throw UsageError("cycle_limit_closed_form: k must be >= 3");

  EulerOptions zeta_options = options;
  zeta_options.target_tail = options.target_tail / (2.0 * k);
  const CertifiedProduct zeta_part = pow(riemann_zeta_inverse(s, zeta_options), k);

  // prod_p (1 + sign / (p^s - 1)^{k-1}). For p^s >= 3: |log| <= 2 (q-1)^{1-k} <= 2^k p^{-s(k-1)}.
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double e = s * (k - 1);
  std::uint64_t sieve_bound = options.truncation_override;
  if (!sieve_bound) {
    const double m = std::pow(std::ldexp(1.0, k) / ((e - 1.0) * 0.5 * options.target_tail), 1.0 / (e - 1.0));
    sieve_bound = ceil_to_u64(std::max(m, 3.0), "cycle_limit_closed_form", options.prime_cap);
  }
  const double tail = std::ldexp(1.0, k) * std::pow(static_cast<double>(sieve_bound), 1.0 - e) / (e - 1.0);

  const auto primes = primes_up_to(sieve_bound, options.prime_cap);
  const BlockResult partial = reduce_over_primes(primes, options.workers, [&](std::uint64_t p) {
    LogTerm t;
    const double q = std::pow(static_cast<double>(p), s);
    const double v = std::pow(q - 1.0, 1.0 - k);
    t.log = std::log1p(sign * v);
    t.error = (k + 4.0) * kEps * std::abs(t.log);
    return t;
  });
  const double log_rounding = partial.term_errors + partial.logs.rounding_bound();
  const CertifiedProduct correction =
      assemble(partial.logs.result(), log_rounding, tail, primes.back(),
               std::numeric_limits<double>::infinity());
  return zeta_part * correction;
}

CertifiedProduct rearick_ratio(std::uint64_t m, int s, const EulerOptions& options) {
  if (m < 1) throw UsageError("rearick_ratio: m must be >= 1");
  if (s < 2) throw UsageError("rearick_ratio: s must be an integer >= 2");
  // p = 2 gives 1 - m / 2^s <= 0.
  if (s < 64 && m >= (std::uint64_t{1} << s)) return CertifiedProduct::zero(2);
  return monic_euler_product(IntPolynomial::linear(BigInt(m)), static_cast<double>(s), options);
}

CertifiedProduct conditional_limit(const Graph& g, const Graph& sub, double s, const EulerOptions& options) {
  validate_common(s, options, "conditional_limit");
  if (!is_subgraph(sub, g)) throw UsageError("conditional_limit: conditioning graph is not a subgraph");
  const CertifiedProduct denominator = zeta_H_inverse(sub, s, options);
  if (denominator.exact_zero) {
    throw UsageError("conditional_limit: conditioning probability is exactly zero");
  }
  return quotient(zeta_H_inverse(g, s, options), denominator);
}

CertifiedProduct operator*(const CertifiedProduct& a, const CertifiedProduct& b) {
  if (a.exact_zero || b.exact_zero) {
    return CertifiedProduct::zero(a.exact_zero ? a.truncation_prime : b.truncation_prime);
  }
  CertifiedProduct out;
  out.value = a.value * b.value;
  out.lower = a.lower * b.lower;
  out.upper = a.upper * b.upper;
  out.truncation_prime = std::min(a.truncation_prime, b.truncation_prime);
  out.tail_epsilon = a.tail_epsilon + b.tail_epsilon;
  out.rounding = a.rounding + b.rounding + kEps;
  out.lower = std::min(out.lower * (1.0 - kEps), out.value);
  out.upper = std::max(out.upper * (1.0 + kEps), out.value);
  return out;
}

CertifiedProduct quotient(const CertifiedProduct& numerator, const CertifiedProduct& denominator) {
  if (denominator.exact_zero) throw UsageError("quotient: denominator is exactly zero");
  if (numerator.exact_zero) return CertifiedProduct::zero(numerator.truncation_prime);
  CertifiedProduct out;
  out.value = numerator.value / denominator.value;
  out.lower = numerator.lower / denominator.upper;
  out.upper = denominator.lower > 0.0 ? numerator.upper / denominator.lower
                                      : std::numeric_limits<double>::infinity();
  out.truncation_prime = std::min(numerator.truncation_prime, denominator.truncation_prime);
  out.tail_epsilon = numerator.tail_epsilon + denominator.tail_epsilon;
  out.rounding = numerator.rounding + denominator.rounding + kEps;
  out.lower = std::min(out.lower * (1.0 - kEps), out.value);
  out.upper = std::max(out.upper * (1.0 + kEps), out.value);
  return out;
}

CertifiedProduct pow(const CertifiedProduct& base, int exponent) {
  if (exponent < 0) throw UsageError("pow: negative exponent");
  CertifiedProduct out;  // exponent 0 -> exactly 1
  out.truncation_prime = base.truncation_prime;
  for (int i = 0; i < exponent; ++i) out = (i == 0) ? base : out * base;
  return out;
}

}  // namespace chromzeta
