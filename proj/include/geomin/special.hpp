#pragma once

#include <span>
#include <vector>

#include "geomin/real.hpp"

namespace geomin {

/// Gamma function for s > 0, computed by an argument-shift recurrence into
/// the region where the Stirling asymptotic series reaches the working
/// precision. Relative error at most 2^-(prec(s)-8).
Real gamma(const Real& s);

/// Rising factorial (s)_n = s(s+1)...(s+n-1); (s)_0 = 1.
Real rising_factorial(const Real& s, long n);

/// Falling factorial s(s-1)...(s-n+1); exact zero when the chain crosses 0.
Real falling_factorial(const Real& s, long n);

/// Pochhammer k-symbol (x)_{n,k} = k^n (x/k)_n
/// = x (x+k) (x+2k) ... (x+(n-1)k).
Real k_pochhammer(const Real& x, long n, long k);

/// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
/// Requires 1 <= k <= n and at least n-k+1 inputs.
Real bell_partial(long n, long k, std::span<const Real> x);

/// Generalized hypergeometric series pFq(top; bottom; z).
///
/// For |z| < 1 (and whenever the series terminates) the terms are summed
/// directly with ratio-form updates, stopping after two consecutive terms
/// fall below ctx.term_epsilon relative to the partial sum; exceeding
/// ctx.max_series_terms raises ConvergenceError. For z = 1 with one more
/// top than bottom parameter the series converges only algebraically, so
/// the tail beyond the summed terms is evaluated with an Euler-Maclaurin
/// expansion in Hurwitz zeta values; the parameter excess
/// sum(bottom) - sum(top) must be positive.
Real pfq(std::span<const Real> top, std::span<const Real> bottom, const Real& z,
         const PrecisionContext& ctx);

/// pfq plus an a-posteriori bound on the neglected tail and the number of
/// directly summed terms.
struct PfqResult {
  Real value;
  Real tail_bound;
  long terms_used = 0;
};

PfqResult pfq_detail(std::span<const Real> top, std::span<const Real> bottom, const Real& z,
                     const PrecisionContext& ctx);

namespace detail {

/// Bernoulli number B_{2k} as an exact rational, rendered at `prec` bits.
/// Thread-safe; values are cached process-wide.
Real bernoulli_2k(long k, mpfr_prec_t prec);

/// B_{2k} / (2k)! at `prec` bits (Euler-Maclaurin weight).
Real bernoulli_2k_over_fact(long k, mpfr_prec_t prec);

/// n! as an exact integer rendered at `prec` bits.
Real factorial(unsigned long n, mpfr_prec_t prec);

/// Binomial coefficient C(n, k) as an exact integer at `prec` bits.
Real binomial(unsigned long n, unsigned long k, mpfr_prec_t prec);

}  // namespace detail

}  // namespace geomin
