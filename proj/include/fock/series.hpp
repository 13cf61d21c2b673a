#pragma once

/// Convergent series over Gamma built from the weight function: truncated sums
/// with rigorous tail intervals, and the zeta-based growth bound.

#include "fock/index_set.hpp"

namespace fock {

/// A truncated positive-term series with a rigorous upper bound on the omitted tail.
/// The infinite sum lies in [partial, partial + tail_bound].
struct SeriesSum {
    double partial = 0.0;
    double tail_bound = 0.0;
    int truncation_level = 0;
    double exponent = 0.0;  // the p in sum lambda^{-p}

    double lower() const { return partial; }
    double upper() const { return partial + tail_bound; }
    bool contains(double x) const { return lower() <= x && x <= upper(); }
};

/// S_n(p) = sum over sigma subset {0..n-1} of lambda_sigma^{-p}.
/// Multiplicativity of lambda over disjoint elements factorizes the sum into
/// prod_{m=1}^{n} (1 + m^{-p}); the tail uses the midpoint integral bound
/// sum_{m>n} m^{-p} <= (n+1/2)^{1-p}/(p-1) on the log of the remaining product.
/// Requires p > 1 (Lemma-level convergence condition) and 0 <= n <= 63.
SeriesSum weight_series_sum(double p, int n);

/// Squared truncated Hilbert-Schmidt norm of the scale inclusion:
/// sum over sigma subset {0..n-1} of lambda_sigma^{-2(q-p)}.
/// Requires q > p >= 0 and 2(q-p) > 1.
SeriesSum hs_sum(double p, double q, int n);

/// Riemann zeta for real p > 1, Euler-Maclaurin with K=64 pivot; absolute
/// error well below 1e-13 for p in (1, 64].
double riemann_zeta(double p);

/// exp(sum_{k>=1} k^{-p}) = exp(zeta(p)), the a-priori bound dominating every
/// truncated weight series with exponent p > 1.
double weight_series_bound(double p);

}  // namespace fock
