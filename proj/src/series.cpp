#include "fock/series.hpp"

#include <cmath>
#include <stdexcept>

namespace fock {

namespace {

SeriesSum truncated_weight_series(double p, int n) {
    if (n < 0 || n > 63) throw std::invalid_argument("weight series: truncation level must be in [0,63]");
    double acc = 1.0;
    for (int m = 1; m <= n; ++m)
        acc *= 1.0 + std::pow(static_cast<double>(m), -p);
    // Remaining product over m > n: log <= sum m^{-p} <= (n+1/2)^{1-p}/(p-1)
    // (midpoint bound; x^{-p} is convex, so f(m) <= integral over [m-1/2, m+1/2]).
    const double log_tail = std::pow(n + 0.5, 1.0 - p) / (p - 1.0);
    SeriesSum s;
    s.partial = acc;
    s.tail_bound = acc * std::expm1(log_tail);
    s.truncation_level = n;
    s.exponent = p;
    return s;
}

}  // namespace

SeriesSum weight_series_sum(double p, int n) {
    if (!(p > 1.0)) throw std::invalid_argument("weight_series_sum: requires p > 1");
    return truncated_weight_series(p, n);
}

SeriesSum hs_sum(double p, double q, int n) {
    if (!(p >= 0.0) || !(q > p)) throw std::invalid_argument("hs_sum: requires q > p >= 0");
    const double r = 2.0 * (q - p);
    if (!(r > 1.0)) throw std::invalid_argument("hs_sum: requires 2(q-p) > 1");
    return truncated_weight_series(r, n);
}

double riemann_zeta(double p) {
    if (!(p > 1.0)) throw std::invalid_argument("riemann_zeta: requires p > 1");
    // Euler-Maclaurin about K: zeta(p) = sum_{k<K} k^{-p} + K^{1-p}/(p-1)
    //   + K^{-p}/2 + p K^{-p-1}/12 - p(p+1)(p+2) K^{-p-3}/720 + O(K^{-p-5}).
    constexpr double K = 64.0;
    double head = 0.0;
    for (int k = static_cast<int>(K) - 1; k >= 1; --k)  // small terms first
        head += std::pow(static_cast<double>(k), -p);
    const double kp = std::pow(K, -p);
    double tail = std::pow(K, 1.0 - p) / (p - 1.0);
    tail += 0.5 * kp;
    tail += p * kp / K / 12.0;
    tail -= p * (p + 1.0) * (p + 2.0) * kp / (K * K * K) / 720.0;
    return head + tail;
}

double weight_series_bound(double p) { return std::exp(riemann_zeta(p)); }

}  // namespace fock
