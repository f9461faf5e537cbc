#ifndef FRAGASYM_ASYMPTOTICS_HPP
#define FRAGASYM_ASYMPTOTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fragasym/datum.hpp"
#include "fragasym/kernel.hpp"

namespace fragasym {

// Saddle of phi(s, t, x) = -s log x + t K(s): the unique real solution of
// K'(s) = log(x) / t on (p1, infinity).
struct SaddleData {
    double s_plus = 0.0;
    double phi_at_saddle = 0.0;
    double K2_at_saddle = 0.0;
    double t = 0.0;
    double x = 0.0;
};

enum class Regime { T1_large_x, T2_lower, T2_upper, T3a_bulk, T3b_oscillatory };

std::string to_string(Regime r);

struct AsymptoticValue {
    double value = 0.0;
    Regime regime = Regime::T3a_bulk;
    std::optional<SaddleData> saddle;
    // Oscillatory-series bookkeeping (T3b only).
    int k_used = 0;
    double tail_bound = 0.0;
    std::vector<std::string> warnings;
};

SaddleData saddle_point(const FragmentationKernel& kernel, double t, double x);

Complex phi_eval(const FragmentationKernel& kernel, Complex s, double t, double x);

// Long-time leading term dispatched on (x, s_plus) against the datum strip:
// x >= 1 -> upper-tail power law; x < 1 with s_plus beyond the strip -> the
// corresponding tail power law; otherwise the bulk saddle-point formula.
AsymptoticValue leading_term(const InitialDatum& datum,
                             const FragmentationKernel& kernel, double t, double x);

// Oscillatory bulk series for kernels whose atoms satisfy Condition H:
// x^{-s_plus} e^{(K(s_plus)-1)t} / sqrt(2 pi t K''(s_plus)) times the sum of
// U0(s_plus + i k v*) e^{-i k v* log x} over |k| <= k_max. Real by conjugate
// pairing; the truncation tail bound follows the 1/k^2 decay of U0.
AsymptoticValue theorem3b_series(const InitialDatum& datum,
                                 const FragmentationKernel& kernel, double t,
                                 double x, int k_max);

// As above with k_max grown (doubling from k_start) until the tail bound is
// below 1e-10 of the running value.
AsymptoticValue theorem3b_auto(const InitialDatum& datum,
                               const FragmentationKernel& kernel, double t,
                               double x, int k_start = 50);

// Poisson-summation dual of the oscillatory series:
// |log theta| e^{(K(s_plus)-1)t} / sqrt(2 pi t K''(s_plus)) *
// sum_n u0(theta^n x) theta^{n s_plus}.
double poisson_approx(const InitialDatum& datum, double theta,
                      const FragmentationKernel& kernel, double t, double x);

}  // namespace fragasym

#endif
