#pragma once

#include <complex>

#include "levyou/rng.hpp"

namespace levyou {

// Strictly alpha-stable law in the characteristic-exponent parametrization
//   Psi(u) = -c|u|^alpha (1 - i beta sgn(u) tan(pi alpha/2)),  alpha != 1,
//   Psi(u) = -c|u| (1 + i beta (2/pi) sgn(u) ln|u|),           alpha == 1,
// with E exp(i u l_t) = exp(t Psi(u)). The alpha == 1 branch uses ln|u| so
// that Psi(-u) = conj(Psi(u)) holds on the whole line; Psi(0) = 0.
struct StableParams {
    double alpha;  // stability index, in (0,2)
    double beta;   // skewness, in [-1,1]
    double c;      // scale, > 0

    StableParams(double alpha, double beta, double c);
};

// Levy-measure-side parametrization: nu(dy) = c_-|y|^{-1-alpha} dy on y<0
// plus c_+ y^{-1-alpha} dy on y>0, with the drift mu that makes the process
// strictly stable (truncation 1_{|y|<=1} in the Levy-Khinchine integral).
struct StableMeasure {
    double cminus;  // >= 0
    double cplus;   // >= 0
    double mu;      // Levy-Khinchine drift
};

std::complex<double> char_exponent(const StableParams& p, double u);

// (c_-, c_+, alpha) -> (beta, c, mu). Throws if cminus + cplus == 0 or alpha
// outside (0,2).
struct ConvertedParams {
    double beta;
    double c;
    double mu;
};
ConvertedParams params_from_levy_measure(double cminus, double cplus, double alpha);

// Inverse conversion: (alpha, beta, c) -> (c_-, c_+, mu).
StableMeasure levy_measure_from_params(const StableParams& p);

// One draw of S_alpha(1, beta, 0) via the Chambers-Mallows-Stuck transform.
double sample_standard_stable(const StableParams& p, SplitRng& rng);

// One increment l_dt of the process with exponent char_exponent(p, .):
// law(sample(dt)) = law(dt^{1/alpha} sample(1)) for alpha != 1; the alpha == 1
// branch carries the usual logarithmic scaling correction.
double sample_stable_increment(const StableParams& p, double dt, SplitRng& rng);

}  // namespace levyou
