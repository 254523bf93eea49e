#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "levyou/rng.hpp"
#include "levyou/stable.hpp"

namespace levyou {

// Jump measure descriptors supported by the decomposition: stable power-law
// tails, or a finite list of (size, rate) atoms.
struct StableTailSpec {
    double cminus;
    double cplus;
    double alpha;
};

struct JumpAtom {
    double size;  // != 0
    double rate;  // > 0, jumps per unit time
};

using JumpSpec = std::variant<StableTailSpec, std::vector<JumpAtom>>;

// Threshold split of a Levy process at |y| = a: a small-jump zero-mean
// martingale xi (kept only through its variance rate, and simulated as a
// Gaussian surrogate of matched variance) plus a compound Poisson process
// with drift mu_a and intensity beta_a.
struct LevyDecomposition {
    double sigma = 0.0;        // Gaussian part of the original process
    double mu = 0.0;           // Levy-Khinchine drift (truncation 1_{|y|<=1})
    JumpSpec jump_spec;        // jump measure of the original process
    double threshold_a = 1.0;  // split level, in (0,1]
    double mu_a = 0.0;         // mu - \int_{a<=|y|<=1} y nu(dy)
    double beta_a = 0.0;       // \int_{|y|>=a} nu(dy)
    double xi_variance_rate = 0.0;  // \int_{|y|<a} y^2 nu(dy)
};

// Finite-activity path data: jumps at strictly increasing arrival times plus
// linear drift, eta_t = sum_{tau_k <= t} J_k + mu_a t.
struct CompoundPoissonPath {
    std::vector<double> arrival_times;  // strictly increasing, in [0,T]
    std::vector<double> jump_sizes;     // same length as arrival_times
    double mu_a = 0.0;
    double horizon = 0.0;

    void validate() const;
    // eta_t, evaluated cadlag.
    double value(double t) const;
};

LevyDecomposition decompose(const StableParams& p, double a);
LevyDecomposition decompose(double sigma, double mu, const JumpSpec& jumps, double a);

// One jump size from nu restricted to {|y| >= a}, normalized.
double sample_tail_jump(const LevyDecomposition& d, SplitRng& rng);

// Poisson arrivals of intensity beta_a on (0,T], i.i.d. tail jump sizes,
// drift mu_a.
CompoundPoissonPath sample_compound_poisson_path(const LevyDecomposition& d, double horizon,
                                                 SplitRng& rng);

// Characteristic exponents of the pieces; xi is represented by its Gaussian
// surrogate (matched variance), the convention used for simulation as well.
std::complex<double> decomposition_char_exponent_eta(const LevyDecomposition& d, double u);
std::complex<double> decomposition_char_exponent_surrogate(const LevyDecomposition& d, double u);

}  // namespace levyou
