#include "levyou/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyou {

namespace {

// \int_a^1 y^{-alpha} dy
double truncation_integral(double a, double alpha) {
    if (a >= 1.0) return 0.0;
    if (alpha == 1.0) return -std::log(a);
    return (1.0 - std::pow(a, 1.0 - alpha)) / (1.0 - alpha);
}

// \int_0^a (e^{iuy} - 1 - iuy) y^{-1-alpha} dy by termwise integration of the
// exponential series; converges fast for |u| a up to a few tens.
std::complex<double> small_jump_integral(double u, double a, double alpha) {
    double re = 0.0, im = 0.0;
    double num = 1.0;  // u^m a^m / m!
    const double ua = u * a;
    for (int m = 1; m <= 160; ++m) {
        num *= ua / m;
        if (m == 1) continue;  // the iuy term is subtracted
        const double term = num * std::pow(a, -alpha) / (m - alpha);
        switch (m % 4) {
            case 0: re += term; break;
            case 1: im += term; break;
            case 2: re -= term; break;
            default: im -= term; break;
        }
        if (m > std::abs(ua) && std::abs(term) < 1e-16 * (1.0 + std::abs(re) + std::abs(im))) {
            break;
        }
    }
    return {re, im};
}

}  // namespace

void CompoundPoissonPath::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("compound poisson: horizon must be > 0");
    if (arrival_times.size() != jump_sizes.size()) {
        throw std::invalid_argument("compound poisson: times/sizes length mismatch");
    }
    double prev = -1.0;
    for (double t : arrival_times) {
        if (!(t >= 0.0 && t <= horizon)) {
            throw std::invalid_argument("compound poisson: arrival outside [0,T]");
        }
        if (!(t > prev)) {
            throw std::invalid_argument("compound poisson: arrivals must be strictly increasing");
        }
        prev = t;
    }
}

double CompoundPoissonPath::value(double t) const {
    double acc = mu_a * t;
    for (std::size_t k = 0; k < arrival_times.size() && arrival_times[k] <= t; ++k) {
        acc += jump_sizes[k];
    }
    return acc;
}

LevyDecomposition decompose(const StableParams& p, double a) {
    const StableMeasure m = levy_measure_from_params(p);
    return decompose(0.0, m.mu, StableTailSpec{m.cminus, m.cplus, p.alpha}, a);
}

LevyDecomposition decompose(double sigma, double mu, const JumpSpec& jumps, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("decompose: a must lie in (0,1]");
    if (sigma < 0.0) throw std::invalid_argument("decompose: sigma must be >= 0");
    LevyDecomposition d;
    d.sigma = sigma;
    d.mu = mu;
    d.jump_spec = jumps;
    d.threshold_a = a;
    if (const auto* tail = std::get_if<StableTailSpec>(&jumps)) {
        const double csum = tail->cminus + tail->cplus;
        const double cdiff = tail->cplus - tail->cminus;
        const double alpha = tail->alpha;
        if (!(alpha > 0.0 && alpha < 2.0)) {
            throw std::invalid_argument("decompose: alpha must lie in (0,2)");
        }
        if (!(csum > 0.0)) throw std::invalid_argument("decompose: cminus + cplus must be > 0");
        d.beta_a = csum * std::pow(a, -alpha) / alpha;
        d.xi_variance_rate = csum * std::pow(a, 2.0 - alpha) / (2.0 - alpha);
        d.mu_a = mu - cdiff * truncation_integral(a, alpha);
    } else {
        const auto& atoms = std::get<std::vector<JumpAtom>>(jumps);
        double beta_a = 0.0, var = 0.0, trunc = 0.0;
        for (const auto& atom : atoms) {
            if (atom.size == 0.0 || !(atom.rate > 0.0)) {
                throw std::invalid_argument("decompose: jump atoms need size != 0, rate > 0");
            }
            const double ay = std::abs(atom.size);
            if (ay == a) {
                throw std::invalid_argument("decompose: atom exactly at the threshold");
            }
            if (ay < a) {
                var += atom.rate * atom.size * atom.size;
            } else {
                beta_a += atom.rate;
                if (ay <= 1.0) trunc += atom.rate * atom.size;
            }
        }
        d.beta_a = beta_a;
        d.xi_variance_rate = var;
        d.mu_a = mu - trunc;
    }
    return d;
}

double sample_tail_jump(const LevyDecomposition& d, SplitRng& rng) {
    if (!(d.beta_a > 0.0)) throw std::logic_error("sample_tail_jump: beta_a == 0");
    if (const auto* tail = std::get_if<StableTailSpec>(&d.jump_spec)) {
        const double p_plus = tail->cplus / (tail->cplus + tail->cminus);
        const double sign = rng.uniform() < p_plus ? 1.0 : -1.0;
        // |J| is Pareto(alpha) above the threshold.
        const double mag = d.threshold_a * std::pow(rng.uniform(), -1.0 / tail->alpha);
        return sign * mag;
    }
    const auto& atoms = std::get<std::vector<JumpAtom>>(d.jump_spec);
    double pick = rng.uniform() * d.beta_a;
    const JumpAtom* last = nullptr;
    for (const auto& atom : atoms) {
        if (std::abs(atom.size) < d.threshold_a) continue;
        last = &atom;
        pick -= atom.rate;
        if (pick <= 0.0) return atom.size;
    }
    if (last != nullptr) return last->size;  // round-off fallthrough
    throw std::logic_error("sample_tail_jump: no tail atoms");
}

CompoundPoissonPath sample_compound_poisson_path(const LevyDecomposition& d, double horizon,
                                                 SplitRng& rng) {
    if (!(horizon > 0.0)) throw std::invalid_argument("sample path: horizon must be > 0");
    CompoundPoissonPath path;
    path.mu_a = d.mu_a;
    path.horizon = horizon;
    if (d.beta_a > 0.0) {
        double t = rng.exponential() / d.beta_a;
        while (t <= horizon) {
            path.arrival_times.push_back(t);
            path.jump_sizes.push_back(sample_tail_jump(d, rng));
            t += rng.exponential() / d.beta_a;
        }
    }
    return path;
}

std::complex<double> decomposition_char_exponent_eta(const LevyDecomposition& d, double u) {
    if (u == 0.0) return {0.0, 0.0};
    std::complex<double> acc(0.0, d.mu_a * u);
    if (const auto* tail = std::get_if<StableTailSpec>(&d.jump_spec)) {
        // Psi_eta = Psi_stable - Psi_xi; the mu_a drift is already inside
        // that difference, so it replaces the i mu_a u start value.
        const auto conv = params_from_levy_measure(tail->cminus, tail->cplus, tail->alpha);
        const StableParams p(tail->alpha, conv.beta, conv.c);
        std::complex<double> small = tail->cplus * small_jump_integral(u, d.threshold_a, tail->alpha);
        small += tail->cminus * small_jump_integral(-u, d.threshold_a, tail->alpha);
        acc = char_exponent(p, u) - small;
    } else {
        const auto& atoms = std::get<std::vector<JumpAtom>>(d.jump_spec);
        for (const auto& atom : atoms) {
            if (std::abs(atom.size) < d.threshold_a) continue;
            acc += atom.rate * (std::exp(std::complex<double>(0.0, u * atom.size)) - 1.0);
        }
    }
    return acc;
}

std::complex<double> decomposition_char_exponent_surrogate(const LevyDecomposition& d, double u) {
    const double var = d.xi_variance_rate + d.sigma * d.sigma;
    return decomposition_char_exponent_eta(d, u) - std::complex<double>(0.5 * var * u * u, 0.0);
}

}  // namespace levyou
