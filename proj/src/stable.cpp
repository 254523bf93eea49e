#include "levyou/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace levyou {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = 0.57721566490153286060651209008240;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw std::invalid_argument("stable: alpha must lie in (0,2)");
    }
}

// (c_- + c_+) -> c multiplier for alpha != 1, written via sin(pi(1-alpha)/2)
// so it stays accurate through alpha -> 1.
double scale_factor(double alpha) {
    const double d = 1.0 - alpha;
    return std::tgamma(2.0 - alpha) * std::sin(0.5 * kPi * d) / (alpha * d);
}

}  // namespace

StableParams::StableParams(double alpha_, double beta_, double c_)
    : alpha(alpha_), beta(beta_), c(c_) {
    check_alpha(alpha);
    if (!(beta >= -1.0 && beta <= 1.0)) {
        throw std::invalid_argument("stable: beta must lie in [-1,1]");
    }
    if (!(c > 0.0)) {
        throw std::invalid_argument("stable: c must be positive");
    }
}

std::complex<double> char_exponent(const StableParams& p, double u) {
    if (u == 0.0) return {0.0, 0.0};
    const double au = std::abs(u);
    const double sgn = u > 0.0 ? 1.0 : -1.0;
    if (p.alpha == 1.0) {
        const double mod = p.c * au;
        return {-mod, -mod * p.beta * (2.0 / kPi) * sgn * std::log(au)};
    }
    const double mod = p.c * std::pow(au, p.alpha);
    const double skew = p.beta * sgn * std::tan(0.5 * kPi * p.alpha);
    return {-mod, mod * skew};
}

ConvertedParams params_from_levy_measure(double cminus, double cplus, double alpha) {
    check_alpha(alpha);
    if (!(cminus >= 0.0 && cplus >= 0.0 && cminus + cplus > 0.0)) {
        throw std::invalid_argument("stable: need cminus, cplus >= 0 with cminus + cplus > 0");
    }
    const double csum = cminus + cplus;
    const double cdiff = cplus - cminus;
    ConvertedParams out{};
    out.beta = cdiff / csum;
    if (alpha == 1.0) {
        out.c = 0.5 * kPi * csum;
        out.mu = (kEuler - 1.0) * cdiff;
    } else {
        out.c = csum * scale_factor(alpha);
        out.mu = cdiff / (1.0 - alpha);
    }
    return out;
}

StableMeasure levy_measure_from_params(const StableParams& p) {
    double csum;
    if (p.alpha == 1.0) {
        csum = 2.0 * p.c / kPi;
    } else {
        csum = p.c / scale_factor(p.alpha);
    }
    StableMeasure out{};
    out.cplus = 0.5 * csum * (1.0 + p.beta);
    out.cminus = 0.5 * csum * (1.0 - p.beta);
    const double cdiff = out.cplus - out.cminus;
    out.mu = (p.alpha == 1.0) ? (kEuler - 1.0) * cdiff : cdiff / (1.0 - p.alpha);
    return out;
}

double sample_standard_stable(const StableParams& p, SplitRng& rng) {
    const double v = kPi * (rng.uniform() - 0.5);  // uniform on (-pi/2, pi/2)
    const double w = rng.exponential();
    if (p.alpha == 1.0) {
        const double half_pi = 0.5 * kPi;
        const double t = half_pi + p.beta * v;
        return (1.0 / half_pi) *
               (t * std::tan(v) - p.beta * std::log(half_pi * w * std::cos(v) / t));
    }
    const double ta = p.beta * std::tan(0.5 * kPi * p.alpha);
    const double b = std::atan(ta) / p.alpha;
    const double s = std::pow(1.0 + ta * ta, 0.5 / p.alpha);
    const double av = p.alpha * (v + b);
    return s * std::sin(av) / std::pow(std::cos(v), 1.0 / p.alpha) *
           std::pow(std::cos(v - av) / w, (1.0 - p.alpha) / p.alpha);
}

double sample_stable_increment(const StableParams& p, double dt, SplitRng& rng) {
    if (dt < 0.0) throw std::invalid_argument("stable: dt must be >= 0");
    if (dt == 0.0) return 0.0;
    if (p.alpha == 1.0) {
        const double scale = p.c * dt;
        double x = scale * sample_standard_stable(p, rng);
        // Rescaling a 1-stable law shifts it; undo the shift so the increment
        // law matches exp(dt * Psi(u)) exactly.
        x += (2.0 / kPi) * p.beta * scale * std::log(scale);
        return x;
    }
    return std::pow(p.c * dt, 1.0 / p.alpha) * sample_standard_stable(p, rng);
}

}  // namespace levyou
