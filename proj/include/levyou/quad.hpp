#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace levyou {

// Recursive adaptive Simpson on [a,b]. `tol` is an absolute tolerance on the
// interval's contribution; accuracy degrades gracefully once `max_depth` is
// hit, which keeps boundary-layer integrands from recursing forever.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
    struct Impl {
        F& f;
        static double simpson(double fa, double fm, double fb, double h) {
            return h / 6.0 * (fa + 4.0 * fm + fb);
        }
        double rec(double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = simpson(fa, flm, fm, m - a);
            const double right = simpson(fm, frm, fb, b - m);
            const double err = left + right - whole;
            if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
            return rec(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   rec(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    if (!(b > a)) return 0.0;
    Impl impl{f};
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = Impl::simpson(fa, fm, fb, b - a);
    return impl.rec(a, b, fa, fm, fb, whole, tol, max_depth);
}

// Complex-valued variant; error control on |.|.
template <typename F>
std::complex<double> adaptive_simpson_complex(F&& f, double a, double b, double tol = 1e-10,
                                              int max_depth = 40) {
    using C = std::complex<double>;
    struct Impl {
        F& f;
        static C simpson(C fa, C fm, C fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }
        C rec(double a, double b, C fa, C fm, C fb, C whole, double tol, int depth) {
            const double m = 0.5 * (a + b);
            const C flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
            const C left = simpson(fa, flm, fm, m - a);
            const C right = simpson(fm, frm, fb, b - m);
            const C err = left + right - whole;
            if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
            return rec(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   rec(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    if (!(b > a)) return C(0.0, 0.0);
    Impl impl{f};
    const C fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const C whole = Impl::simpson(fa, fm, fb, b - a);
    return impl.rec(a, b, fa, fm, fb, whole, tol, max_depth);
}

// Fixed 16-point Gauss-Legendre panel, for smooth oscillatory integrands where
// panel placement is chosen by the caller.
template <typename F>
double gauss_legendre_16(F&& f, double a, double b) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        acc += ws[i] * (f(c + h * xs[i]) + f(c - h * xs[i]));
    }
    return acc * h;
}

}  // namespace levyou
