#pragma once
// Independent rank-1 oracle: Gauss hypergeometric series, the classical
// two-parameter special function it evaluates on the negative axis, and an
// adaptive-quadrature reference transform.  Deliberately self-contained:
// nothing here touches the series recursion or the c-function machinery.

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"
#include "types.hpp"

namespace bchf {

struct parameter_pole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool near_nonpositive_int(double x, double tol = 1e-9) {
    return x <= 0.5 && std::abs(x - std::round(x)) <= tol;
}

// True when v is (numerically) a nonpositive integer -N: the series then
// terminates at degree N.
inline bool terminating_degree(const cplx& v, int& N) {
    if (std::abs(v.imag()) > 1e-12) return false;
    const double r = std::round(v.real());
    if (r > 0.5 || std::abs(v.real() - r) > 1e-12) return false;
    N = int(-r);
    return true;
}

// Maclaurin sum of 2F1(a,b;c;w), |w| < 1, with compensated accumulation.
inline cplx maclaurin_2f1(cplx a, cplx b, double c, double w) {
    cplx sum = 1.0, comp = 0.0, term = 1.0;
    for (int n = 0; n < 200000; ++n) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * w;
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-18 * std::abs(sum) && n > 4) return sum;
    }
    throw quadrature_failure("maclaurin_2f1: series did not converge");
}

}  // namespace detail

// 2F1(a,b;c;z) for real z <= 0: direct series for moderate z, the Pfaff
// transformation w = z/(z-1) in (0,1) otherwise.  Relative accuracy ~1e-13.
inline cplx gauss_2f1(cplx a, cplx b, double c, double z) {
    require(z <= 0.0, "gauss_2f1: implemented for z <= 0");
    if (detail::near_nonpositive_int(c))
        throw parameter_pole("gauss_2f1: lower parameter at a pole");
    // Terminating series: sum the polynomial directly in z.  The Pfaff form
    // is catastrophically unstable here, because its polynomial factor
    // cancels to (1-w)^N as w -> 1 before being multiplied by (1-z)^{-a}.
    int Na = 0, Nb = 0;
    const bool ta = detail::terminating_degree(a, Na);
    const bool tb = detail::terminating_degree(b, Nb);
    if (ta || tb) {
        const int N = (ta && tb) ? std::min(Na, Nb) : (ta ? Na : Nb);
        cplx sum = 1.0, term = 1.0;
        for (int n = 0; n < N; ++n) {
            term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
            sum += term;
        }
        return sum;
    }
    if (z < -0.5)
        return std::pow(1.0 - z, -a) * detail::maclaurin_2f1(a, cplx(c) - b, c, z / (z - 1.0));
    return detail::maclaurin_2f1(a, b, c, z);
}

// Classical parameters of the rank-1 function.
struct jacobi_params {
    double alpha = 0.0, beta = 0.0;
    double rho() const { return alpha + beta + 1.0; }
};

inline jacobi_params jacobi_of(const multiplicity& k) { return {k.alpha(), k.beta()}; }

// phi_lambda(z) = 2F1((rho+lambda)/2, (rho-lambda)/2; alpha+1; -sinh^2 z).
// Even in lambda; equals 1 at z = 0.
inline cplx jacobi_function(cplx lam, const jacobi_params& p, double z) {
    const double sh = std::sinh(z);
    return gauss_2f1(0.5 * (p.rho() + lam), 0.5 * (p.rho() - lam), p.alpha + 1.0, -sh * sh);
}

// Rank-1 weight density (2 sinh t)^{2 ks} (2 sinh 2t)^{2 kl}.
inline double rank1_weight(double t, const multiplicity& k) {
    return std::pow(2.0 * std::sinh(t), 2.0 * k.ks) *
           std::pow(2.0 * std::sinh(2.0 * t), 2.0 * k.kl);
}

// Reference forward transform of f supported on [t0, t1] (0 < t0), by
// adaptive quadrature against the oracle function and the rank-1 weight.
template <class F>
cplx jacobi_transform_reference(F&& f, cplx lam, const multiplicity& k, double t0, double t1,
                                double tol = 1e-12) {
    const jacobi_params p = jacobi_of(k);
    return adaptive_integrate(
        [&](double t) { return f(t) * jacobi_function(lam, p, t) * rank1_weight(t, k); }, t0,
        t1, tol);
}

// Residual of a three-term contiguous relation in the lower parameter,
// normalized by the largest term.  Exact identity: should sit at rounding.
inline double contiguity_residual(cplx a, cplx b, double c, double z) {
    const cplx f0 = gauss_2f1(a, b, c - 1.0, z);
    const cplx f1 = gauss_2f1(a, b, c, z);
    const cplx f2 = gauss_2f1(a, b, c + 1.0, z);
    const cplx t0 = c * (c - 1.0) * (z - 1.0) * f0;
    const cplx t1 = c * (c - 1.0 - (2.0 * c - a - b - 1.0) * z) * f1;
    const cplx t2 = (c - a) * (c - b) * z * f2;
    const double scale =
        std::max({std::abs(t0), std::abs(t1), std::abs(t2), 1.0});
    return std::abs(t0 + t1 + t2) / scale;
}

}  // namespace bchf
