#pragma once
// One-dimensional quadrature rules: Gauss-Legendre for smooth panels,
// Gauss-Jacobi for endpoint-singular weights (1-x)^a (1+x)^b, and a nested
// adaptive integrator used by the independent rank-1 reference transform.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "types.hpp"

namespace bchf {

struct quadrature_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct quad1d {
    rvec x, w;

    // Affine image of the rule on [lo, hi].
    quad1d mapped(double lo, double hi) const {
        quad1d q;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        q.x.resize(x.size());
        q.w.resize(w.size());
        for (size_t i = 0; i < x.size(); ++i) {
            q.x[i] = mid + half * x[i];
            q.w[i] = half * w[i];
        }
        return q;
    }
};

// Gauss-Legendre rule on [-1, 1] by Newton iteration on the recurrence.
inline quad1d gauss_legendre(int n) {
    require(n >= 1, "gauss_legendre: n >= 1");
    quad1d q;
    q.x.resize(n);
    q.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        q.x[i] = -z;
        q.x[n - 1 - i] = z;
        q.w[i] = q.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return q;
}

// Symmetric tridiagonal eigenproblem (implicit QL with Wilkinson shifts),
// returning eigenvalues in d and first components of the normalized
// eigenvectors in z.  Standard Golub-Welsch workhorse.
inline void tridiag_eigen_first(rvec& d, const rvec& e_in, rvec& z) {
    const int n = int(d.size());
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    rvec e(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = e_in[i];
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                require(iter++ < 60, "tridiag_eigen: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b, a, b > -1.
inline quad1d gauss_jacobi(int n, double a, double b) {
    require(n >= 1 && a > -1.0 && b > -1.0, "gauss_jacobi: bad parameters");
    rvec diag(n), off(n > 1 ? n - 1 : 0), z;
    const double ab = a + b;
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            diag[i] = (b - a) / (ab + 2.0);
        else {
            const double den = (2.0 * i + ab) * (2.0 * i + ab + 2.0);
            diag[i] = (b * b - a * a) / den;
        }
    }
    for (int i = 1; i < n; ++i) {
        double beta;
        if (i == 1)
            beta = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        else {
            const double t = 2.0 * i + ab;
            beta = 4.0 * i * (i + a) * (i + b) * (i + ab) / (t * t * (t + 1.0) * (t - 1.0));
        }
        off[i - 1] = std::sqrt(beta);
    }
    const double mu0 =
        std::pow(2.0, ab + 1.0) *
        std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
    rvec d = diag, e = off;
    tridiag_eigen_first(d, e, z);
    // Sort nodes ascending, carrying the eigenvector components.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    quad1d q;
    q.x.resize(n);
    q.w.resize(n);
    for (int i = 0; i < n; ++i) {
        q.x[i] = d[idx[i]];
        q.w[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return q;
}

// Nested Gauss rule pair for adaptive integration of a smooth integrand.
template <class F>
cplx adaptive_integrate(F&& f, double lo, double hi, double tol, int max_depth = 24) {
    static const quad1d g15 = gauss_legendre(15);
    static const quad1d g31 = gauss_legendre(31);
    struct seg {
        double lo, hi;
        int depth;
    };
    std::vector<seg> stack{{lo, hi, 0}};
    cplx total = 0.0;
    int evals = 0;
    while (!stack.empty()) {
        const seg s = stack.back();
        stack.pop_back();
        const quad1d qa = g15.mapped(s.lo, s.hi);
        const quad1d qb = g31.mapped(s.lo, s.hi);
        cplx va = 0.0, vb = 0.0;
        for (size_t i = 0; i < qa.x.size(); ++i) va += qa.w[i] * f(qa.x[i]);
        for (size_t i = 0; i < qb.x.size(); ++i) vb += qb.w[i] * f(qb.x[i]);
        evals += 46;
        if (std::abs(va - vb) <= tol * std::max(1.0, std::abs(vb))) {
            total += vb;
        } else if (s.depth >= max_depth) {
            throw quadrature_failure("adaptive_integrate: max depth reached");
        } else {
            const double mid = 0.5 * (s.lo + s.hi);
            stack.push_back({s.lo, mid, s.depth + 1});
            stack.push_back({mid, s.hi, s.depth + 1});
        }
        require(evals < 4'000'000, "adaptive_integrate: budget exhausted");
    }
    return total;
}

}  // namespace bchf
