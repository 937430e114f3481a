#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <bchf/quadrature.hpp>
#include <bchf/transform.hpp>

using namespace bchf;

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    const quad1d q = gauss_legendre(15);
    for (int m = 0; m <= 29; ++m) {
        double acc = 0.0;
        for (size_t i = 0; i < q.x.size(); ++i) acc += q.w[i] * std::pow(q.x[i], m);
        const double want = (m % 2 == 0) ? 2.0 / (m + 1) : 0.0;
        CHECK(std::abs(acc - want) < 1e-13);
    }
}

TEST_CASE("mapped panels") {
    const quad1d q = gauss_legendre(8).mapped(0.0, 2.0);
    double acc = 0.0;
    for (size_t i = 0; i < q.x.size(); ++i) acc += q.w[i] * q.x[i] * q.x[i] * q.x[i];
    CHECK(std::abs(acc - 4.0) < 1e-12);
}

TEST_CASE("Gauss-Jacobi weights reproduce beta moments") {
    // integral over (-1,1) of (1-x)^a (1+x)^b x^m against closed forms.
    const double a = 0.5, b = -0.3;
    const quad1d q = gauss_jacobi(12, a, b);
    auto beta_fn = [](double p, double r) {
        return std::exp(std::lgamma(p) + std::lgamma(r) - std::lgamma(p + r));
    };
    // mu0 = 2^{a+b+1} B(a+1, b+1).
    double m0 = 0.0, m1 = 0.0;
    for (size_t i = 0; i < q.x.size(); ++i) {
        m0 += q.w[i];
        m1 += q.w[i] * q.x[i];
    }
    const double mu0 = std::pow(2.0, a + b + 1.0) * beta_fn(a + 1.0, b + 1.0);
    CHECK(std::abs(m0 - mu0) / mu0 < 1e-13);
    // First moment: mu1/mu0 = (b - a)/(a + b + 2).
    CHECK(std::abs(m1 / m0 - (b - a) / (a + b + 2.0)) < 1e-13);
    // Degree-2 check against a 40-digit value of the same moment via the
    // shifted-beta expansion: integral of (1-x)^a (1+x)^b (1+x)^2 has
    // closed form 2^{a+b+3} B(a+1, b+3).
    double m2 = 0.0;
    for (size_t i = 0; i < q.x.size(); ++i) m2 += q.w[i] * (1.0 + q.x[i]) * (1.0 + q.x[i]);
    const double want2 = std::pow(2.0, a + b + 3.0) * beta_fn(a + 1.0, b + 3.0);
    CHECK(std::abs(m2 - want2) / want2 < 1e-13);
}

TEST_CASE("adaptive integration meets its tolerance") {
    const cplx s = adaptive_integrate([](double t) { return cplx(std::sin(t), 0.0); }, 0.0,
                                      pi, 1e-13);
    CHECK(std::abs(s.real() - 2.0) < 1e-12);
    // Mildly singular endpoint derivative: x^{3/2} integrates to 2/5.
    const cplx p = adaptive_integrate(
        [](double t) { return cplx(std::sqrt(t) * t, 0.0); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(p.real() - 0.4) < 1e-10);
}

TEST_CASE("weighted chamber volumes match the closed-form constants") {
    // integral over the chamber of delta equals 1/mass(rho): 1/12, 1/840,
    // and 1/20480 for the three reference multiplicities.
    {
        const multiplicity k{3.0, 0.0, -2.0};
        const spatial_grid g = wedge_grid(1, 16.0, 12, 12);
        double acc = 0.0;
        for (size_t i = 0; i < g.pts.size(); ++i)
            acc += weight_delta(g.pts[i], k, 1) * g.w[i];
        CHECK(std::abs(acc - 1.0 / 12.0) * 12.0 < 1e-9);
    }
    {
        const multiplicity k{5.0, 0.0, -4.0};
        const spatial_grid g = wedge_grid(1, 16.0, 12, 12);
        double acc = 0.0;
        for (size_t i = 0; i < g.pts.size(); ++i)
            acc += weight_delta(g.pts[i], k, 1) * g.w[i];
        CHECK(std::abs(acc - 1.0 / 840.0) * 840.0 < 1e-9);
    }
    {
        const multiplicity k{3.0, 0.5, -3.0};
        const spatial_grid g = wedge_grid(2, 16.0, 12, 12);
        double acc = 0.0;
        for (size_t i = 0; i < g.pts.size(); ++i)
            acc += weight_delta(g.pts[i], k, 2) * g.w[i];
        CHECK(std::abs(acc - 1.0 / 20480.0) * 20480.0 < 1e-7);
    }
}

TEST_CASE("quadrature grids are deterministic") {
    const quad1d a = gauss_legendre(20), b = gauss_legendre(20);
    CHECK(a.x == b.x);
    CHECK(a.w == b.w);
    const quad1d ja = gauss_jacobi(9, 0.7, -0.2), jb = gauss_jacobi(9, 0.7, -0.2);
    CHECK(ja.x == jb.x);
    CHECK(ja.w == jb.w);
}
