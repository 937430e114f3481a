// Walkthrough: evaluate F, inspect the spectrum, and close the Plancherel
// identity for a signed multiplicity where discrete spectrum appears.
//
//   cmake --build build --target spectra_walkthrough
//   ./build/spectra_walkthrough

#include <bchf/bchf.hpp>
#include <cstdio>

using namespace bchf;

int main() {
    // Signed multiplicity in the L^2 regime: alpha = 0.5 > -1, km >= 0.
    const multiplicity k{3.0, 0.5, -3.0};
    const int r = 2;

    // Point evaluation of the hypergeometric function on the chamber.
    const kappa_lattice lat(r, 40);
    const cvec lam{cplx(0.3, 1.1), cplx(-0.2, 2.4)};
    const rvec x{0.8, 1.9};
    const hyper_f F(lat, lam, k, ctilde_at_rho(k, r));
    const phi_basis B(lat, x);
    const cplx v = F.eval(B);
    std::printf("F(lambda; x) = %.12f %+.12fi\n", v.real(), v.imag());

    // The spectrum: atoms and lower-dimensional fibers with their masses.
    for (int i = 1; i <= r; ++i) {
        for (const auto& pt : enumerate_d(k, r, i)) {
            std::printf("component i=%d  xi = (", i);
            for (int j = 0; j < i; ++j) std::printf("%s%g", j ? ", " : "", pt[j]);
            std::printf(")  mass = %.6f\n", density_d(k, r, i, pt));
        }
    }

    // Plancherel identity for a smooth W-invariant bump supported in the
    // chamber: LHS = ||f||^2 against the symmetric measure, RHS = spectral.
    const rvec c{0.75, 2.05};
    transform_context ctx(k, r, 40,
                          box_grid({c[0] - 0.44, c[1] - 0.44}, {c[0] + 0.44, c[1] + 0.44}, 1, 16));
    radial_bump f(c, 0.42, 3);
    spectral_grid sg;
    sg.Lam = 20.0;
    sg.panels = 10;
    sg.nodes = 10;
    const plancherel_report rep = plancherel_check(ctx, f, sg);
    std::printf("plancherel: lhs %.6e rhs %.6e residual %.2e\n", rep.lhs, rep.rhs, rep.residual);
    std::printf("  continuum %.3e / fibers %.3e / atoms %.3e\n", rep.by_ndisc[0], rep.by_ndisc[1],
                rep.by_ndisc[2]);
    return 0;
}
