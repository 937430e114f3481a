#include <catch2/catch_amalgamated.hpp>

#include <bchf/bchf.hpp>

using namespace bchf;

static const multiplicity k1c{3.0, 0.0, -2.0};
static const multiplicity k2c{3.0, 0.5, -3.0};
static const multiplicity k1t{5.0, 0.0, -4.0};

// Shared rank-2 context at the reference bump used to freeze values.
static const transform_context& ref_ctx2() {
    static transform_context ctx(k2c, 2, 44,
                                 box_grid({0.75 - 0.44, 2.05 - 0.44},
                                          {0.75 + 0.44, 2.05 + 0.44}, 1, 24));
    return ctx;
}

TEST_CASE("forward transform reproduces frozen reference values") {
    // Frozen against an independent high-precision pipeline: radial bump at
    // (0.75, 2.05), radius 0.42, 24-point tensor grid, height 44.
    const transform_context& ctx = ref_ctx2();
    radial_bump f(rvec{0.75, 2.05}, 0.42);
    const rvec fdw = ctx.sample(f);

    const cplx at_rho = forward_residual(ctx, fdw, cvec{cplx(-3.0), cplx(-2.0)}, 2);
    CHECK(std::abs(at_rho - cplx(8.10172137116352e-08)) < 1e-18 + 1e-10 * std::abs(at_rho));

    const double y1 = 3.101666761293187, y2 = 6.980144928248768;
    const cplx f1 = forward_residual(ctx, fdw, cvec{cplx(-3.0), cplx(0.0, y1)}, 1);
    CHECK(std::abs(f1 - cplx(1.8237144995859717e-07)) < 1e-10 * std::abs(f1));
    const cplx f2 = forward_residual(ctx, fdw, cvec{cplx(-3.0), cplx(0.0, y2)}, 1);
    CHECK(std::abs(f2 - cplx(5.115647537678985e-08)) < 1e-10 * std::abs(f2));
    const cplx f3 = forward_residual(ctx, fdw, cvec{cplx(-1.0), cplx(0.0, y1)}, 1);
    CHECK(std::abs(f3 - cplx(7.339956978790083e-08)) < 1e-10 * std::abs(f3));
    const cplx f4 = forward_residual(ctx, fdw, cvec{cplx(-1.0), cplx(0.0, y2)}, 1);
    CHECK(std::abs(f4 - cplx(-1.326189051001145e-07)) < 1e-10 * std::abs(f4));
}

TEST_CASE("forward transform is Weyl invariant in lambda") {
    const transform_context& ctx = ref_ctx2();
    radial_bump f(rvec{0.75, 2.05}, 0.42);
    const rvec fdw = ctx.sample(f);
    const cvec lam{cplx(0.4, 1.2), cplx(-0.3, 2.1)};
    const cplx base = forward(ctx, fdw, lam);
    const cvec flipped{cplx(-0.4, -1.2), cplx(-0.3, 2.1)};
    CHECK(std::abs(forward(ctx, fdw, flipped) - base) < 1e-12 * std::abs(base));
    const cvec swapped{cplx(-0.3, 2.1), cplx(0.4, 1.2)};
    CHECK(std::abs(forward(ctx, fdw, swapped) - base) < 1e-12 * std::abs(base));
}

TEST_CASE("rank-1 forward agrees with the oracle transform") {
    transform_context ctx(k1c, 1, 50, box_grid({1.1 - 0.37}, {1.1 + 0.37}, 3, 24));
    radial_bump f(rvec{1.1}, 0.35);
    const rvec fdw = ctx.sample(f);
    auto fs = [&](double t) { return f(rvec{t}); };
    for (double y : {0.9, 3.7, 8.2}) {
        const cplx got = forward(ctx, fdw, cvec{cplx(0.0, y)});
        const cplx want = jacobi_transform_reference(fs, cplx(0.0, y), k1c, 0.73, 1.47);
        CHECK(std::abs(got - want) < 1e-9 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("residual atom values agree with the rank-1 oracle") {
    // F at a discrete spectral point through the restricted sum equals the
    // terminating Jacobi polynomial value from the oracle.
    kappa_lattice lat(1, 60);
    const jacobi_params p = jacobi_of(k1t);
    for (double t : {0.6, 0.9, 1.4}) {
        phi_basis B(lat, rvec{t});
        const residual_f Fm1(lat, cvec{cplx(-1.0)}, 1, k1t);
        const cplx want = jacobi_function(cplx(-1.0), p, t);
        CHECK(std::abs(Fm1.eval(B) - want) < 1e-9 * (1.0 + std::abs(want)));
        const residual_f Fm3(lat, cvec{cplx(-3.0)}, 1, k1t);
        CHECK(std::abs(Fm3.eval(B) - cplx(1.0)) < 1e-10);
    }
}

TEST_CASE("discrete pairings reproduce the closed-form masses") {
    // Norms 1/840 and 1/360 for the two atoms of ks=5, kl=-4, orthogonality
    // across atoms.  The wall region is handled by the oracle identity: the
    // series atoms are polynomial there, so a moderate inner cutoff works.
    const double n3 = l2_pairing(k1t, 1, 60, {-3.0}, {-3.0});
    CHECK(std::abs(n3 - 1.0 / 840.0) * 840.0 < 1e-6);
    const double n1 = l2_pairing(k1t, 1, 60, {-1.0}, {-1.0});
    CHECK(std::abs(n1 - 1.0 / 360.0) * 360.0 < 1e-4);
    const double x13 = l2_pairing(k1t, 1, 60, {-1.0}, {-3.0});
    CHECK(std::abs(x13) < 1e-4 * std::sqrt(n1 * n3));
}

TEST_CASE("spectral measure nodes are positive where required") {
    spectral_grid sg;
    sg.Lam = 8.0;
    sg.panels = 4;
    sg.nodes = 6;
    const auto nodes = measure_nodes(k2c, 2, sg);
    int n_atom = 0, n_fiber = 0, n_cont = 0;
    for (const auto& m : nodes) {
        CHECK(std::isfinite(m.weight));
        if (m.ndisc == 2) {
            ++n_atom;
            CHECK(m.weight == Catch::Approx(20480.0));
        } else if (m.ndisc == 1) {
            ++n_fiber;
            CHECK(m.weight > 0.0);
        } else {
            ++n_cont;
            CHECK(m.weight > 0.0);
        }
    }
    CHECK(n_atom == 1);
    CHECK(n_fiber == 2 * 24);
    CHECK(n_cont == 24 * 23 / 2);
}

TEST_CASE("default contour shifts clear the reflected spectrum") {
    const rvec e1 = default_eta(k1c, 1);
    CHECK(e1[0] < -1.0);
    const rvec e2 = default_eta(k1t, 1);
    CHECK(e2[0] < -3.0);
    const rvec e3 = default_eta(k2c, 2);
    CHECK(e3[0] < -3.0);
    CHECK(e3[1] < e3[0]);
}

TEST_CASE("shifted-contour inversion is independent of the shift") {
    transform_context ctx(k1c, 1, 40, box_grid({0.7}, {1.5}, 1, 16));
    gaussian_spectral phi{0.25};
    auto phi1 = [&](const cvec& lam) { return phi(lam); };
    spectral_grid sg;
    sg.Lam = 11.0;
    sg.panels = 8;
    sg.nodes = 12;
    const std::vector<rvec> xs = {{0.9}, {1.3}};
    const cvec a = inverse_first_form(ctx, phi1, xs, {-2.0}, sg);
    const cvec b = inverse_first_form(ctx, phi1, xs, {-2.6}, sg);
    for (size_t i = 0; i < xs.size(); ++i)
        CHECK(std::abs(a[i] - b[i]) < 1e-8 * (1.0 + std::abs(a[i])));
}

TEST_CASE("contours through poles are rejected") {
    transform_context ctx(k1c, 1, 30, box_grid({0.7}, {1.5}, 1, 8));
    gaussian_spectral phi{0.25};
    auto phi1 = [&](const cvec& lam) { return phi(lam); };
    spectral_grid sg;
    sg.Lam = 6.0;
    sg.panels = 3;
    sg.nodes = 6;
    const std::vector<rvec> xs = {{0.9}};
    // eta = -1 sits exactly on the reflected zero lattice {-1 - 2n}.
    CHECK_THROWS_AS(inverse_first_form(ctx, phi1, xs, {-1.0}, sg), contour_through_pole);
    // Anti-dominance is required.
    CHECK_THROWS(inverse_first_form(ctx, phi1, xs, {0.4}, sg));
}

TEST_CASE("rank-1 Plancherel identity closes quickly") {
    // Wide sharp bump: the transform decays fast enough that a moderate
    // spectral window already closes the identity to well under a percent.
    transform_context ctx(k1c, 1, 80, box_grid({0.2}, {2.0}, 4, 20));
    radial_bump f(rvec{1.1}, 0.85, 3);
    spectral_grid sg;
    sg.Lam = 24.0;
    sg.panels = 12;
    sg.nodes = 10;
    const plancherel_report rep = plancherel_check(ctx, f, sg);
    CHECK(rep.residual < 1e-3);
    // The atom carries real mass here.
    CHECK(rep.by_ndisc[1] > 0.0);
    CHECK(rep.by_ndisc[1] < rep.rhs);
}

TEST_CASE("rank-1 round trip reconstructs the bump") {
    transform_context ctx(k1c, 1, 80, box_grid({0.2}, {2.0}, 4, 20));
    radial_bump f(rvec{1.1}, 0.85, 3);
    spectral_grid sg;
    sg.Lam = 32.0;
    sg.panels = 16;
    sg.nodes = 10;
    const std::vector<rvec> xs = {{1.0}, {1.28}, {1.42}};
    const cvec got = round_trip(ctx, f, xs, sg);
    for (size_t i = 0; i < xs.size(); ++i) {
        CHECK(std::abs(got[i].imag()) < 1e-10);
        CHECK(std::abs(got[i].real() - f(xs[i])) / f(rvec{1.1}) < 5e-3);
    }
}

TEST_CASE("Paley-Wiener statistic stabilizes for smooth input only") {
    transform_context ctx(k1c, 1, 50, box_grid({1.1 - 0.37}, {1.1 + 0.37}, 3, 20));
    radial_bump f(rvec{1.1}, 0.35, 3);
    hat_bump g(rvec{1.1}, 0.35);
    const rvec fdw = ctx.sample(f);
    const rvec gdw = ctx.sample(g);
    const rvec shifts = {0.0, 0.5, 1.0};
    const double type = f.pw_type();
    // Window-doubling with aligned sample lattices: the smooth statistic has
    // its maximum inside the smaller window, the hat statistic keeps growing.
    const double s1 = pw_statistic(ctx, fdw, type, 4, 32.0, shifts, 192);
    const double s2 = pw_statistic(ctx, fdw, type, 4, 64.0, shifts, 384);
    CHECK(s2 / s1 < 1.05);
    const double h1 = pw_statistic(ctx, gdw, type, 4, 32.0, shifts, 192);
    const double h2 = pw_statistic(ctx, gdw, type, 4, 64.0, shifts, 384);
    CHECK(h2 / h1 > 1.5);
}

TEST_CASE("parallel reduction is deterministic") {
    const transform_context& ctx = ref_ctx2();
    radial_bump f(rvec{0.75, 2.05}, 0.42);
    spectral_grid sg;
    sg.Lam = 6.0;
    sg.panels = 3;
    sg.nodes = 6;
    thread_override() = 1;
    const plancherel_report a = plancherel_check(ctx, f, sg);
    thread_override() = 3;
    const plancherel_report b = plancherel_check(ctx, f, sg);
    thread_override() = 0;
    CHECK(a.rhs == b.rhs);
    CHECK(a.lhs == b.lhs);
}
