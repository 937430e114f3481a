#pragma once
// Discrete and partially discrete spectrum of the hypergeometric transform:
// enumeration of the spectral point sets, closed-form component masses, and
// the iterated contour residues that verify them numerically.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cfunction.hpp"
#include "gamma.hpp"
#include "types.hpp"

namespace bchf {

struct invalid_regime : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_in_spectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct contour_ambiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spectral points attached to the rank-i facet: ascending tuples
//   xi_1 = alpha - |beta| + 1 + 2 m_0,   xi_{j+1} = xi_j + 2 km + 2 m_j,
// m_j >= 0 integers, with every coordinate negative.  i = 0 gives the
// zero-dimensional base point of the continuous component.
inline std::vector<rvec> enumerate_d(const multiplicity& k, int r, int i) {
    if (!k.in_valid_regime())
        throw invalid_regime("multiplicity outside the supported regime (alpha > -1, km >= 0)");
    require(0 <= i && i <= r, "enumerate_d: facet rank out of range");
    std::vector<rvec> out;
    if (i == 0) {
        out.emplace_back();
        return out;
    }
    const double base = k.alpha() - std::abs(k.beta()) + 1.0;
    rvec cur(i);
    // Depth-first walk over the ascending lattice, pruned by negativity.
    std::function<void(int, double)> walk = [&](int j, double start) {
        for (double v = start; v < -1e-9; v += 2.0) {
            cur[j] = v;
            if (j + 1 == i)
                out.push_back(cur);
            else
                walk(j + 1, v + 2.0 * k.km);
        }
    };
    walk(0, base);
    return out;
}

namespace detail {

inline double gamma_real(double x) { return gamma_fn(cplx(x)).real(); }

// Per-coordinate factor of the closed-form component mass.
inline double density_single(double xi, const multiplicity& k) {
    const double al = k.alpha(), be = k.beta();
    const double ab = al + std::abs(be);
    const double pref = -std::pow(2.0, 2.0 * al - 2.0 * be - 1.0) * xi / pi;
    return pref * gamma_real(0.5 * (xi + ab + 1.0)) * gamma_real(0.5 * (-xi + ab + 1.0)) /
           (gamma_real(0.5 * (xi - al + std::abs(be) + 1.0)) *
            gamma_real(0.5 * (-xi - al + std::abs(be) + 1.0)));
}

// Pair factor (q < p) present when km > 0 and the facet holds both coordinates.
inline double density_pair(double lq, double lp, const multiplicity& k) {
    const double km2 = 2.0 * k.km;
    return 0.25 * (lq * lq - lp * lp) *
           gamma_real(0.5 * (lp - lq + km2)) * gamma_real(0.5 * (-lq - lp + km2)) /
           (gamma_real(0.5 * (lp - lq - km2 + 2.0)) *
            gamma_real(0.5 * (-lq - lp - km2 + 2.0)));
}

inline bool is_member(const std::vector<rvec>& set, const rvec& xi, double tol = 1e-9) {
    for (const auto& p : set) {
        bool ok = p.size() == xi.size();
        for (size_t j = 0; ok && j < p.size(); ++j) ok = std::abs(p[j] - xi[j]) <= tol;
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

// Order of the stabilizer of xi under the signed permutations of its facet:
// signs are pinned by xi_j < 0, so only repeated values contribute.
inline long stabilizer_order(const rvec& xi) {
    long stab = 1;
    long run = 1;
    for (size_t j = 1; j < xi.size(); ++j) {
        if (std::abs(xi[j] - xi[j - 1]) <= 1e-9)
            stab *= ++run;
        else
            run = 1;
    }
    return stab;
}

// Closed-form mass of the spectral component through xi on the rank-i facet.
// For km > 0 the pair-coupled product form applies; for km = 0 (or rank 1)
// the decoupled form divides by the stabilizer order of xi in W(Theta_i).
inline double density_d(const multiplicity& k, int r, int i, const rvec& xi) {
    if (i == 0) return 1.0;
    require(int(xi.size()) == i, "density_d: xi size must equal facet rank");
    if (!detail::is_member(enumerate_d(k, r, i), xi))
        throw not_in_spectrum("xi is not a spectral point of the requested facet");
    double val = ctilde_at_rho(k, r, cset_theta(r, i));
    val *= val;
    for (int j = 0; j < i; ++j) val *= detail::density_single(xi[j], k);
    const bool coupled = k.km > 0.0 && i > 1;
    if (coupled) {
        for (int p = 1; p < i; ++p)
            for (int q = 0; q < p; ++q) val *= detail::density_pair(xi[q], xi[p], k);
    } else {
        val /= double(stabilizer_order(xi));
    }
    require(val > 0.0 && std::isfinite(val), "density_d: mass must be positive");
    return val;
}

struct residue_report {
    double numeric = 0.0;
    double closed_form = 0.0;
    double residual = 0.0;
};

namespace detail {

// Zeros of the single-coordinate c-blocks: the pole lattice of the
// reciprocal density in each coordinate, restricted to a window.
inline rvec single_block_zeros(const multiplicity& k, double lo, double hi) {
    rvec out;
    const double heads[2] = {-k.ks - 1.0, -k.ks - 2.0 * k.kl};
    for (double head : heads) {
        for (int n = 0; n <= 400; ++n) {  // descending family head - 2n
            const double v = head - 2.0 * n;
            if (v < lo) break;
            if (v <= hi) out.push_back(v);
        }
        for (int n = 0; n <= 400; ++n) {  // mirrored family -head + 2n
            const double v = -head + 2.0 * n;
            if (v > hi) break;
            if (v >= lo) out.push_back(v);
        }
    }
    return out;
}

}  // namespace detail

// Numerical iterated residue of the reciprocal density of the rank-i facet
// subsystem at xi, against the closed form.  Contours are circles around
// each coordinate, innermost first; radii default to a shrinking ladder so
// that pair-block sheets anchored on outer circles stay outside inner ones.
inline residue_report residue_verify_dtheta(const multiplicity& k, int r, int i,
                                            const rvec& xi, rvec radii = {}) {
    require(1 <= i && i <= r, "residue_verify_dtheta: facet rank out of range");
    const double closed = density_d(k, r, i, xi);

    // Default radii: quarter of the fixed-lattice gap, capped, then shrunk
    // geometrically toward the inner coordinates.
    if (radii.empty()) {
        radii.resize(i);
        for (int j = 0; j < i; ++j) {
            double gap = 2.0;
            for (double p : detail::single_block_zeros(k, xi[j] - 2.5, xi[j] + 2.5)) {
                const double dist = std::abs(p - xi[j]);
                if (dist > 1e-9) gap = std::min(gap, dist);
            }
            radii[j] = std::min(0.05, 0.25 * gap) * std::pow(0.4, i - 1 - j);
        }
    }
    require(int(radii.size()) == i, "residue_verify_dtheta: one radius per coordinate");

    // Ambiguity scan: a second pole within twice any contour radius.
    for (int j = 0; j < i; ++j) {
        for (double p : detail::single_block_zeros(k, xi[j] - 2.5, xi[j] + 2.5)) {
            const double dist = std::abs(p - xi[j]);
            if (dist > 1e-9 && dist <= 2.0 * radii[j])
                throw contour_ambiguity("fixed pole within twice a contour radius");
        }
        for (int jj = 0; jj < i; ++jj) {
            if (jj == j) continue;
            // Pair-block sheets lambda_j = +-(2 km + 2n) +- lambda_jj.  As
            // lambda_jj runs over its circle, the sheet pole's distance from
            // xi_j sweeps [| d - radii_jj |, d + radii_jj]; the contour is
            // ill-defined when its radius lands in that band.
            for (int n = 0; n < 40; ++n) {
                const double off = 2.0 * k.km + 2.0 * n;
                for (int s1 : {+1, -1})
                    for (int s2 : {+1, -1}) {
                        const double d = std::abs(s1 * off + s2 * xi[jj] - xi[j]);
                        const double lo = std::abs(d - radii[jj]);
                        const double hi = d + radii[jj];
                        const double eps = 0.2 * radii[j];
                        if (radii[j] >= lo - eps && radii[j] <= hi + eps)
                            throw contour_ambiguity("pair sheet crosses a contour");
                    }
                if (off > 6.0) break;
            }
        }
    }

    const cfactor_set set = cset_theta(r, i);
    const double crho_th = ctilde_at_rho(k, r, set);
    cvec lam(r, 0.0);
    // f(lambda) = 1 / (c_Theta(lambda) c_Theta(-lambda)), c normalized at rho.
    auto dens = [&]() {
        cvec neg(r, 0.0);
        for (int j = 0; j < i; ++j) neg[j] = -lam[j];
        const cplx a = ctilde(lam, k, r, set);
        const cplx b = ctilde(neg, k, r, set);
        return (crho_th * crho_th) / (a * b);
    };
    // Iterated circles, coordinate 0 innermost.
    std::function<cplx(int, int)> loop = [&](int level, int nodes) -> cplx {
        cplx acc = 0.0;
        for (int n = 0; n < nodes; ++n) {
            const double th = 2.0 * pi * n / nodes;
            const cplx z = cplx(std::cos(th), std::sin(th));
            lam[level] = xi[level] + radii[level] * z;
            const cplx inner = (level == 0) ? dens() : loop(level - 1, nodes);
            acc += inner * radii[level] * z;
        }
        return acc / double(nodes);
    };

    double prev = 0.0;
    bool have_prev = false;
    residue_report rep;
    rep.closed_form = closed;
    for (int nodes = 64; nodes <= 1024; nodes *= 2) {
        const cplx v = loop(i - 1, nodes);
        const double cur = ((i % 2) ? -1.0 : 1.0) * v.real();
        if (have_prev && std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur))) {
            rep.numeric = cur;
            rep.residual = std::abs(cur - closed) / std::max(1.0, std::abs(closed));
            return rep;
        }
        prev = cur;
        have_prev = true;
    }
    rep.numeric = prev;
    rep.residual = std::abs(prev - closed) / std::max(1.0, std::abs(closed));
    return rep;
}

// One component of the spectral measure: the continuum (ndisc = 0), a
// partially discrete fiber (0 < ndisc < r), or an atom (ndisc = r).
// mass is the closed-form density prefactor of the component.
struct spectral_component {
    int ndisc = 0;
    rvec xi;
    double mass = 1.0;
};

inline std::vector<spectral_component> assemble_measure(const multiplicity& k, int r) {
    std::vector<spectral_component> comps;
    comps.push_back({0, {}, 1.0});
    for (int i = 1; i <= r; ++i)
        for (const auto& xi : enumerate_d(k, r, i))
            comps.push_back({i, xi, density_d(k, r, i, xi)});
    return comps;
}

}  // namespace bchf
