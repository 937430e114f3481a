#pragma once
// The hypergeometric Fourier transform at desk scale: forward transform of
// compactly supported W-invariant functions, spectral-measure quadrature
// (continuum, partially discrete fibers, atoms), two inversion forms, the
// Plancherel check, discrete L^2 pairings, and a Paley-Wiener decay probe.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hypergeom.hpp"
#include "quadrature.hpp"
#include "spectrum.hpp"

namespace bchf {

struct contour_through_pole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parallel harness: deterministic regardless of worker count, because each
// index writes only its own slot and reductions happen in index order.

// Programmatic worker-count override; 0 defers to the BCHF_THREADS env var.
inline int& thread_override() {
    static int v = 0;
    return v;
}

inline int default_thread_count() {
    if (thread_override() > 0) return thread_override();
    if (const char* s = std::getenv("BCHF_THREADS")) {
        const int n = std::atoi(s);
        if (n >= 1) return n;
    }
    return 1;
}

template <class Fn>
void parallel_for(int n, Fn&& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Test functions.

// W-invariant smooth bump: orbit sum of exp(-(1-|t-c|^2/R^2)^-m) over the
// Weyl group.  With the support inside the chamber only one term is live.
// Larger m sharpens the Gevrey class: the transform decays like
// exp(-c |lambda|^(m/(m+1))) along the tempered spectrum, so high m buys a
// much shorter spectral truncation for inversion tests.
class radial_bump {
  public:
    radial_bump(rvec center, double R, int sharp = 1)
        : c_(std::move(center)), R_(R), sharp_(sharp), W_(weyl_group(int(c_.size()))) {}

    double operator()(const rvec& t) const {
        const int r = int(c_.size());
        double acc = 0.0;
        for (const auto& w : W_) {
            double u2 = 0.0;
            for (int j = 0; j < r; ++j) {
                const double d = double(w.sign[j]) * t[w.perm[j]] - c_[j];
                u2 += d * d;
            }
            u2 /= R_ * R_;
            if (u2 < 1.0) acc += std::exp(-std::pow(1.0 - u2, -double(sharp_)));
        }
        return acc;
    }

    const rvec& center() const { return c_; }
    double radius() const { return R_; }
    // Exponential type of the orbit hull, for Paley-Wiener statistics.
    double pw_type() const {
        double n2 = 0.0;
        for (double v : c_) n2 += v * v;
        return std::sqrt(n2) + R_;
    }

  private:
    rvec c_;
    double R_;
    int sharp_;
    std::vector<weyl_elem> W_;
};

// Continuous, piecewise-linear W-invariant spike: the non-smooth negative
// control for the Paley-Wiener probe (C^0 only, so only O(|lambda|^-2) decay).
class hat_bump {
  public:
    hat_bump(rvec center, double R) : c_(std::move(center)), R_(R) {}
    double operator()(const rvec& t) const {
        double n2 = 0.0;
        for (size_t j = 0; j < c_.size(); ++j) n2 += (t[j] - c_[j]) * (t[j] - c_[j]);
        const double u = std::sqrt(n2) / R_;
        return u < 1.0 ? 1.0 - u : 0.0;
    }
    const rvec& center() const { return c_; }
    double radius() const { return R_; }

  private:
    rvec c_;
    double R_;
};

// Entire spectral test function decaying on vertical strips, used for
// contour-shift identities: g(lambda) = exp(cg * sum lambda_j^2).  On a line
// Re lambda = eta the modulus is exp(cg (eta^2 - y^2)), so cg > 0 gives
// Gaussian decay in the imaginary direction, uniformly on bounded strips.
struct gaussian_spectral {
    double cg = 0.25;
    cplx operator()(const cvec& lam) const {
        cplx s = 0.0;
        for (const cplx& v : lam) s += v * v;
        return std::exp(cg * s);
    }
};

// ---------------------------------------------------------------------------
// Spatial side.

// Weight density of the chamber integral: product over positive roots of
// (2 sinh root(t)/2)^{2k}.
inline double weight_delta(const rvec& t, const multiplicity& k, int r) {
    double v = 1.0;
    for (int j = 0; j < r; ++j)
        v *= std::pow(2.0 * std::sinh(t[j]), 2.0 * k.ks) *
             std::pow(2.0 * std::sinh(2.0 * t[j]), 2.0 * k.kl);
    for (int p = 1; p < r; ++p)
        for (int q = 0; q < p; ++q)
            v *= std::pow(2.0 * std::sinh(t[p] - t[q]), 2.0 * k.km) *
                 std::pow(2.0 * std::sinh(t[p] + t[q]), 2.0 * k.km);
    return v;
}

struct spatial_grid {
    std::vector<rvec> pts;
    rvec w;
};

// Tensor Gauss-Legendre grid over a box strictly inside the chamber.
inline spatial_grid box_grid(const rvec& lo, const rvec& hi, int panels, int nodes) {
    const int r = int(lo.size());
    const quad1d base = gauss_legendre(nodes);
    std::vector<quad1d> axes(r);
    for (int j = 0; j < r; ++j) {
        quad1d ax;
        for (int p = 0; p < panels; ++p) {
            const double a = lo[j] + (hi[j] - lo[j]) * p / panels;
            const double b = lo[j] + (hi[j] - lo[j]) * (p + 1) / panels;
            const quad1d m = base.mapped(a, b);
            ax.x.insert(ax.x.end(), m.x.begin(), m.x.end());
            ax.w.insert(ax.w.end(), m.w.begin(), m.w.end());
        }
        axes[j] = std::move(ax);
    }
    spatial_grid g;
    std::vector<int> idx(r, 0);
    for (;;) {
        rvec t(r);
        double wt = 1.0;
        for (int j = 0; j < r; ++j) {
            t[j] = axes[j].x[idx[j]];
            wt *= axes[j].w[idx[j]];
        }
        g.pts.push_back(std::move(t));
        g.w.push_back(wt);
        int j = r - 1;
        while (j >= 0 && ++idx[j] == int(axes[j].x.size())) idx[j--] = 0;
        if (j < 0) break;
    }
    return g;
}

// Chamber wedge grid in gap coordinates u_1 = t_1, u_j = t_j - t_{j-1},
// covering (0, U]^r; integrands vanishing toward infinity are truncated.
// Jacobian of the change of variables is 1.
inline spatial_grid wedge_grid(int r, double U, int panels, int nodes) {
    rvec lo(r, 0.0), hi(r, U);
    spatial_grid g = box_grid(lo, hi, panels, nodes);
    for (auto& u : g.pts) {
        rvec t(r);
        double acc = 0.0;
        for (int j = 0; j < r; ++j) {
            acc += u[j];
            t[j] = acc;
        }
        u = std::move(t);
    }
    return g;
}

// Precomputed spatial context: series lattice, per-point monomial bases and
// weighted measure factors, shared by every spectral node.
class transform_context {
  public:
    transform_context(const multiplicity& k, int r, int H, spatial_grid grid)
        : k_(k), r_(r), lat_(r, H), grid_(std::move(grid)), ctrho_(ctilde_at_rho(k, r)) {
        bases_.reserve(grid_.pts.size());
        dw_.resize(grid_.pts.size());
        for (size_t i = 0; i < grid_.pts.size(); ++i) {
            bases_.emplace_back(lat_, grid_.pts[i]);
            dw_[i] = weight_delta(grid_.pts[i], k_, r_) * grid_.w[i];
        }
    }

    const multiplicity& k() const { return k_; }
    int rank() const { return r_; }
    const kappa_lattice& lattice() const { return lat_; }
    double ctrho() const { return ctrho_; }
    const spatial_grid& grid() const { return grid_; }
    const phi_basis& basis(size_t i) const { return bases_[i]; }
    double measure(size_t i) const { return dw_[i]; }
    size_t size() const { return grid_.pts.size(); }

    // Samples f against the weighted measure: fdw_i = f(t_i) delta(t_i) w_i.
    template <class F>
    rvec sample(F&& f) const {
        rvec out(size());
        for (size_t i = 0; i < size(); ++i) out[i] = f(grid_.pts[i]) * dw_[i];
        return out;
    }

  private:
    multiplicity k_;
    int r_;
    kappa_lattice lat_;
    spatial_grid grid_;
    double ctrho_;
    std::vector<phi_basis> bases_;
    rvec dw_;
};

// Forward transform of a sampled function at one spectral parameter:
// F_k f(lambda) = sum_i fdw_i F(lambda; t_i).
inline cplx forward(const transform_context& ctx, const rvec& fdw, const cvec& lam) {
    const hyper_f F(ctx.lattice(), lam, ctx.k(), ctx.ctrho());
    cplx acc = 0.0;
    for (size_t i = 0; i < ctx.size(); ++i) acc += fdw[i] * F.eval(ctx.basis(i));
    return acc;
}

// Forward transform at a spectral node with ndisc discrete coordinates,
// where F must be evaluated by its residual restricted sum.
inline cplx forward_residual(const transform_context& ctx, const rvec& fdw, const cvec& lam,
                             int ndisc) {
    const residual_f F(ctx.lattice(), lam, ndisc, ctx.k());
    cplx acc = 0.0;
    for (size_t i = 0; i < ctx.size(); ++i) acc += fdw[i] * F.eval(ctx.basis(i));
    return acc;
}

// ---------------------------------------------------------------------------
// Spectral quadrature.

struct spectral_grid {
    double Lam = 12.0;  // imaginary window half-width per axis
    int panels = 5;
    int nodes = 10;

    quad1d axis() const {
        const quad1d base = gauss_legendre(nodes);
        quad1d ax;
        for (int p = 0; p < panels; ++p) {
            const quad1d m = base.mapped(Lam * p / panels, Lam * (p + 1) / panels);
            ax.x.insert(ax.x.end(), m.x.begin(), m.x.end());
            ax.w.insert(ax.w.end(), m.w.begin(), m.w.end());
        }
        return ax;
    }
};

namespace detail {

// Ordered index tuples i_0 < i_1 < ... over one positive axis: the spectral
// chamber of the relevant dimension.  visit(idx) is called for each tuple.
template <class Fn>
void chamber_tuples(int dim, int n, Fn&& visit) {
    if (dim == 0) {
        std::vector<int> idx;
        visit(idx);
        return;
    }
    std::vector<int> idx(dim);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        for (int i = start; i < n; ++i) {
            idx[pos] = i;
            if (pos + 1 == dim)
                visit(idx);
            else
                rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

}  // namespace detail

// Reciprocal density of a block set at a purely tempered argument offset:
// crho_set^2 / (ctilde_set(lam) ctilde_set(conj-flip lam)), the positive
// weight of the corresponding spectral component.
inline double inv_density_block(const cvec& lam, const multiplicity& k, int r,
                                const cfactor_set& set, double crho_set) {
    cvec flip(r);
    for (int j = 0; j < r; ++j) flip[j] = std::conj(lam[j]);
    const cplx a = ctilde(lam, k, r, set);
    const cplx b = ctilde(flip, k, r, set);
    return (crho_set * crho_set / (a * b)).real();
}

// One spectral node of the assembled measure quadrature.
struct measure_node {
    cvec lam;       // full spectral parameter (xi with i y filled in)
    int ndisc = 0;  // discrete coordinates (0 = continuum, r = atom)
    double weight = 0.0;  // quadrature weight including densities and 2 pi powers
};

// All measure nodes for the component list of (k, r) at the given grid.
inline std::vector<measure_node> measure_nodes(const multiplicity& k, int r,
                                               const spectral_grid& sg) {
    std::vector<measure_node> nodes;
    const quad1d ax = sg.axis();
    const int n = int(ax.x.size());
    for (const auto& comp : assemble_measure(k, r)) {
        const int nd = comp.ndisc;
        const int cdim = r - nd;
        const double twopi = std::pow(2.0 * pi, -double(cdim));
        if (cdim == 0) {
            measure_node m;
            m.lam.assign(comp.xi.begin(), comp.xi.end());
            m.ndisc = nd;
            m.weight = comp.mass;
            nodes.push_back(std::move(m));
            continue;
        }
        const cfactor_set blocks =
            (nd == 0) ? cset_full(r) : cset_theta_comp(r, nd);
        const double crho_set = ctilde_at_rho(k, r, blocks);
        detail::chamber_tuples(cdim, n, [&](const std::vector<int>& idx) {
            measure_node m;
            m.lam.resize(r);
            for (int j = 0; j < nd; ++j) m.lam[j] = comp.xi[j];
            double wt = comp.mass * twopi;
            for (int j = 0; j < cdim; ++j) {
                m.lam[nd + j] = cplx(0.0, ax.x[idx[j]]);
                wt *= ax.w[idx[j]];
            }
            m.ndisc = nd;
            m.weight = wt * inv_density_block(m.lam, k, r, blocks, crho_set);
            nodes.push_back(std::move(m));
        });
    }
    return nodes;
}

// ---------------------------------------------------------------------------
// Plancherel identity and inversion.

struct plancherel_report {
    double lhs = 0.0;
    double rhs = 0.0;
    rvec by_ndisc;  // rhs split by number of discrete coordinates
    double residual = 0.0;
};

// LHS = chamber integral of f^2 delta; RHS = measure quadrature of
// |F_k f|^2 over all spectral components.
template <class F>
plancherel_report plancherel_check(const transform_context& ctx, F&& f,
                                   const spectral_grid& sg) {
    const int r = ctx.rank();
    const rvec fdw = ctx.sample(f);
    plancherel_report rep;
    for (size_t i = 0; i < ctx.size(); ++i)
        rep.lhs += fdw[i] * f(ctx.grid().pts[i]);
    rep.by_ndisc.assign(r + 1, 0.0);
    const std::vector<measure_node> nodes = measure_nodes(ctx.k(), r, sg);
    rvec contrib(nodes.size());
    parallel_for(int(nodes.size()), [&](int i) {
        const measure_node& m = nodes[i];
        const cplx phi = (m.ndisc == 0) ? forward(ctx, fdw, m.lam)
                                        : forward_residual(ctx, fdw, m.lam, m.ndisc);
        contrib[i] = m.weight * std::norm(phi);
    });
    for (size_t i = 0; i < nodes.size(); ++i) {
        rep.by_ndisc[nodes[i].ndisc] += contrib[i];
        rep.rhs += contrib[i];
    }
    rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.lhs), 1e-300);
    return rep;
}

// Final-form inversion of a spectral function phi at the points xs:
// f(x) = sum over components of the measure quadrature of phi * F(.; x).
template <class Phi>
cvec inverse_final_form(const transform_context& ctx, Phi&& phi,
                        const std::vector<rvec>& xs, const spectral_grid& sg) {
    const int r = ctx.rank();
    std::vector<phi_basis> xb;
    xb.reserve(xs.size());
    for (const auto& x : xs) xb.emplace_back(ctx.lattice(), x);
    const std::vector<measure_node> nodes = measure_nodes(ctx.k(), r, sg);
    std::vector<cvec> parts(nodes.size());
    parallel_for(int(nodes.size()), [&](int i) {
        const measure_node& m = nodes[i];
        cvec row(xs.size());
        const cplx pv = phi(m.lam, m.ndisc);
        if (m.ndisc == 0) {
            const hyper_f F(ctx.lattice(), m.lam, ctx.k(), ctx.ctrho());
            for (size_t j = 0; j < xs.size(); ++j) row[j] = m.weight * pv * F.eval(xb[j]);
        } else {
            const residual_f F(ctx.lattice(), m.lam, m.ndisc, ctx.k());
            for (size_t j = 0; j < xs.size(); ++j) row[j] = m.weight * pv * F.eval(xb[j]);
        }
        parts[i] = std::move(row);
    });
    cvec out(xs.size(), 0.0);
    for (const auto& row : parts)
        for (size_t j = 0; j < xs.size(); ++j) out[j] += row[j];
    return out;
}

// Round trip: forward transform of f on the measure nodes, then final-form
// inversion back onto the points xs.  Shares one F object per node.
template <class F>
cvec round_trip(const transform_context& ctx, F&& f, const std::vector<rvec>& xs,
                const spectral_grid& sg) {
    const int r = ctx.rank();
    const rvec fdw = ctx.sample(f);
    std::vector<phi_basis> xb;
    xb.reserve(xs.size());
    for (const auto& x : xs) xb.emplace_back(ctx.lattice(), x);
    const std::vector<measure_node> nodes = measure_nodes(ctx.k(), r, sg);
    std::vector<cvec> parts(nodes.size());
    parallel_for(int(nodes.size()), [&](int i) {
        const measure_node& m = nodes[i];
        cvec row(xs.size(), 0.0);
        auto both = [&](const weyl_sum_f& fn) {
            cplx phi = 0.0;
            for (size_t p = 0; p < ctx.size(); ++p) phi += fdw[p] * fn.eval(ctx.basis(p));
            for (size_t j = 0; j < xs.size(); ++j) row[j] = m.weight * phi * fn.eval(xb[j]);
        };
        if (m.ndisc == 0)
            both(hyper_f(ctx.lattice(), m.lam, ctx.k(), ctx.ctrho()));
        else
            both(residual_f(ctx.lattice(), m.lam, m.ndisc, ctx.k()));
        parts[i] = std::move(row);
    });
    cvec out(xs.size(), 0.0);
    for (const auto& row : parts)
        for (size_t j = 0; j < xs.size(); ++j) out[j] += row[j];
    return out;
}

// ---------------------------------------------------------------------------
// First-form inversion on a shifted contour.

// Real zeros of the reflected c-function along one coordinate; the contour
// shift must stay strictly left of all negative members.
inline double eta_head(const multiplicity& k) {
    return std::min({0.0, k.ks + 2.0 * k.kl, k.ks + 1.0});
}

// Anti-dominant default shift left of every reflected zero, staggered to
// stay clear of pair sheets, nudged off series resonance planes.
inline rvec default_eta(const multiplicity& k, int r, int H = 24) {
    const kappa_lattice lat(r, std::min(H, 16));
    rvec eta(r);
    double base = eta_head(k) - 0.45;
    for (int attempt = 0; attempt < 40; ++attempt) {
        for (int j = 0; j < r; ++j) eta[j] = base - 0.13 * j;
        double worst = 1e300;
        for (int id = 1; id < lat.size(); ++id) {
            const auto c = lat.c_of(id);
            double re = 0.0;
            for (int j = 0; j < r; ++j) re += (eta[j] - c[j]) * c[j];
            worst = std::min(worst, std::abs(re));
        }
        if (worst > 0.05) return eta;
        base -= 0.071;
    }
    throw contour_through_pole("default_eta: no resonance-free shift found");
}

// J phi(x) = (2 pi)^{-r} integral over eta + i R^r of
// phi(lambda) Phi(lambda; x) / c(-lambda) dlambda.
template <class Phi>
cvec inverse_first_form(const transform_context& ctx, Phi&& phi, const std::vector<rvec>& xs,
                        const rvec& eta, const spectral_grid& sg) {
    const int r = ctx.rank();
    const multiplicity& k = ctx.k();
    // Contour admissibility: each coordinate clear of reflected-zero
    // lattices, pair sheets, and series resonance planes.
    for (int j = 0; j < r; ++j) {
        if (!detail::single_block_zeros(k, eta[j] - 0.019, eta[j] + 0.019).empty())
            throw contour_through_pole("contour passes a c-function zero");
        require(eta[j] < 1e-9, "inverse_first_form: eta must be anti-dominant");
    }
    {
        const kappa_lattice& lat = ctx.lattice();
        for (int id = 1; id < lat.size(); ++id) {
            const auto c = lat.c_of(id);
            double re = 0.0;
            for (int j = 0; j < r; ++j) re += (eta[j] - c[j]) * c[j];
            if (std::abs(re) < 1e-6)
                throw contour_through_pole("contour meets a series resonance plane");
        }
    }
    std::vector<phi_basis> xb;
    xb.reserve(xs.size());
    for (const auto& x : xs) xb.emplace_back(ctx.lattice(), x);

    // Full tensor grid over [-Lam, Lam]^r.
    const quad1d half = sg.axis();
    quad1d ax;
    for (int i = int(half.x.size()) - 1; i >= 0; --i) {
        ax.x.push_back(-half.x[i]);
        ax.w.push_back(half.w[i]);
    }
    ax.x.insert(ax.x.end(), half.x.begin(), half.x.end());
    ax.w.insert(ax.w.end(), half.w.begin(), half.w.end());

    const int n = int(ax.x.size());
    int total = 1;
    for (int j = 0; j < r; ++j) total *= n;
    const double norm = std::pow(2.0 * pi, -double(r));
    const double crho = ctx.ctrho();

    std::vector<cvec> parts(total);
    parallel_for(total, [&](int flat) {
        cvec lam(r);
        cvec neg(r);
        double wt = norm;
        int rem = flat;
        for (int j = 0; j < r; ++j) {
            const int i = rem % n;
            rem /= n;
            lam[j] = cplx(eta[j], ax.x[i]);
            neg[j] = -lam[j];
            wt *= ax.w[i];
        }
        const cplx cinv = crho / ctilde(neg, k, r);
        const hc_table tab(ctx.lattice(), lam, k);
        cvec row(xs.size());
        const cplx base = phi(lam) * cinv * wt;
        for (size_t j = 0; j < xs.size(); ++j) row[j] = base * tab.phi(xb[j]);
        parts[flat] = std::move(row);
    });
    cvec out(xs.size(), 0.0);
    for (const auto& row : parts)
        for (size_t j = 0; j < xs.size(); ++j) out[j] += row[j];
    return out;
}

// ---------------------------------------------------------------------------
// Discrete L^2 pairings.

// Chamber integral of F_res(xi1) F_res(xi2) delta over a wedge grid: the
// inner product of two atoms (xi1 = xi2 gives the squared norm, equal to
// 1/mass by the Plancherel theorem).
inline double l2_pairing(const multiplicity& k, int r, int H, const rvec& xi1, const rvec& xi2,
                         double U = 14.0, int panels = 10, int nodes = 12) {
    const kappa_lattice lat(r, H);
    cvec l1(xi1.begin(), xi1.end()), l2(xi2.begin(), xi2.end());
    const residual_f F1(lat, l1, r, k);
    const residual_f F2(lat, l2, r, k);
    const spatial_grid g = wedge_grid(r, U, panels, nodes);
    double acc = 0.0;
    for (size_t i = 0; i < g.pts.size(); ++i) {
        const phi_basis B(lat, g.pts[i]);
        const double v1 = F1.eval(B).real();
        const double v2 = F2.eval(B).real();
        acc += v1 * v2 * weight_delta(g.pts[i], k, r) * g.w[i];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Paley-Wiener probe.

// max over the sampled window {eta + i y : eta in shifts, 0 <= y <= Lam} of
// (1 + |lambda|)^n e^{-type * |Re lambda|} |F_k f(lambda)| (rank 1).
inline double pw_statistic(const transform_context& ctx, const rvec& fdw, double type,
                           int n, double Lam, const rvec& shifts, int samples = 160) {
    require(ctx.rank() == 1, "pw_statistic: rank-1 probe");
    double best = 0.0;
    for (double eta : shifts) {
        for (int i = 0; i <= samples; ++i) {
            const double y = Lam * i / samples;
            const cvec lam{cplx(eta, y)};
            double a;
            try {
                a = std::abs(forward(ctx, fdw, lam));
            } catch (const degenerate_point&) {
                continue;  // isolated degenerate sample (e.g. lambda = 0)
            }
            const double norm = std::hypot(eta, y);
            const double stat = std::pow(1.0 + norm, n) * std::exp(-type * std::abs(eta)) * a;
            best = std::max(best, stat);
        }
    }
    return best;
}

}  // namespace bchf
