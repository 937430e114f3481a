#pragma once
// Hypergeometric function F(lambda, k; x) as a c-weighted Weyl sum of
// exponential series, plus the residual evaluation used at discrete and
// partially discrete spectral parameters where the plain sum degenerates.

#include <stdexcept>
#include <utility>
#include <vector>

#include "cfunction.hpp"
#include "series.hpp"
#include "weyl.hpp"

namespace bchf {

// Raised when a requested parameter sits on a c-function singularity that the
// plain Weyl sum cannot represent; such points belong to the residual path.
struct degenerate_point : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Common evaluator: a finite sum of weighted series sharing one lattice.
class weyl_sum_f {
  public:
    cplx eval(const phi_basis& B) const {
        cplx s = 0.0;
        for (const auto& t : terms_) s += t.first * t.second.phi(B);
        return s;
    }
    cplx eval(const rvec& t) const { return eval(phi_basis(lattice(), t)); }

    double tail_abs(const phi_basis& B, int shells = 2) const {
        double s = 0.0;
        for (const auto& t : terms_) s += std::abs(t.first) * t.second.tail_abs(B, shells);
        return s;
    }

    int term_count() const { return int(terms_.size()); }
    const kappa_lattice& lattice() const { return *lat_; }

  protected:
    explicit weyl_sum_f(const kappa_lattice& lat) : lat_(&lat) {}
    const kappa_lattice* lat_;
    std::vector<std::pair<cplx, hc_table>> terms_;
};

// F(lambda; x) = (1/ctilde(rho)) sum_{w in W} ctilde(w lambda) Phi(w lambda; x)
// for lambda with all Weyl images regular.  Terms with vanishing weight are
// dropped; a divergent weight means the point is degenerate.
class hyper_f : public weyl_sum_f {
  public:
    hyper_f(const kappa_lattice& lat, const cvec& lam, const multiplicity& k,
            double ctrho = 0.0)
        : weyl_sum_f(lat) {
        const int r = lat.rank();
        if (ctrho == 0.0) ctrho = ctilde_at_rho(k, r);
        const cfactor_set set = cset_full(r);
        const auto W = weyl_group(r);
        terms_.reserve(W.size());
        cvec wl(r);
        for (const auto& w : W) {
            for (int j = 0; j < r; ++j) wl[j] = double(w.sign[j]) * lam[w.perm[j]];
            gamma_product gp;
            accumulate_ctilde(gp, wl, k, r, set, reg_direction{});
            if (gp.vanishes()) continue;
            if (gp.diverges() || gp.ambiguous())
                throw degenerate_point("spectral parameter requires residual evaluation");
            terms_.emplace_back(gp.limit() / ctrho, hc_table(lat, wl, k));
        }
    }
};

// F at a point of the rank-ndisc discrete spectrum: the first ndisc
// coordinates hold the discrete part, the rest are generic (imaginary).
// Restricted sum over sign flips of the continuous block,
//   F = sum_{w} sigma(c_comp(w lambda)) sum_{s in S_r} c_xi(s w lambda) Phi(s w lambda; x),
// where sigma is the joint limit along the multiplicity deformation and
// c_xi collects the difference-pair blocks (normalized at rho).
class residual_f : public weyl_sum_f {
  public:
    residual_f(const kappa_lattice& lat, const cvec& lam, int ndisc, const multiplicity& k)
        : weyl_sum_f(lat) {
        const int r = lat.rank();
        const cfactor_set xi = cset_xi(r);
        const cfactor_set xicomp = cset_xi_comp(r);
        const reg_direction dir = joint_direction(r, ndisc);
        const double ctrho_xi = ctilde_at_rho(k, r, xi);
        cvec wl(r), mu(r);
        for (const auto& w : sign_flips_above(r, ndisc)) {
            for (int j = 0; j < r; ++j) wl[j] = double(w.sign[j]) * lam[w.perm[j]];
            const cplx sig = sigma_limit(wl, k, r, xicomp, dir);
            if (sig == 0.0) continue;
            for (const auto& s : permutations_only(r)) {
                for (int j = 0; j < r; ++j) mu[j] = wl[s.perm[j]];
                gamma_product gp;
                accumulate_ctilde(gp, mu, k, r, xi, reg_direction{});
                if (gp.vanishes()) continue;
                require(!gp.diverges() && !gp.ambiguous(),
                        "difference-pair block singular at spectral point");
                terms_.emplace_back(sig * gp.limit() / ctrho_xi, hc_table(lat, mu, k));
            }
        }
    }
};

}  // namespace bchf
