#pragma once
// Harish-Chandra c-function for BC_r, built from gamma-quotient blocks.
// Every block carries a regularization direction so that degenerate spectral
// parameters can be evaluated as joint limits in (lambda, k).

#include <array>
#include <stdexcept>
#include <vector>

#include "gamma_product.hpp"
#include "types.hpp"

namespace bchf {

// Selects which blocks of the c-function product are included:
// per-coordinate blocks and, for each pair q<p, the difference and sum blocks.
struct cfactor_set {
    int r = 0;
    std::array<char, max_rank> single{};
    std::array<char, max_rank*(max_rank - 1) / 2> diff{};
    std::array<char, max_rank*(max_rank - 1) / 2> sum{};
};

constexpr int pair_index(int q, int p) { return p * (p - 1) / 2 + q; }  // 0 <= q < p

inline cfactor_set cset_empty(int r) {
    cfactor_set s;
    s.r = r;
    return s;
}

inline cfactor_set cset_full(int r) {
    cfactor_set s = cset_empty(r);
    for (int j = 0; j < r; ++j) s.single[j] = 1;
    for (int p = 1; p < r; ++p)
        for (int q = 0; q < p; ++q) s.diff[pair_index(q, p)] = s.sum[pair_index(q, p)] = 1;
    return s;
}

// Blocks of the rank-i facet subsystem: coordinates 0..i-1 and pairs inside them.
inline cfactor_set cset_theta(int r, int i) {
    cfactor_set s = cset_empty(r);
    for (int j = 0; j < i; ++j) s.single[j] = 1;
    for (int p = 1; p < i; ++p)
        for (int q = 0; q < p; ++q) s.diff[pair_index(q, p)] = s.sum[pair_index(q, p)] = 1;
    return s;
}

inline cfactor_set cset_complement(const cfactor_set& a) {
    cfactor_set s = cset_empty(a.r);
    for (int j = 0; j < a.r; ++j) s.single[j] = !a.single[j];
    for (int p = 1; p < a.r; ++p)
        for (int q = 0; q < p; ++q) {
            int id = pair_index(q, p);
            s.diff[id] = !a.diff[id];
            s.sum[id] = !a.sum[id];
        }
    return s;
}

inline cfactor_set cset_theta_comp(int r, int i) { return cset_complement(cset_theta(r, i)); }

// All difference pairs (the part regular along purely imaginary directions).
inline cfactor_set cset_xi(int r) {
    cfactor_set s = cset_empty(r);
    for (int p = 1; p < r; ++p)
        for (int q = 0; q < p; ++q) s.diff[pair_index(q, p)] = 1;
    return s;
}

inline cfactor_set cset_xi_comp(int r) { return cset_complement(cset_xi(r)); }

// First-order direction of approach in (lambda, k) used to resolve pole/pole
// quotients.  dlam[j] is the lambda_j component; dks/dkm/dkl the k components.
struct reg_direction {
    std::array<double, max_rank> dlam{};
    double dks = 0, dkm = 0, dkl = 0;
};

// Canonical joint limit: k moves by (1,1,1) and lambda rides along rho(k),
// restricted to the first ncoord coordinates (the discrete ones).
inline reg_direction joint_direction(int r, int ncoord) {
    reg_direction d;
    d.dks = d.dkm = d.dkl = 1.0;
    for (int j = 0; j < ncoord && j < r; ++j) d.dlam[j] = 3.0 + 2.0 * j;
    (void)r;
    return d;
}

inline reg_direction joint_direction(int r) { return joint_direction(r, r); }

// Applies a Weyl transformation to the lambda-part of a direction:
// if the evaluation point is w.lambda, the transported direction is w.dlam.
template <class WElem>
inline reg_direction transport_direction(const reg_direction& d, const WElem& w, int r) {
    reg_direction out = d;
    for (int j = 0; j < r; ++j) out.dlam[j] = w.sign[j] * d.dlam[w.perm[j]];
    return out;
}

// Accumulates the selected gamma-quotient blocks of ctilde(lambda, k) into gp.
inline void accumulate_ctilde(gamma_product& gp, const cvec& lam, const multiplicity& k,
                              int r, const cfactor_set& set, const reg_direction& dir) {
    for (int j = 0; j < r; ++j) {
        if (!set.single[j]) continue;
        const cplx l = lam[j];
        const double dl = dir.dlam[j];
        gp.mul_const(std::pow(2.0, -k.ks));
        gp.mul_gamma(0.5 * l, 0.5 * dl);
        gp.mul_gamma(0.5 * (l + 1.0), 0.5 * dl);
        gp.div_gamma(0.5 * (l + k.ks + 1.0), 0.5 * (dl + dir.dks));
        gp.div_gamma(0.5 * (l + k.ks + 2.0 * k.kl), 0.5 * (dl + dir.dks + 2.0 * dir.dkl));
    }
    for (int p = 1; p < r; ++p)
        for (int q = 0; q < p; ++q) {
            const int id = pair_index(q, p);
            if (set.diff[id]) {
                const cplx z = 0.5 * (lam[p] - lam[q]);
                const double dz = 0.5 * (dir.dlam[p] - dir.dlam[q]);
                gp.mul_gamma(z, dz);
                gp.div_gamma(z + k.km, dz + dir.dkm);
            }
            if (set.sum[id]) {
                const cplx z = 0.5 * (lam[p] + lam[q]);
                const double dz = 0.5 * (dir.dlam[p] + dir.dlam[q]);
                gp.mul_gamma(z, dz);
                gp.div_gamma(z + k.km, dz + dir.dkm);
            }
        }
}

// Limit value of the selected ctilde blocks along dir.  Exact at regular
// points; at pole/pole configurations returns the leading-order quotient.
inline cplx ctilde_limit(const cvec& lam, const multiplicity& k, int r,
                         const cfactor_set& set, const reg_direction& dir) {
    gamma_product gp;
    accumulate_ctilde(gp, lam, k, r, set, dir);
    return gp.limit();
}

// Regular-point evaluation; throws if a gamma pole is met with no direction.
inline cplx ctilde(const cvec& lam, const multiplicity& k, int r, const cfactor_set& set) {
    return ctilde_limit(lam, k, r, set, reg_direction{});
}

inline cplx ctilde(const cvec& lam, const multiplicity& k, int r) {
    return ctilde(lam, k, r, cset_full(r));
}

// ctilde at lambda = rho(k) along the joint direction.  Real by construction.
inline double ctilde_at_rho(const multiplicity& k, int r, const cfactor_set& set) {
    const rvec rho = k.rho(r);
    cvec lam(r);
    for (int j = 0; j < r; ++j) lam[j] = rho[j];
    const cplx v = ctilde_limit(lam, k, r, set, joint_direction(r));
    return v.real();
}

inline double ctilde_at_rho(const multiplicity& k, int r) {
    return ctilde_at_rho(k, r, cset_full(r));
}

// Normalized c-function c(lambda) = ctilde(lambda)/ctilde(rho).
class cfunction {
  public:
    cfunction(const multiplicity& k, int r)
        : k_(k), r_(r), set_(cset_full(r)), ctrho_(ctilde_at_rho(k, r)) {
        require(std::isfinite(ctrho_) && ctrho_ != 0.0, "c-function normalization failed");
    }

    cplx operator()(const cvec& lam) const { return ctilde(lam, k_, r_, set_) / ctrho_; }

    // Limit along dir of c(lambda + eps*dlam, k + eps*dk); the normalization
    // stays at the unperturbed k.
    cplx limit(const cvec& lam, const reg_direction& dir) const {
        return ctilde_limit(lam, k_, r_, set_, dir) / ctrho_;
    }

    // 1/(c(lambda) c(-lambda)): the tempered Plancherel density factor.
    cplx inv_density(const cvec& lam) const {
        cvec neg(r_);
        for (int j = 0; j < r_; ++j) neg[j] = -lam[j];
        return (ctrho_ * ctrho_) / (ctilde(lam, k_, r_, set_) * ctilde(neg, k_, r_, set_));
    }

    double at_rho() const { return ctrho_; }
    int rank() const { return r_; }
    const multiplicity& mult() const { return k_; }

  private:
    multiplicity k_;
    int r_;
    cfactor_set set_;
    double ctrho_;
};

// sigma-limit of a normalized block set: limit of ctilde_set along dir,
// divided by ctilde_set at rho (itself a joint limit when degenerate).
inline cplx sigma_limit(const cvec& lam, const multiplicity& k, int r,
                        const cfactor_set& set, const reg_direction& dir) {
    return ctilde_limit(lam, k, r, set, dir) / ctilde_at_rho(k, r, set);
}

}  // namespace bchf
