#pragma once

#include <cstdint>

#include "types.hpp"
#include "weyl.hpp"

namespace bchf {

// Lattice of the series exponents: kappa = sum_j c_j beta_j restricted to
// the positive cone Q+, encoded by n-coordinates (coefficients in the
// simple-root basis), n_m = c_r + c_{r-1} + ... + c_{r-m+1} >= 0.
// Height = sum_m n_m. Dense simplex storage over {sum n_m <= H}.
class kappa_lattice {
 public:
  kappa_lattice(int r, int H) : r_(r), H_(H) {
    int box = 1;
    for (int m = 0; m < r; ++m) box *= (H + 1);
    id_of_.assign(box, -1);
    // enumerate by ascending height, then lexicographic
    for (int h = 0; h <= H; ++h) {
      std::array<int, max_rank> n{};
      enumerate(h, 0, h, n);
    }
  }

  int size() const { return int(n_of_.size()); }
  int rank() const { return r_; }
  int height_cap() const { return H_; }

  int id(const std::array<int, max_rank>& n) const {
    int key = 0;
    for (int m = 0; m < r_; ++m) {
      if (n[m] < 0 || n[m] > H_) return -1;
      key = key * (H_ + 1) + n[m];
    }
    return id_of_[key];
  }

  const std::array<int, max_rank>& n_of(int id) const { return n_of_[id]; }

  int height_of(int id) const {
    const auto& n = n_of_[id];
    int s = 0;
    for (int m = 0; m < r_; ++m) s += n[m];
    return s;
  }

  // c-coordinates of the lattice point: c_j = n_{r-j+1} - n_{r-j} (1-based
  // m, n_0 = 0); j, m zero-based in code.
  std::array<int, max_rank> c_of(int id) const {
    const auto& n = n_of_[id];
    std::array<int, max_rank> c{};
    for (int j = 0; j < r_; ++j) {
      int m_hi = r_ - 1 - j;          // 0-based index of n_{r+1-j}
      int hi = n[m_hi];
      int lo = (m_hi >= 1) ? n[m_hi - 1] : 0;
      c[j] = hi - lo;
    }
    return c;
  }

  // n-coordinate displacement of a c-coordinate step.
  std::array<int, max_rank> n_step(const std::array<int, max_rank>& cstep) const {
    std::array<int, max_rank> dn{};
    for (int m = 1; m <= r_; ++m) {
      int s = 0;
      for (int j = r_ - m; j < r_; ++j) s += cstep[j];
      dn[m - 1] = s;
    }
    return dn;
  }

 private:
  void enumerate(int h, int m, int left, std::array<int, max_rank>& n) {
    if (m == r_ - 1) {
      n[m] = left;
      int key = 0;
      for (int q = 0; q < r_; ++q) key = key * (H_ + 1) + n[q];
      id_of_[key] = int(n_of_.size());
      n_of_.push_back(n);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[m] = v;
      enumerate(h, m + 1, left - v, n);
    }
  }

  int r_, H_;
  std::vector<int32_t> id_of_;
  std::vector<std::array<int, max_rank>> n_of_;
};

struct resonance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monomial table prod_m g_m^{n_m} for a fixed spatial point, shared by every
// series evaluated on that point.  g_m = exp(-alpha_m(t)) for the simple roots:
// alpha_m = beta_{r+1-m} - beta_{r-m} (m < r), alpha_r = beta_1, beta_j(t) = 2 t_j.
class phi_basis {
 public:
  phi_basis(const kappa_lattice& lat, const rvec& t) : t_(t) {
    const int r = lat.rank();
    const int H = lat.height_cap();
    std::array<std::vector<double>, max_rank> pw;
    for (int m = 1; m <= r; ++m) {
      double g;
      if (m < r)
        g = std::exp(-2.0 * (t[r - m] - t[r - m - 1]));
      else
        g = std::exp(-2.0 * t[0]);
      auto& col = pw[m - 1];
      col.resize(H + 1);
      col[0] = 1.0;
      for (int p = 1; p <= H; ++p) col[p] = col[p - 1] * g;
    }
    mono_.resize(lat.size());
    for (int id = 0; id < lat.size(); ++id) {
      const auto& n = lat.n_of(id);
      double w = 1.0;
      for (int m = 0; m < r; ++m) w *= pw[m][n[m]];
      mono_[id] = w;
    }
  }

  const std::vector<double>& monomials() const { return mono_; }
  const rvec& t() const { return t_; }

 private:
  rvec t_;
  std::vector<double> mono_;
};

// Series coefficients a_kappa(lambda) of the exponential expansion of Phi,
// from the rank-r recursion
//   <2 lambda - kappa, kappa> a_kappa =
//     2 sum_alpha k_alpha sum_{n>=1} <lambda - rho - kappa + n alpha, alpha>
//       a_{kappa - n alpha},
// with the inner geometric sums carried by prefix rays P, Q along each root.
// All pairings are evaluated in lambda coordinates.
class hc_table {
 public:
  hc_table(const kappa_lattice& lat, const cvec& lam, const multiplicity& k)
      : lat_(lat), lam_(lam), rho_(k.rho(lat.rank())) {
    const int r = lat.rank();
    const auto roots = positive_roots(r, k);
    const rvec& rho = rho_;
    const int N = lat.size();
    a_.assign(N, 0.0);
    a_[0] = 1.0;
    min_denom_ = 1e300;

    struct ray {
      std::array<int, max_rank> dn{};
      std::array<int, max_rank> av{};
      double kval = 0.0;
      int norm2 = 0;
      cvec P, Q;
    };
    std::vector<ray> rays(roots.size());
    for (size_t t = 0; t < roots.size(); ++t) {
      std::array<int, max_rank> cstep{};
      for (int j = 0; j < r; ++j) cstep[j] = roots[t].av[j] / 2;
      rays[t].dn = lat.n_step(cstep);
      rays[t].av = roots[t].av;
      rays[t].kval = roots[t].k;
      rays[t].norm2 = roots[t].norm2;
      rays[t].P.assign(N, 0.0);
      rays[t].Q.assign(N, 0.0);
    }

    double scale = 1.0;
    for (int j = 0; j < r; ++j) scale = std::max(scale, std::norm(lam[j]));

    for (int id = 1; id < N; ++id) {
      const auto& n = lat.n_of(id);
      const auto c = lat.c_of(id);
      cplx denom = 0.0;
      for (int j = 0; j < r; ++j) denom += (lam_[j] - double(c[j])) * double(c[j]);
      denom *= 4.0;
      cplx rhs = 0.0;
      for (auto& ry : rays) {
        std::array<int, max_rank> prev{};
        for (int m = 0; m < r; ++m) prev[m] = n[m] - ry.dn[m];
        int pid = lat.id(prev);
        if (pid < 0) continue;
        cplx Pv = a_[pid] + ry.P[pid];
        cplx Qv = a_[pid] + ry.Q[pid] + ry.P[pid];
        ry.P[id] = Pv;
        ry.Q[id] = Qv;
        if (ry.kval == 0.0) continue;
        cplx d0 = 0.0;
        for (int j = 0; j < r; ++j)
          d0 += (lam_[j] - rho[j] - 2.0 * double(c[j])) * double(ry.av[j]);
        rhs += ry.kval * (d0 * Pv + double(ry.norm2) * Qv);
      }
      double ad = std::abs(denom);
      min_denom_ = std::min(min_denom_, ad);
      if (ad < 1e-12 * scale)
        throw resonance_error("series recursion hit a resonant denominator");
      a_[id] = 2.0 * rhs / denom;
    }
  }

  const cvec& coeffs() const { return a_; }
  double min_denom() const { return min_denom_; }

  // Phi(lambda; t) = e^{(lambda-rho)(t)} sum_kappa a_kappa e^{-kappa(t)},
  // with e^{-kappa(t)} = prod_m g_m^{n_m}, g_m the simple-root exponentials.
  cplx phi(const rvec& t) const {
    const rvec& rho = rho_;
    const int r = lat_.rank();
    const int H = lat_.height_cap();
    // g_m = exp(-alpha_m(t)): alpha_m = beta_{r+1-m} - beta_{r-m} (m < r),
    // alpha_r = beta_1; beta_j(t) = 2 t_j.
    std::array<std::vector<double>, max_rank> pw;
    for (int m = 1; m <= r; ++m) {
      double g;
      if (m < r)
        g = std::exp(-2.0 * (t[r - m] - t[r - m - 1]));
      else
        g = std::exp(-2.0 * t[0]);
      auto& col = pw[m - 1];
      col.resize(H + 1);
      col[0] = 1.0;
      for (int p = 1; p <= H; ++p) col[p] = col[p - 1] * g;
    }
    cplx s = 0.0;
    for (int id = 0; id < lat_.size(); ++id) {
      const auto& n = lat_.n_of(id);
      double w = 1.0;
      for (int m = 0; m < r; ++m) w *= pw[m][n[m]];
      s += a_[id] * w;
    }
    cplx ex = 0.0;
    for (int j = 0; j < r; ++j) ex += (lam_[j] - rho[j]) * t[j];
    return std::exp(ex) * s;
  }

  // Same sum against a precomputed monomial table (must come from lat_).
  cplx phi(const phi_basis& B) const {
    const std::vector<double>& M = B.monomials();
    cplx s = 0.0;
    for (int id = 0; id < lat_.size(); ++id) s += a_[id] * M[id];
    cplx ex = 0.0;
    for (int j = 0; j < lat_.rank(); ++j) ex += (lam_[j] - rho_[j]) * B.t()[j];
    return std::exp(ex) * s;
  }

  // Absolute contribution of the top height shells: a cheap truncation gauge.
  double tail_abs(const phi_basis& B, int shells = 2) const {
    const std::vector<double>& M = B.monomials();
    const int H = lat_.height_cap();
    double s = 0.0;
    for (int id = 0; id < lat_.size(); ++id)
      if (lat_.height_of(id) > H - shells) s += std::abs(a_[id]) * M[id];
    cplx ex = 0.0;
    for (int j = 0; j < lat_.rank(); ++j) ex += (lam_[j] - rho_[j]) * B.t()[j];
    return std::abs(std::exp(ex)) * s;
  }

  const cvec& lambda() const { return lam_; }

 private:
  const kappa_lattice& lat_;
  cvec lam_;
  rvec rho_;
  cvec a_;
  double min_denom_;
};

}  // namespace bchf
