#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bchf {

using cplx = std::complex<double>;
using rvec = std::vector<double>;
using cvec = std::vector<cplx>;

inline constexpr int max_rank = 3;
inline constexpr double pi = 3.14159265358979323846;

// Multiplicity triple (short, medium, long) for the BC_r root system.
// Signed values are allowed; alpha > -1 and km >= 0 delimit the regime
// the spectral machinery is valid in.
struct multiplicity {
  double ks = 0.0;
  double km = 0.0;
  double kl = 0.0;

  double alpha() const { return ks + kl - 0.5; }
  double beta() const { return kl - 0.5; }

  // Half sum of positive roots with multiplicities, in lambda coordinates:
  // rho_j = ks + 2 kl + 2 (j-1) km, 1-based j.
  rvec rho(int r) const {
    rvec v(r);
    for (int j = 0; j < r; ++j) v[j] = ks + 2.0 * kl + 2.0 * j * km;
    return v;
  }

  // Dual parameter set: preserves alpha, flips the sign of beta.
  multiplicity dual() const { return {ks + 2.0 * kl - 1.0, km, 1.0 - kl}; }

  bool in_valid_regime() const { return alpha() > -1.0 && km >= 0.0; }
};

// One positive root of BC_r, stored by its pairing vector in lambda
// coordinates: <v, root> = sum_j v_j av_j for v in lambda coordinates.
// av entries are +-2 (short/medium) or +-4 (long); the lattice step of the
// root is av/2 in c-coordinates.
struct posroot {
  std::array<int, max_rank> av{};
  double k = 0.0;        // multiplicity value of this root's class
  int cls = 0;           // 0 short, 1 medium, 2 long
  int norm2 = 0;         // sum av_j^2
};

// Positive roots of BC_r: beta_j, 2 beta_j, beta_p - beta_q, beta_p + beta_q
// for q < p. Order is irrelevant to callers.
inline std::vector<posroot> positive_roots(int r, const multiplicity& k) {
  std::vector<posroot> out;
  for (int j = 0; j < r; ++j) {
    posroot s{};
    s.av[j] = 2;
    s.k = k.ks;
    s.cls = 0;
    s.norm2 = 4;
    out.push_back(s);
    posroot l{};
    l.av[j] = 4;
    l.k = k.kl;
    l.cls = 2;
    l.norm2 = 16;
    out.push_back(l);
  }
  for (int p = 1; p < r; ++p)
    for (int q = 0; q < p; ++q)
      for (int sgn : {-1, +1}) {
        posroot m{};
        m.av[p] = 2;
        m.av[q] = 2 * sgn;
        m.k = k.km;
        m.cls = 1;
        m.norm2 = 8;
        out.push_back(m);
      }
  return out;
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

}  // namespace bchf
