// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/limit_law.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <Eigen/LU>

#include "qwalk/errors.hpp"
#include "qwalk/momentum_grid.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

// The integrand carries ~1e-13 relative rounding noise, so tighter targets only
// force bisection to the depth limit.
constexpr double kQuadratureTolerance = 1e-11;
constexpr unsigned kQuadratureDepth = 14;
// Pieces shorter than this get a single 31-point Kronrod panel.
constexpr double kShortPanel = kPi / 64;

void require_density_coin(const Coin& coin, const char* what) {
  if (coin.is_ballistic()) {
    throw DegenerateCoinError(std::string(what) + ": l2 = 0, the limit is a point mass");
  }
  if (coin.is_flip()) {
    throw DomainError(std::string(what) + ": l1 = 0, the limit is a point mass");
  }
}

}  // namespace

MomentumFunction momentum_function(const WaveFunction& psi0) {
  return [psi0](double k) { return fourier_at(psi0, k); };
}

MomentumFunction localized_momentum_function(cplx a, cplx b) {
  const Spinor v = Spinor(a, b) / std::sqrt(2.0 * kPi);
  return [v](double) { return v; };
}

double LmValues::square_sum() const {
  double s = 0.0;
  for (int j = 0; j < 2; ++j) {
    s += std::norm(l_plus[j]) + std::norm(l_minus[j]) + std::norm(m_plus[j]) +
         std::norm(m_minus[j]);
  }
  return s;
}

LmValues lm_values(double y, const Coin& coin, const MomentumFunction& psi_hat) {
  require_density_coin(coin, "lm_values");
  const StationaryPoints sp = stationary_points(y, coin);
  const double a = coin.abs_l1();
  const double th1 = coin.theta1();
  const double r = std::sqrt((a - y) * (a + y) / (1.0 - a * a));
  const cplx big_l = coin.l2() * std::polar(1.0, -th1);
  const cplx w_plus(y, r);
  const cplx w_minus(y, -r);

  auto l_value = [&](double k, cplx w) {
    const Spinor p = psi_hat(k + th1);
    return big_l / 2.0 * ((1.0 - y) / big_l * p(0) - w / a * p(1));
  };
  auto m_value = [&](double k, cplx w) {
    const Spinor p = psi_hat(k + th1);
    return (1.0 - a * a) / (2.0 * a) * (-w / big_l * p(0) + a / (1.0 - a * a) * (1.0 + y) * p(1));
  };

  LmValues v;
  v.l_plus = {l_value(sp.c1, w_plus), l_value(sp.c2, w_minus)};
  v.l_minus = {l_value(-sp.c1, w_minus), l_value(-sp.c2, w_plus)};
  v.m_plus = {m_value(sp.c1, w_minus), m_value(sp.c2, w_plus)};
  v.m_minus = {m_value(-sp.c1, w_plus), m_value(-sp.c2, w_minus)};
  return v;
}

LmValues lm_values_definitional(double y, const Coin& coin, const MomentumFunction& psi_hat) {
  require_density_coin(coin, "lm_values_definitional");
  const StationaryPoints sp = stationary_points(y, coin);
  auto project = [&](double k, int column, cplx& l, cplx& m) {
    const Mat2 s = appendix_s(k, coin);
    const cplx coef = (s.inverse() * psi_hat(k + coin.theta1()))(column);
    l = s(0, column) * coef;
    m = s(1, column) * coef;
  };
  LmValues v;
  project(sp.c1, 0, v.l_plus[0], v.m_plus[0]);
  project(sp.c2, 0, v.l_plus[1], v.m_plus[1]);
  project(-sp.c1, 1, v.l_minus[0], v.m_minus[0]);
  project(-sp.c2, 1, v.l_minus[1], v.m_minus[1]);
  return v;
}

double g_function(double y, const Coin& coin, const MomentumFunction& psi_hat) {
  return kPi * lm_values(y, coin, psi_hat).square_sum();
}

double density_prefactor(double y, double abs_l1) {
  const double ay = std::abs(y);
  if (ay > abs_l1) return 0.0;
  if (ay == abs_l1) return std::numeric_limits<double>::infinity();
  return std::sqrt(1.0 - abs_l1 * abs_l1) /
         (kPi * (1.0 - y * y) * std::sqrt((abs_l1 - y) * (abs_l1 + y)));
}

double density(double y, const Coin& coin, const MomentumFunction& psi_hat) {
  require_density_coin(coin, "density");
  const double pre = density_prefactor(y, coin.abs_l1());
  if (pre == 0.0 || std::isinf(pre)) return pre;
  return pre * g_function(y, coin, psi_hat);
}

double localized_beta(const Coin& coin, cplx a, cplx b) {
  const cplx cross = std::conj(coin.l1()) * coin.l2() * std::conj(a) * b;
  return std::norm(a) - std::norm(b) + 2.0 * cross.real() / std::norm(coin.l1());
}

double density_localized(double y, const Coin& coin, cplx a, cplx b) {
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) > kUnitarityTolerance) {
    std::ostringstream os;
    os << "qubit: |a|^2 + |b|^2 = " << n << ", expected 1";
    throw ValidationError(os.str());
  }
  require_density_coin(coin, "density_localized");
  const double pre = density_prefactor(y, coin.abs_l1());
  if (pre == 0.0 || std::isinf(pre)) return pre;
  return pre * (1.0 - localized_beta(coin, a, b) * y);
}

LimitLaw LimitLaw::from_density(const Coin& coin, MomentumFunction psi_hat,
                                std::optional<double> beta) {
  require_density_coin(coin, "limit law");
  LimitLaw law;
  law.kind_ = LawKind::density;
  law.coin_ = coin;
  law.psi_hat_ = std::move(psi_hat);
  law.beta_ = beta;
  return law;
}

LimitLaw LimitLaw::from_atoms(DiscreteLaw atoms) {
  LimitLaw law;
  law.kind_ = LawKind::point_mass;
  law.atoms_ = std::move(atoms);
  return law;
}

double LimitLaw::support_radius() const {
  if (kind_ == LawKind::density) return coin_->abs_l1();
  double r = 0.0;
  for (const auto& a : atoms_.atoms()) r = std::max(r, std::abs(a.location));
  return r;
}

double LimitLaw::pdf(double y) const {
  if (kind_ != LawKind::density) throw DomainError("pdf: point-mass law has no density");
  return density(y, *coin_, psi_hat_);
}

double LimitLaw::integrand(double u) const {
  const double a = coin_->abs_l1();
  double y = a * std::sin(u);
  // u = +-pi/2 maps onto y = +-|l1| where the stationary points degenerate; the
  // integrand is continuous there, so evaluate just inside.
  if (std::abs(y) >= a) y = std::copysign(std::nextafter(a, 0.0), y);
  return std::sqrt(1.0 - a * a) * g_function(y, *coin_, psi_hat_) / (kPi * (1.0 - y * y));
}

double LimitLaw::integrate(double u0, double u1, int power) const {
  if (u1 <= u0) return 0.0;
  const double a = coin_->abs_l1();
  auto f = [&](double u) { return std::pow(a * std::sin(u), power) * integrand(u); };
  const unsigned depth = u1 - u0 < kShortPanel ? 0 : kQuadratureDepth;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, u0, u1, depth,
                                                                       kQuadratureTolerance);
}

double LimitLaw::cdf(double y) const {
  if (kind_ == LawKind::point_mass) return atoms_.cdf(y);
  const double a = coin_->abs_l1();
  if (y <= -a) return 0.0;
  const double u = y >= a ? 0.5 * kPi : std::asin(y / a);
  return integrate(-0.5 * kPi, u, 0);
}

std::vector<double> LimitLaw::cdf(std::span<const double> ascending) const {
  std::vector<double> out;
  out.reserve(ascending.size());
  if (kind_ == LawKind::point_mass) {
    for (double y : ascending) out.push_back(atoms_.cdf(y));
    return out;
  }
  const double a = coin_->abs_l1();
  double acc = 0.0;
  double u_prev = -0.5 * kPi;
  for (double y : ascending) {
    if (y <= -a) {
      out.push_back(0.0);
      continue;
    }
    const double u = y >= a ? 0.5 * kPi : std::asin(y / a);
    if (u > u_prev) {
      acc += integrate(u_prev, u, 0);
      u_prev = u;
    }
    out.push_back(acc);
  }
  return out;
}

double LimitLaw::mass() const {
  if (kind_ == LawKind::point_mass) return atoms_.total_weight();
  return integrate(-0.5 * kPi, 0.5 * kPi, 0);
}

double LimitLaw::mean() const {
  if (kind_ == LawKind::point_mass) return atoms_.mean();
  return integrate(-0.5 * kPi, 0.5 * kPi, 1);
}

double LimitLaw::second_moment() const {
  if (kind_ == LawKind::point_mass) return atoms_.second_moment();
  return integrate(-0.5 * kPi, 0.5 * kPi, 2);
}

LimitLaw point_mass_law(const Coin& coin, const WaveFunction& psi0) {
  if (coin.is_flip()) return LimitLaw::from_atoms(DiscreteLaw({{0.0, 1.0}}));
  if (!coin.is_ballistic()) {
    throw ValidationError("point_mass_law: coin has l1 l2 != 0, the limit has a density");
  }
  double left = 0.0;
  double right = 0.0;
  for (const auto& v : psi0.amplitudes()) {
    left += std::norm(v(0));
    right += std::norm(v(1));
  }
  const double total = left + right;
  return LimitLaw::from_atoms(DiscreteLaw({{-1.0, left / total}, {1.0, right / total}}));
}

LimitLaw limit_law(const Coin& coin, const WaveFunction& psi0) {
  if (!coin.has_density()) return point_mass_law(coin, psi0);
  const WaveFunction t = psi0.trimmed();
  if (t.width() == 1 && t.x_min() == 0) {
    const Spinor v = t.amplitudes()[0];
    return LimitLaw::from_density(coin, localized_momentum_function(v(0), v(1)),
                                  localized_beta(coin, v(0), v(1)));
  }
  return LimitLaw::from_density(coin, momentum_function(psi0));
}

double ks_distance(const DiscreteLaw& law, const LimitLaw& limit) {
  if (limit.kind() == LawKind::point_mass) return ks_distance(law, limit.atoms());
  std::vector<double> ys;
  ys.reserve(law.atoms().size());
  for (const auto& a : law.atoms()) ys.push_back(a.location);
  const std::vector<double> f = limit.cdf(ys);
  return ks_distance_to_continuous(law, f);
}

}  // namespace qwalk
