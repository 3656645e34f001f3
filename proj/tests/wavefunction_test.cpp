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

#include <cmath>

#include <gtest/gtest.h>

#include "qwalk/errors.hpp"
#include "qwalk/momentum_grid.hpp"
#include "qwalk/pauli.hpp"
#include "qwalk/wavefunction.hpp"
#include "test_util.hpp"

namespace qwalk {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

TEST(WaveFunction, LocalizedQubitDistribution) {
  const auto d = position_distribution(WaveFunction::localized(0, 0, 1));
  EXPECT_EQ(d.x_min, 0);
  ASSERT_EQ(d.p.size(), 1u);
  EXPECT_DOUBLE_EQ(d.p[0], 1.0);
}

TEST(WaveFunction, TwoSiteSuperposition) {
  const std::vector<WaveFunction::Site> sites{{-10, kS, 0}, {10, 0, kS}};
  const WaveFunction psi = WaveFunction::from_sites(sites);
  EXPECT_EQ(psi.x_min(), -10);
  EXPECT_EQ(psi.x_max(), 10);
  const auto d = position_distribution(psi);
  EXPECT_NEAR(d.at(-10), 0.5, 1e-15);
  EXPECT_NEAR(d.at(10), 0.5, 1e-15);
  EXPECT_EQ(d.at(0), 0.0);
  EXPECT_NEAR(d.total(), 1.0, 1e-15);
}

TEST(WaveFunction, RejectsDuplicateAndEmptySites) {
  const std::vector<WaveFunction::Site> dup{{1, 1, 0}, {1, 0, 1}};
  EXPECT_THROW(WaveFunction::from_sites(dup), ValidationError);
  EXPECT_THROW(WaveFunction::from_sites({}), ValidationError);
}

TEST(WaveFunction, TrimKeepsInteriorZeros) {
  WaveFunction psi(-2, {Spinor(1e-20, 0), Spinor(1, 0), Spinor(0, 0), Spinor(0, 1), Spinor(0, 0)});
  const WaveFunction t = psi.trimmed();
  EXPECT_EQ(t.x_min(), -1);
  EXPECT_EQ(t.x_max(), 1);
  EXPECT_EQ(t.width(), 3u);
}

TEST(Fourier, LocalizedQubitIsConstant) {
  const cplx a(0.6, 0.0), b(0.0, 0.8);
  const MomentumGrid grid(16);
  const auto hat = fourier_transform(WaveFunction::localized(0, a, b), grid);
  const double s = 1.0 / std::sqrt(2.0 * kPi);
  for (const auto& v : hat.values) {
    EXPECT_LT(std::abs(v(0) - a * s), 1e-15);
    EXPECT_LT(std::abs(v(1) - b * s), 1e-15);
  }
}

TEST(Fourier, ShiftedQubitPicksUpPhase) {
  const MomentumGrid grid(64);
  const auto hat = fourier_transform(WaveFunction::localized(10, 0, 1), grid);
  const double s = 1.0 / std::sqrt(2.0 * kPi);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_EQ(hat.values[j](0), cplx(0.0));
    EXPECT_LT(std::abs(hat.values[j](1) - s * std::polar(1.0, 10.0 * grid.node(j))), 1e-14);
  }
}

TEST(Fourier, NodesAreUniform) {
  const MomentumGrid grid(7);
  const auto k = grid.nodes();
  EXPECT_DOUBLE_EQ(k.front(), -kPi);
  for (std::size_t j = 1; j < k.size(); ++j) {
    EXPECT_GT(k[j], k[j - 1]);
    EXPECT_NEAR(k[j] - k[j - 1], 2 * kPi / 7, 1e-15);
  }
  EXPECT_LT(k.back(), kPi);
}

TEST(Fourier, RoundTripAndParseval) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t width = 1 + seed * 3;
    const WaveFunction psi = testing::random_state(-static_cast<long>(seed) * 2, width, seed);
    const MomentumGrid grid(width + seed % 4);
    const auto hat = fourier_transform(psi, grid);
    double parseval = 0.0;
    for (const auto& v : hat.values) parseval += v.squaredNorm();
    parseval *= grid.spacing();
    EXPECT_NEAR(parseval, psi.norm_squared(), 1e-12);
    const WaveFunction back = inverse_fourier(hat, psi.x_min(), psi.width());
    EXPECT_LT(testing::sup_distance(back, psi), 1e-13);
  }
}

TEST(Fourier, FourierAtMatchesGrid) {
  const WaveFunction psi = testing::random_state(-3, 9, 5);
  const MomentumGrid grid(12);
  const auto hat = fourier_transform(psi, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_LT((fourier_at(psi, grid.node(j)) - hat.values[j]).norm(), 1e-14);
  }
}

TEST(Fourier, AliasingGuard) {
  const WaveFunction psi = testing::random_state(0, 10, 1);
  EXPECT_THROW(fourier_transform(psi, MomentumGrid(9)), AliasingError);
  const auto hat = fourier_transform(psi, MomentumGrid(10));
  EXPECT_THROW(inverse_fourier(hat, 0, 11), AliasingError);
}

TEST(Pauli, BasisDecompositions) {
  const auto id = pauli_decompose(Mat2::Identity());
  EXPECT_EQ(id[0], cplx(1));
  EXPECT_EQ(id[1], cplx(0));
  EXPECT_EQ(id[2], cplx(0));
  EXPECT_EQ(id[3], cplx(0));
  const auto s2 = pauli_decompose(sigma(2));
  EXPECT_EQ(s2[0], cplx(0));
  EXPECT_EQ(s2[1], cplx(0));
  EXPECT_EQ(s2[2], cplx(1));
  EXPECT_EQ(s2[3], cplx(0));
}

TEST(Pauli, GeneralMatrix) {
  Mat2 a;
  a << 1, 2, 3, 4;
  const auto p = pauli_decompose(a);
  EXPECT_EQ(p[0], cplx(2.5));
  EXPECT_EQ(p[1], cplx(2.5));
  // (0,1) entry is a_1 - i a_2 = 2, so a_2 = -i/2
  EXPECT_EQ(p[2], cplx(0, -0.5));
  EXPECT_EQ(p[3], cplx(-1.5));
}

TEST(Pauli, ComposeInvertsDecompose) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n;
  for (int i = 0; i < 100; ++i) {
    Mat2 a;
    a << cplx(n(rng), n(rng)), cplx(n(rng), n(rng)), cplx(n(rng), n(rng)), cplx(n(rng), n(rng));
    EXPECT_LT(testing::max_abs(pauli_compose(pauli_decompose(a)) - a), 1e-14);
    const Mat2 h = a + a.adjoint();
    EXPECT_TRUE(pauli_decompose(h).is_hermitian(1e-15));
  }
}

TEST(Pauli, MatchesTraceFormula) {
  Mat2 a;
  a << cplx(1, 2), cplx(-0.5, 3), cplx(0.25, -1), cplx(4, 0.5);
  const auto p = pauli_decompose(a);
  for (int l = 0; l < 4; ++l) {
    EXPECT_LT(std::abs(p[l] - 0.5 * (sigma(l) * a).trace()), 1e-15);
  }
}

}  // namespace
}  // namespace qwalk
