#include "hankel/dense_oracle.hpp"
#include "hankel/errors.hpp"
#include "hankel/fft_products.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

using namespace hankel;
using hankel::testing::gaussian;
using hankel::testing::max_rel_err;
using hankel::testing::rel_err;

TEST(HankelSpec, RejectsWrongGeneratorLength) {
  EXPECT_THROW(HankelSpec(4, 3, Eigen::VectorXd::Zero(8)), InvalidSpecError);
  EXPECT_THROW(HankelSpec(1, 3, Eigen::VectorXd::Zero(1)), InvalidSpecError);
  EXPECT_THROW(HankelSpec(2, 0, Eigen::VectorXd::Zero(1)), InvalidSpecError);
  EXPECT_NO_THROW(HankelSpec(4, 3, Eigen::VectorXd::Zero(9)));
  try {
    HankelSpec(4, 3, Eigen::VectorXd::Zero(8));
  } catch (const InvalidSpecError& e) {
    EXPECT_NE(std::string(e.what()).find("m(n-1)+1 = 9"), std::string::npos);
  }
}

TEST(SpectralCache, SinglePointTransformIsIdentity) {
  HankelSpec spec(2, 1, Eigen::VectorXd::Constant(1, 5.0));
  SpectralCache cache = make_cache(spec);
  ASSERT_EQ(cache.diagonal().size(), 1u);
  EXPECT_DOUBLE_EQ(cache.diagonal()[0].real(), 5.0);
  EXPECT_DOUBLE_EQ(cache.diagonal()[0].imag(), 0.0);
}

TEST(SpectralCache, ThreePointInverseTransform) {
  // ifft([1,2,3]) = [2, -1/2 - i/(2 sqrt 3), -1/2 + i/(2 sqrt 3)]
  HankelSpec spec(2, 2, Eigen::Vector3d(1, 2, 3));
  SpectralCache cache = make_cache(spec);
  const auto& d = cache.diagonal();
  const double c = 1.0 / (2.0 * std::sqrt(3.0));
  EXPECT_NEAR(d[0].real(), 2.0, 1e-15);
  EXPECT_NEAR(d[0].imag(), 0.0, 1e-15);
  EXPECT_NEAR(d[1].real(), -0.5, 1e-15);
  EXPECT_NEAR(d[1].imag(), -c, 1e-15);
  EXPECT_NEAR(d[2].real(), -0.5, 1e-15);
  EXPECT_NEAR(d[2].imag(), c, 1e-15);
}

TEST(SpectralCache, MatchesDirectDftAndRoundTrips) {
  std::mt19937_64 rng(11);
  for (int m : {2, 3, 4, 5}) {
    for (Index n : {1, 2, 7, 13}) {
      HankelSpec spec = hankel::testing::random_spec(m, n, rng);
      SpectralCache cache = make_cache(spec);
      std::vector<std::complex<double>> v(spec.generator().data(),
                                          spec.generator().data() +
                                              spec.generator().size());
      auto want = hankel::testing::naive_dft(v, /*inverse=*/true);
      auto back = hankel::testing::naive_dft(cache.diagonal(), false);
      for (std::size_t k = 0; k < v.size(); ++k) {
        EXPECT_NEAR(std::abs(cache.diagonal()[k] - want[k]), 0.0, 1e-12);
        EXPECT_NEAR(back[k].real(), v[k].real(), 1e-12);
        EXPECT_NEAR(back[k].imag(), 0.0, 1e-12);
      }
    }
  }
}

TEST(HankelProducts, MatrixCaseReadsOffEntries) {
  HankelSpec spec(2, 2, Eigen::Vector3d(1, 2, 3));
  SpectralCache cache = make_cache(spec);
  EXPECT_NEAR(hankel_xm(cache, spec, Eigen::Vector2d(1, 0)), 1.0, 1e-14);
  Eigen::VectorXd y = hankel_xm1(cache, spec, Eigen::Vector2d(0, 1));
  EXPECT_NEAR(y[0], 2.0, 1e-14);
  EXPECT_NEAR(y[1], 3.0, 1e-14);
}

TEST(HankelProducts, ThirdOrderEnumerationExample) {
  // Brute force over {1,2}^3: 1*v0 + 3*v1 + 3*v2 + 1*v3 = 12, and
  // (H x^2)_i = sum_{i2,i3} v_{i+i2+i3} = [4, 8].
  HankelSpec spec(3, 2, Eigen::Vector4d(0, 1, 2, 3));
  SpectralCache cache = make_cache(spec);
  const Eigen::Vector2d ones(1, 1);
  EXPECT_NEAR(hankel_xm(cache, spec, ones), 12.0, 1e-13);
  Eigen::VectorXd y = hankel_xm1(cache, spec, ones);
  EXPECT_NEAR(y[0], 4.0, 1e-13);
  EXPECT_NEAR(y[1], 8.0, 1e-13);
}

TEST(HankelProducts, FirstUnitVectorGivesLeadingGenerator) {
  std::mt19937_64 rng(3);
  for (int m : {2, 3, 4, 6}) {
    for (Index n : {1, 4, 9}) {
      HankelSpec spec = hankel::testing::random_spec(m, n, rng);
      SpectralCache cache = make_cache(spec);
      Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
      Eigen::VectorXd y = hankel_xm1(cache, spec, e1);
      EXPECT_LT(max_rel_err(y, spec.generator().head(n)), 1e-13);
    }
  }
}

TEST(HankelProducts, AgreeWithDenseEnumeration) {
  std::mt19937_64 rng(2024);
  for (int m = 2; m <= 5; ++m) {
    for (Index n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        HankelSpec spec = hankel::testing::random_spec(m, n, rng);
        SpectralCache cache = make_cache(spec);
        auto dense = oracle::materialize(spec);
        Eigen::VectorXd x = gaussian(n, rng);
        const double want = oracle::dense_xm(dense, x);
        EXPECT_LE(rel_err(hankel_xm(cache, spec, x), want), 1e-10)
            << "m=" << m << " n=" << n;
        EXPECT_LE(max_rel_err(hankel_xm1(cache, spec, x),
                              oracle::dense_xm1(dense, x)),
                  1e-10);
        // H x^{m-2} generator against the dense matrix.
        if (m >= 2) {
          Eigen::VectorXd w = hankel_xm2_generator(cache, spec, x);
          Eigen::MatrixXd mat = oracle::dense_xm2(dense, x);
          for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
              EXPECT_LE(rel_err(w[i + j], mat(i, j)), 1e-10);
            }
          }
        }
      }
    }
  }
}

TEST(HankelProducts, FusedProductMatchesSeparateCalls) {
  std::mt19937_64 rng(5);
  HankelSpec spec = hankel::testing::random_spec(4, 40, rng);
  SpectralCache cache = make_cache(spec);
  Eigen::VectorXd x = gaussian(40, rng);
  HankelProducts both = hankel_products(cache, spec, x);
  EXPECT_LE(rel_err(both.xm, hankel_xm(cache, spec, x)), 1e-13);
  EXPECT_EQ(both.xm1, hankel_xm1(cache, spec, x));
}

TEST(HankelProducts, ContractionIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 5;
    const Index n = 1 + trial % 37;
    HankelSpec spec = hankel::testing::random_spec(m, n, rng);
    SpectralCache cache = make_cache(spec);
    Eigen::VectorXd x = gaussian(n, rng);
    const double xm = hankel_xm(cache, spec, x);
    const double via_vector = x.dot(hankel_xm1(cache, spec, x));
    // Relative to the size of the summands rather than the (possibly
    // cancelling) result.
    const Eigen::VectorXd abs_terms =
        x.cwiseAbs().cwiseProduct(hankel_xm1(cache, spec, x).cwiseAbs());
    EXPECT_LE(std::abs(xm - via_vector),
              1e-12 * std::max({1.0, std::abs(xm), abs_terms.sum()}))
        << "m=" << m << " n=" << n;
  }
}

TEST(HankelProducts, Homogeneity) {
  std::mt19937_64 rng(8);
  for (int m : {2, 3, 4, 5, 6}) {
    HankelSpec spec = hankel::testing::random_spec(m, 12, rng);
    SpectralCache cache = make_cache(spec);
    Eigen::VectorXd x = gaussian(12, rng);
    const double base = hankel_xm(cache, spec, x);
    for (double c : {-2.0, 0.5}) {
      const double scaled = hankel_xm(cache, spec, c * x);
      EXPECT_LE(std::abs(scaled - std::pow(c, m) * base),
                1e-10 * std::max(1.0, std::abs(std::pow(c, m) * base)));
    }
  }
}

TEST(HankelProducts, RejectsMismatchedInputs) {
  std::mt19937_64 rng(9);
  HankelSpec spec = hankel::testing::random_spec(4, 5, rng);
  HankelSpec other = hankel::testing::random_spec(4, 6, rng);
  SpectralCache cache = make_cache(spec);
  EXPECT_THROW(hankel_xm(cache, spec, Eigen::VectorXd::Ones(4)),
               std::invalid_argument);
  EXPECT_THROW(hankel_xm1(cache, other, Eigen::VectorXd::Ones(6)),
               std::invalid_argument);
}

TEST(HankelProducts, CostScalesNearLinearly) {
  auto median_time = [](Index n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    HankelSpec spec = hankel::testing::random_spec(4, n, rng);
    SpectralCache cache = make_cache(spec);
    Eigen::VectorXd x = gaussian(n, rng);
    std::vector<double> times;
    for (int rep = 0; rep < 20; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      Eigen::VectorXd y = hankel_xm1(cache, spec, x);
      auto t1 = std::chrono::steady_clock::now();
      EXPECT_TRUE(std::isfinite(y[0]));
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + 10, times.end());
    return times[10];
  };
  const double small = median_time(Index{1} << 14);
  const double large = median_time(Index{1} << 15);
  EXPECT_LE(large, 3.0 * small) << small << " s vs " << large << " s";
}
