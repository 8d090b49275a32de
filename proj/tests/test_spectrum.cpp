#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "traderank/error.hpp"
#include "traderank/spectrum.hpp"

namespace traderank {
namespace {

using cd = std::complex<double>;

GoogleMatrix at_alpha(const Eigen::MatrixXd& s, double alpha) {
    return GoogleMatrix(stochastic_from_dense(s), alpha);
}

Eigen::MatrixXd two_blocks(std::mt19937_64& rng) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(6, 6);
    s.topLeftCorner(3, 3) = testing::random_stochastic(3, rng);
    s.bottomRightCorner(3, 3) = testing::random_stochastic(3, rng);
    return s;
}

TEST(FullSpectrumTest, UniformIsRankOne) {
    const auto sp = full_spectrum(at_alpha(Eigen::MatrixXd::Constant(5, 5, 0.2), 1.0));
    ASSERT_EQ(sp.eigenvalues.size(), 5u);
    EXPECT_NEAR(std::abs(sp.eigenvalues[0] - cd(1.0)), 0.0, 1e-14);
    for (std::size_t k = 1; k < 5; ++k) EXPECT_LT(std::abs(sp.eigenvalues[k]), 1e-14);
}

TEST(FullSpectrumTest, PermutationTwoByTwo) {
    Eigen::Matrix2d p;
    p << 0, 1, 1, 0;
    const auto sp = full_spectrum(at_alpha(p, 1.0));
    EXPECT_NEAR(std::abs(sp.eigenvalues[0] - cd(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sp.eigenvalues[1] - cd(-1.0)), 0.0, 1e-15);
}

TEST(FullSpectrumTest, DisconnectedBlocksGiveDoubleEigenvalueOne) {
    // 4x4 with two doubly stochastic 2x2 blocks; det(lambda I - S) has a double root at 1
    Eigen::Matrix4d s;
    s << 0.3, 0.7, 0, 0,
         0.7, 0.3, 0, 0,
         0, 0, 0.6, 0.4,
         0, 0, 0.4, 0.6;
    const auto c = testing::characteristic_polynomial(s);
    double p1 = 0.0, dp1 = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        p1 += c[k];
        if (k > 0) dp1 += static_cast<double>(k) * c[k];
    }
    ASSERT_NEAR(p1, 0.0, 1e-12);
    ASSERT_NEAR(dp1, 0.0, 1e-12);

    const auto sp = full_spectrum(at_alpha(s, 1.0));
    int ones = 0;
    for (const auto& l : sp.eigenvalues) ones += std::abs(l - cd(1.0)) < 1e-10;
    EXPECT_EQ(ones, 2);
    EXPECT_NEAR(sp.eigenvalues[2].real(), -0.4, 1e-12);
    EXPECT_NEAR(sp.eigenvalues[3].real(), 0.2, 1e-12);
}

TEST(FullSpectrumTest, SortedByModulusThenRealPart) {
    std::mt19937_64 rng(12);
    const auto sp = full_spectrum(at_alpha(testing::random_stochastic(30, rng), 1.0));
    for (std::size_t k = 1; k < sp.eigenvalues.size(); ++k) {
        EXPECT_GE(std::abs(sp.eigenvalues[k - 1]), std::abs(sp.eigenvalues[k]));
    }
}

TEST(FullSpectrumTest, InvariantsOnRandomMatrices) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + 5 * static_cast<std::size_t>(trial % 6);
        const auto s = testing::random_stochastic(n, rng);
        for (double alpha : {1.0, 0.85}) {
            const auto g = at_alpha(s, alpha);
            const auto sp = full_spectrum(g);
            // leading eigenvalue and bound on the rest
            EXPECT_LT(std::abs(sp.eigenvalues[0] - cd(1.0)), 1e-10);
            for (std::size_t k = 1; k < n; ++k) EXPECT_LE(std::abs(sp.eigenvalues[k]), alpha + 1e-10);
            // trace
            cd sum = 0.0;
            for (const auto& l : sp.eigenvalues) sum += l;
            EXPECT_NEAR(sum.real(), g.dense().trace(), 1e-8);
            EXPECT_NEAR(sum.imag(), 0.0, 1e-8);
            // conjugate pairs
            std::vector<cd> conj;
            for (const auto& l : sp.eigenvalues) conj.push_back(std::conj(l));
            EXPECT_LT(greedy_match_distance(sp.eigenvalues, conj), 1e-10);
        }
    }
}

TEST(AlphaScalingTest, RandomMatricesPass) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = stochastic_from_dense(testing::random_stochastic(10, rng));
        const auto report = verify_alpha_scaling(s, 0.5);
        EXPECT_LT(report.max_mismatch, 1e-8);
        EXPECT_EQ(report.predicted.size(), 10u);
    }
}

TEST(AlphaScalingTest, AlphaOneIsIdentity) {
    std::mt19937_64 rng(6);
    const auto s = stochastic_from_dense(testing::random_stochastic(8, rng));
    EXPECT_LT(verify_alpha_scaling(s, 1.0).max_mismatch, 1e-14);
}

TEST(AlphaScalingTest, UniformMatrix) {
    const auto s = stochastic_from_dense(Eigen::MatrixXd::Constant(6, 6, 1.0 / 6.0));
    EXPECT_LT(verify_alpha_scaling(s, 0.3).max_mismatch, 1e-14);
}

TEST(AlphaScalingTest, DegenerateBlocks) {
    std::mt19937_64 rng(9);
    const auto s = stochastic_from_dense(two_blocks(rng));
    // the second unit eigenvalue is scaled to alpha like any other
    const auto report = verify_alpha_scaling(s, 0.5);
    EXPECT_LT(report.max_mismatch, 1e-8);
    int near_half = 0;
    for (const auto& l : report.observed) near_half += std::abs(l - cd(0.5)) < 1e-8;
    EXPECT_EQ(near_half, 1);
}

TEST(QuasiDegenerateTest, TwoBlocksFlagBothUnitEigenvalues) {
    std::mt19937_64 rng(10);
    const auto sp = full_spectrum(at_alpha(two_blocks(rng), 1.0));
    const auto near = detect_quasi_degenerate(sp, 0.01);
    ASSERT_EQ(near.size(), 2u);
    for (const auto& l : near) EXPECT_LT(std::abs(l - cd(1.0)), 1e-10);
}

TEST(QuasiDegenerateTest, UniformFlagsOnlyLeading) {
    const auto sp = full_spectrum(at_alpha(Eigen::MatrixXd::Constant(4, 4, 0.25), 1.0));
    const auto near = detect_quasi_degenerate(sp, 0.01);
    ASSERT_EQ(near.size(), 1u);
    EXPECT_NEAR(near[0].real(), 1.0, 1e-14);
}

TEST(SpectrumProperty, ImaginaryPartsShrinkTowardsSymmetry) {
    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t n = 12;
    Eigen::MatrixXd base(n, n), noise(n, n);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            base(i, j) = base(j, i) = i == j ? 0.0 : 1.0 + u(rng);
            noise(i, j) = i == j ? 0.0 : u(rng);
            noise(j, i) = i == j ? 0.0 : u(rng);
        }
    }
    double previous = std::numeric_limits<double>::infinity();
    for (double eps : {0.5, 0.1, 0.02, 0.004, 0.0}) {
        const MoneyMatrix m(CountryRegistry(testing::letter_codes(n)), base + eps * noise, 0, "T");
        const auto sp = full_spectrum(build_google(m, 1.0, Direction::direct));
        double max_im = 0.0;
        for (const auto& l : sp.eigenvalues) max_im = std::max(max_im, std::abs(l.imag()));
        EXPECT_LE(max_im, previous + 1e-12) << "eps = " << eps;
        if (eps == 0.0) EXPECT_LT(max_im, 1e-12);
        previous = max_im;
    }
}

TEST(SpectrumOutputTest, CsvRows) {
    Eigen::Matrix2d p;
    p << 0, 1, 1, 0;
    std::ostringstream out;
    write_spectrum_csv(out, full_spectrum(at_alpha(p, 1.0)).eigenvalues);
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, 6), "re,im\n");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

}  // namespace
}  // namespace traderank
