#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "traderank/google_matrix.hpp"

namespace traderank {
namespace {

MoneyMatrix two_by_two() {
    Eigen::Matrix2d v;
    v << 0, 2, 3, 0;
    return MoneyMatrix(CountryRegistry({"A", "B"}), v, 2008, "TOTAL");
}

TEST(BuildStochasticTest, TwoByTwoDirect) {
    const auto s = build_stochastic(two_by_two(), Direction::direct);
    Eigen::Matrix2d expected;
    expected << 0, 1, 1, 0;
    EXPECT_EQ(s.columns, Eigen::MatrixXd(expected));
    EXPECT_EQ(s.dangling, (std::vector<bool>{false, false}));
}

TEST(BuildStochasticTest, DanglingColumnIsUniform) {
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v(0, 1) = 5;
    v(2, 3) = 1;
    v(1, 0) = 2;
    const MoneyMatrix m(CountryRegistry({"A", "B", "C", "D"}), v, 0, "T");
    const auto s = build_stochastic(m, Direction::direct);
    EXPECT_TRUE(s.dangling[2]);
    for (Eigen::Index i = 0; i < 4; ++i) EXPECT_EQ(s.columns(i, 2), 0.25);
    EXPECT_FALSE(s.dangling[0]);
    // the dangling rule follows the export (resp. import) mass
    const auto inv = build_stochastic(m, Direction::inverted);
    EXPECT_EQ(inv.dangling, (std::vector<bool>{false, false, false, true}));
}

TEST(BuildStochasticTest, ZeroMatrixIsAllDangling) {
    const MoneyMatrix m(CountryRegistry({"A", "B", "C"}), Eigen::MatrixXd::Zero(3, 3), 0, "T");
    const auto s = build_stochastic(m, Direction::direct);
    EXPECT_EQ(s.dangling, std::vector<bool>(3, true));
    EXPECT_TRUE(s.columns.isApprox(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0)));
}

TEST(BuildStochasticTest, MatchesPerColumnDivision) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = testing::random_money(3, rng, 0.3);
        const auto s = build_stochastic(m, Direction::direct);
        const auto oracle = testing::hand_stochastic(m.values());
        EXPECT_LT((s.columns - oracle).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(BuildStochasticTest, InvertedEqualsDirectOnTranspose) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = testing::random_money(2 + trial % 9, rng);
        const auto a = build_stochastic(m, Direction::direct);
        const auto b = build_stochastic(transposed(m), Direction::inverted);
        EXPECT_EQ(a.columns, b.columns);
        EXPECT_EQ(a.dangling, b.dangling);
    }
}

TEST(BuildGoogleTest, AlphaOneIsS) {
    const auto s = build_stochastic(two_by_two(), Direction::direct);
    const auto g = build_google(s, 1.0);
    EXPECT_EQ(g.dense(), s.columns);
}

TEST(BuildGoogleTest, HalfDampingTwoByTwo) {
    const auto g = build_google(build_stochastic(two_by_two(), Direction::direct), 0.5);
    Eigen::Matrix2d expected;
    expected << 0.25, 0.75, 0.75, 0.25;
    EXPECT_EQ(g.dense(), Eigen::MatrixXd(expected));
    EXPECT_EQ(g(0, 1), 0.75);
}

TEST(BuildGoogleTest, RejectsAlphaOutsideUnitInterval) {
    const auto s = build_stochastic(two_by_two(), Direction::direct);
    EXPECT_THROW(build_google(s, 0.0), std::invalid_argument);
    EXPECT_THROW(build_google(s, -0.1), std::invalid_argument);
    EXPECT_THROW(build_google(s, 1.0001), std::invalid_argument);
}

TEST(MatvecTest, UniformIsFixedPointOfDoublyStochastic) {
    Eigen::Matrix3d p;
    p << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    const auto g = build_google(stochastic_from_dense(p), 0.85);
    const Eigen::VectorXd v = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    EXPECT_LT((matvec(g, v) - v).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(MatvecTest, TwoByTwoHandProduct) {
    const auto g = build_google(build_stochastic(two_by_two(), Direction::direct), 0.5);
    const std::vector<double> v{1.0, 0.0};
    EXPECT_EQ(matvec(g, v), (std::vector<double>{0.25, 0.75}));
}

TEST(MatvecTest, DimensionMismatch) {
    const auto g = build_google(build_stochastic(two_by_two(), Direction::direct), 0.5);
    EXPECT_THROW(matvec(g, Eigen::VectorXd::Ones(3)), std::invalid_argument);
}

TEST(MatvecTest, EqualsDenseMultiply) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 19;
        const auto m = testing::random_money(n, rng, 0.4);
        const double alpha = 0.1 + 0.9 * u(rng);
        const auto g = build_google(m, alpha, Direction::direct);
        Eigen::VectorXd v(static_cast<Eigen::Index>(n));
        for (auto& x : v) x = u(rng);
        v /= v.sum();
        // dense G assembled from its definition, independently of GoogleMatrix::dense
        const auto s = testing::hand_stochastic(m.values());
        Eigen::MatrixXd dense(s.rows(), s.cols());
        for (Eigen::Index i = 0; i < s.rows(); ++i)
            for (Eigen::Index j = 0; j < s.cols(); ++j) dense(i, j) = alpha * s(i, j) + (1 - alpha) / static_cast<double>(n);
        EXPECT_LT((matvec(g, v) - dense * v).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(GoogleMatrixProperty, ColumnSumsAndSimplex) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 30;
        const auto m = testing::random_money(n, rng, trial % 3 == 0 ? 0.9 : 0.2);
        const double alpha = trial % 5 == 0 ? 1.0 : 0.05 + 0.95 * u(rng);
        for (auto dir : {Direction::direct, Direction::inverted}) {
            const auto g = build_google(m, alpha, dir);
            const Eigen::MatrixXd dense = g.dense();
            for (Eigen::Index j = 0; j < dense.cols(); ++j) EXPECT_NEAR(dense.col(j).sum(), 1.0, 1e-12);
            EXPECT_GE(g.stochastic().columns.minCoeff(), 0.0);
            EXPECT_LE(g.stochastic().columns.maxCoeff(), 1.0);
            Eigen::VectorXd v(static_cast<Eigen::Index>(n));
            for (auto& x : v) x = u(rng);
            v /= v.sum();
            const auto w = matvec(g, v);
            EXPECT_GE(w.minCoeff(), 0.0);
            EXPECT_NEAR(w.sum(), 1.0, 1e-12);
        }
    }
}

TEST(GoogleMatrixTest, DenseCsvDump) {
    const auto g = build_google(build_stochastic(two_by_two(), Direction::direct), 0.5);
    std::ostringstream out;
    write_dense_csv(out, g);
    EXPECT_EQ(out.str(), "0.25,0.75\n0.75,0.25\n");
}

}  // namespace
}  // namespace traderank
