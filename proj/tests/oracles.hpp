#pragma once

// Test-only reference computations. Each one takes a route independent of
// the library code it is compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "traderank/trade_graph.hpp"

namespace traderank::testing {

/// Dense solve of (I - alpha S) P = (1 - alpha)/N * 1, normalised to sum 1.
inline Eigen::VectorXd dense_pagerank(const Eigen::MatrixXd& s, double alpha) {
    const auto n = s.rows();
    const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - alpha * s;
    const Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - alpha) / static_cast<double>(n));
    Eigen::VectorXd p = a.fullPivLu().solve(b);
    return p / p.sum();
}

/// Column normalisation written out element by element.
inline Eigen::MatrixXd hand_stochastic(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double mass = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) mass += m(i, j);
        for (Eigen::Index i = 0; i < n; ++i) s(i, j) = mass > 0.0 ? m(i, j) / mass : 1.0 / static_cast<double>(n);
    }
    return s;
}

/// 2DRank by sweeping squares k = 1..N: when the square grows to k, walk its
/// new border by increasing inner coordinate t = 1..k, emitting the node at
/// (K=k, K*=t) and the node at (K=t, K*=k), the lower id first on a tie.
inline std::vector<std::size_t> square_sweep_2drank(const std::vector<std::size_t>& k,
                                                    const std::vector<std::size_t>& k_star) {
    const std::size_t n = k.size();
    std::vector<std::vector<long>> at(n + 1, std::vector<long>(n + 1, -1));
    for (std::size_t i = 0; i < n; ++i) at[k[i]][k_star[i]] = static_cast<long>(i);
    std::vector<std::size_t> k2(n, 0);
    std::size_t next = 1;
    for (std::size_t side = 1; side <= n; ++side) {
        for (std::size_t t = 1; t <= side; ++t) {
            std::vector<long> found;
            if (at[side][t] >= 0) found.push_back(at[side][t]);
            if (t != side && at[t][side] >= 0) found.push_back(at[t][side]);
            std::sort(found.begin(), found.end());
            for (long node : found) k2[static_cast<std::size_t>(node)] = next++;
        }
    }
    return k2;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<std::string> letter_codes(std::size_t n) {
    std::vector<std::string> codes;
    for (std::size_t i = 0; i < n; ++i) {
        codes.push_back(std::string(1, static_cast<char>('A' + i / 26)) + static_cast<char>('A' + i % 26));
    }
    return codes;
}

/// Random money matrix; each off-diagonal flow is zero with probability
/// `zero_prob`, otherwise uniform on (0, 1000).
inline MoneyMatrix random_money(std::size_t n, std::mt19937_64& rng, double zero_prob = 0.2) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j && u(rng) >= zero_prob) m(i, j) = 1000.0 * u(rng) + 1e-3;
        }
    }
    return MoneyMatrix(CountryRegistry(letter_codes(n)), std::move(m), 2008, "TOTAL");
}

/// Random column-stochastic matrix with strictly positive entries.
inline Eigen::MatrixXd random_stochastic(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    Eigen::MatrixXd s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
        for (Eigen::Index i = 0; i < s.rows(); ++i) s(i, j) = u(rng);
        s.col(j) /= s.col(j).sum();
    }
    return s;
}

/// Characteristic polynomial coefficients c[0..n] of det(lambda I - A) by
/// Faddeev-LeVerrier, c[n] = 1.
inline std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& a) {
    const auto n = a.rows();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * m + c[static_cast<std::size_t>(n - k + 1)] * Eigen::MatrixXd::Identity(n, n);
        c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

}  // namespace traderank::testing
