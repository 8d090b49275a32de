#pragma once

#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "traderank/trade_graph.hpp"

namespace traderank {

enum class Direction {
    direct,    // links follow money: column j holds what j pays out
    inverted,  // link-inverted network, built from the transposed flows
};

const char* to_string(Direction d) noexcept;

/// Column-stochastic matrix S. Columns of nodes without outgoing flow
/// (in the chosen direction) are uniform and marked dangling.
struct StochasticMatrix {
    Eigen::MatrixXd columns;
    std::vector<bool> dangling;

    std::size_t n() const noexcept { return static_cast<std::size_t>(columns.cols()); }
};

StochasticMatrix build_stochastic(const MoneyMatrix& m, Direction direction);

/// Wraps an already column-stochastic dense matrix; columns must sum to 1
/// within 1e-12 and elements lie in [0, 1].
StochasticMatrix stochastic_from_dense(Eigen::MatrixXd columns);

/// G = alpha * S + (1 - alpha) / N. The rank-one teleportation term is never
/// stored; `matvec` applies it implicitly.
class GoogleMatrix {
public:
    GoogleMatrix(StochasticMatrix s, double alpha, Direction direction = Direction::direct);

    const StochasticMatrix& stochastic() const noexcept { return s_; }
    double alpha() const noexcept { return alpha_; }
    Direction direction() const noexcept { return direction_; }
    std::size_t n() const noexcept { return s_.n(); }

    /// Element of the effective matrix.
    double operator()(std::size_t i, std::size_t j) const;
    /// Materializes the dense effective matrix (tests, dumps and dense eigensolves).
    Eigen::MatrixXd dense() const;

private:
    StochasticMatrix s_;
    double alpha_;
    Direction direction_;
};

/// Throws std::invalid_argument unless alpha is in (0, 1].
GoogleMatrix build_google(StochasticMatrix s, double alpha, Direction direction = Direction::direct);
GoogleMatrix build_google(const MoneyMatrix& m, double alpha, Direction direction);

/// Returns alpha * S * v + (1 - alpha) / N * sum(v).
Eigen::VectorXd matvec(const GoogleMatrix& g, const Eigen::VectorXd& v);
std::vector<double> matvec(const GoogleMatrix& g, std::span<const double> v);

/// Dense effective G as row-major CSV with 17 significant digits.
void write_dense_csv(std::ostream& out, const GoogleMatrix& g);

}  // namespace traderank
