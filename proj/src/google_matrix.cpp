#include "traderank/google_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "summation.hpp"
#include "traderank/output.hpp"

namespace traderank {

const char* to_string(Direction d) noexcept {
    return d == Direction::direct ? "direct" : "inverted";
}

StochasticMatrix build_stochastic(const MoneyMatrix& m, Direction direction) {
    const Eigen::MatrixXd flows = direction == Direction::direct ? m.values() : Eigen::MatrixXd(m.values().transpose());
    const auto n = flows.cols();
    StochasticMatrix s;
    s.columns.resize(n, n);
    s.dangling.assign(static_cast<std::size_t>(n), false);
    const double uniform = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        detail::CompensatedSum mass;
        for (Eigen::Index i = 0; i < n; ++i) mass.add(flows(i, j));
        const double mj = mass.value();
        if (mj > 0.0) {
            for (Eigen::Index i = 0; i < n; ++i) s.columns(i, j) = flows(i, j) / mj;
        } else {
            s.columns.col(j).setConstant(uniform);
            s.dangling[static_cast<std::size_t>(j)] = true;
        }
    }
    return s;
}

StochasticMatrix stochastic_from_dense(Eigen::MatrixXd columns) {
    if (columns.rows() != columns.cols()) throw std::invalid_argument("stochastic matrix must be square");
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        if ((columns.col(j).array() < 0.0).any() || (columns.col(j).array() > 1.0).any()) {
            throw std::invalid_argument("stochastic matrix elements must lie in [0, 1]");
        }
        if (std::abs(columns.col(j).sum() - 1.0) > 1e-12) {
            throw std::invalid_argument("column " + std::to_string(j) + " does not sum to 1");
        }
    }
    StochasticMatrix s;
    s.dangling.assign(static_cast<std::size_t>(columns.cols()), false);
    s.columns = std::move(columns);
    return s;
}

GoogleMatrix::GoogleMatrix(StochasticMatrix s, double alpha, Direction direction)
    : s_(std::move(s)), alpha_(alpha), direction_(direction) {
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
        throw std::invalid_argument("damping factor alpha must lie in (0, 1], got " + std::to_string(alpha_));
    }
}

double GoogleMatrix::operator()(std::size_t i, std::size_t j) const {
    return alpha_ * s_.columns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +
           (1.0 - alpha_) / static_cast<double>(n());
}

Eigen::MatrixXd GoogleMatrix::dense() const {
    const auto n = s_.columns.cols();
    return (alpha_ * s_.columns.array() + (1.0 - alpha_) / static_cast<double>(n)).matrix();
}

GoogleMatrix build_google(StochasticMatrix s, double alpha, Direction direction) {
    return GoogleMatrix(std::move(s), alpha, direction);
}

GoogleMatrix build_google(const MoneyMatrix& m, double alpha, Direction direction) {
    return GoogleMatrix(build_stochastic(m, direction), alpha, direction);
}

Eigen::VectorXd matvec(const GoogleMatrix& g, const Eigen::VectorXd& v) {
    if (static_cast<std::size_t>(v.size()) != g.n()) {
        throw std::invalid_argument("matvec: vector length " + std::to_string(v.size()) + " does not match N = " +
                                    std::to_string(g.n()));
    }
    const double teleport = (1.0 - g.alpha()) / static_cast<double>(g.n()) * v.sum();
    Eigen::VectorXd out = g.alpha() * (g.stochastic().columns * v);
    out.array() += teleport;
    return out;
}

std::vector<double> matvec(const GoogleMatrix& g, std::span<const double> v) {
    const Eigen::VectorXd in = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    const Eigen::VectorXd out = matvec(g, in);
    return {out.data(), out.data() + out.size()};
}

void write_dense_csv(std::ostream& out, const GoogleMatrix& g) {
    const auto dense = g.dense();
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
        for (Eigen::Index j = 0; j < dense.cols(); ++j) {
            if (j) out << ',';
            out << format_double(dense(i, j));
        }
        out << '\n';
    }
}

}  // namespace traderank
