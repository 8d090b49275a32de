#include "traderank/rmwtn.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "traderank/parallel.hpp"

namespace traderank {

const char* to_string(RmwtnVariant v) noexcept {
    switch (v) {
        case RmwtnVariant::per_element_pair: return "pair";
        case RmwtnVariant::shared_vector: return "shared";
        case RmwtnVariant::two_vectors: return "two";
    }
    return "unknown";
}

RmwtnVariant parse_variant(const std::string& name) {
    if (name == "pair" || name == "per_element_pair") return RmwtnVariant::per_element_pair;
    if (name == "shared" || name == "shared_vector") return RmwtnVariant::shared_vector;
    if (name == "two" || name == "two_vectors") return RmwtnVariant::two_vectors;
    throw std::invalid_argument("unknown RMWTN variant '" + name + "' (expected pair, shared or two)");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t realization) noexcept {
    return splitmix64(base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(realization) + 1));
}

namespace {

// Uniform on [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// the mapping is fixed across standard library implementations.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}
    double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> model_codes(std::size_t n) {
    int width = 1;
    for (std::size_t v = n; v >= 10; v /= 10) ++width;
    width = std::max(width, 3);
    std::vector<std::string> codes;
    codes.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto digits = std::to_string(i);
        codes.push_back("R" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits);
    }
    return codes;
}

}  // namespace

MoneyMatrix generate(const RmwtnConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("RMWTN needs n >= 2");
    const auto n = static_cast<Eigen::Index>(cfg.n);
    Uniform uniform(cfg.seed);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    auto index_weight = [](Eigen::Index i, Eigen::Index j) { return static_cast<double>((i + 1) * (j + 1)); };

    switch (cfg.variant) {
        case RmwtnVariant::per_element_pair:
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const double u = uniform();
                    const double v = uniform();
                    m(i, j) = u * v / index_weight(i, j);
                }
            }
            break;
        case RmwtnVariant::shared_vector:
        case RmwtnVariant::two_vectors: {
            std::vector<double> rows(cfg.n);
            for (auto& e : rows) e = uniform();
            std::vector<double> cols = rows;
            if (cfg.variant == RmwtnVariant::two_vectors) {
                for (auto& e : cols) e = uniform();
            }
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (i == j) continue;
                    m(i, j) = rows[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)] / index_weight(i, j);
                }
            }
            break;
        }
    }
    return MoneyMatrix(CountryRegistry(model_codes(cfg.n)), std::move(m), 0, "RMWTN");
}

std::vector<Realization> ensemble_run(const RmwtnConfig& cfg, std::size_t realizations, double alpha, double tol,
                                      int max_iter, std::size_t workers) {
    if (realizations < 1) throw std::invalid_argument("need at least one realization");
    std::vector<Realization> runs(realizations);
    parallel_for(
        realizations,
        [&](std::size_t r) {
            RmwtnConfig local = cfg;
            local.seed = realization_seed(cfg.seed, r);
            const auto m = generate(local);
            auto& out = runs[r];
            out.index = r;
            out.seed = local.seed;
            out.registry = m.registry();
            out.k = pagerank(build_google(m, alpha, Direction::direct), tol, max_iter).position;
            out.k_star = cheirank(m, alpha, tol, max_iter).position;
            out.import_by_rank = mass_rank(m, MassSide::import_side).by_rank();
        },
        workers == 0 ? worker_count() : workers);
    return runs;
}

std::vector<RankPoint> ensemble_points(const std::vector<Realization>& runs) {
    std::vector<RankPoint> points;
    for (const auto& run : runs) {
        for (std::size_t i = 0; i < run.k.size(); ++i) points.push_back({run.k[i], run.k_star[i], run.k.size()});
    }
    return points;
}

}  // namespace traderank
