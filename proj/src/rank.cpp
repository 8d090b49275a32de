#include "traderank/rank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "summation.hpp"
#include "traderank/error.hpp"
#include "traderank/output.hpp"

namespace traderank {

const char* to_string(RankKind k) noexcept {
    switch (k) {
        case RankKind::pagerank: return "pagerank";
        case RankKind::cheirank: return "cheirank";
        case RankKind::import_mass: return "import";
        case RankKind::export_mass: return "export";
    }
    return "unknown";
}

std::vector<double> RankVector::by_rank() const {
    std::vector<double> out;
    out.reserve(order.size());
    for (auto node : order) out.push_back(probabilities[node]);
    return out;
}

RankVector make_rank_vector(std::vector<double> probabilities, RankKind kind) {
    RankVector rv;
    rv.kind = kind;
    rv.order.resize(probabilities.size());
    std::iota(rv.order.begin(), rv.order.end(), std::size_t{0});
    std::stable_sort(rv.order.begin(), rv.order.end(),
                     [&](std::size_t a, std::size_t b) { return probabilities[a] > probabilities[b]; });
    rv.position.resize(probabilities.size());
    for (std::size_t r = 0; r < rv.order.size(); ++r) rv.position[rv.order[r]] = r + 1;
    rv.probabilities = std::move(probabilities);
    return rv;
}

RankVector pagerank(const GoogleMatrix& g, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto n = static_cast<Eigen::Index>(g.n());
    if (n == 0) throw InputError("pagerank of an empty network");

    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    double residual = 0.0;
    for (int it = 0; it <= max_iter; ++it) {
        Eigen::VectorXd next = matvec(g, v);
        residual = (next - v).lpNorm<1>();
        if (residual < tol) {
            auto rv = make_rank_vector({v.data(), v.data() + n},
                                       g.direction() == Direction::direct ? RankKind::pagerank : RankKind::cheirank);
            rv.iterations = it;
            rv.residual = residual;
            return rv;
        }
        v = std::move(next);
    }
    throw ConvergenceError("power iteration did not reach tol " + format_double(tol) + " within " +
                               std::to_string(max_iter) + " iterations (last residual " + format_double(residual) + ")",
                           residual, max_iter);
}

RankVector cheirank(const MoneyMatrix& m, double alpha, double tol, int max_iter) {
    return pagerank(build_google(m, alpha, Direction::inverted), tol, max_iter);
}

RankVector mass_rank(const MoneyMatrix& m, MassSide side) {
    const auto masses = mass_vectors(m);
    if (!(masses.total > 0.0)) throw InputError("mass rank undefined: total money mass is zero");
    const auto& mass = side == MassSide::import_side ? masses.import_mass : masses.export_mass;
    std::vector<double> p(mass.size());
    for (std::size_t i = 0; i < mass.size(); ++i) p[i] = mass[i] / masses.total;
    return make_rank_vector(std::move(p), side == MassSide::import_side ? RankKind::import_mass : RankKind::export_mass);
}

namespace {

void require_permutation(std::span<const std::size_t> ranks, const char* what) {
    std::vector<bool> seen(ranks.size(), false);
    for (auto r : ranks) {
        if (r < 1 || r > ranks.size() || seen[r - 1]) {
            throw std::invalid_argument(std::string(what) + " is not a permutation of 1..N");
        }
        seen[r - 1] = true;
    }
}

}  // namespace

std::vector<std::size_t> two_d_rank(std::span<const std::size_t> k, std::span<const std::size_t> k_star) {
    if (k.size() != k_star.size()) throw std::invalid_argument("two_d_rank: K and K* cover different node sets");
    require_permutation(k, "K");
    require_permutation(k_star, "K*");

    std::vector<std::size_t> nodes(k.size());
    std::iota(nodes.begin(), nodes.end(), std::size_t{0});
    std::sort(nodes.begin(), nodes.end(), [&](std::size_t a, std::size_t b) {
        const auto sa = std::max(k[a], k_star[a]);
        const auto sb = std::max(k[b], k_star[b]);
        if (sa != sb) return sa < sb;
        const auto ma = std::min(k[a], k_star[a]);
        const auto mb = std::min(k[b], k_star[b]);
        if (ma != mb) return ma < mb;
        return a < b;
    });
    std::vector<std::size_t> k2(k.size());
    for (std::size_t r = 0; r < nodes.size(); ++r) k2[nodes[r]] = r + 1;
    return k2;
}

RankTable rank_table(const MoneyMatrix& m, double alpha, double tol, int max_iter) {
    RankTable t;
    t.year = m.year();
    t.commodity = m.commodity();
    t.alpha = alpha;
    t.registry = m.registry();
    t.pagerank = pagerank(build_google(m, alpha, Direction::direct), tol, max_iter);
    t.cheirank = cheirank(m, alpha, tol, max_iter);
    t.import_rank = mass_rank(m, MassSide::import_side);
    t.export_rank = mass_rank(m, MassSide::export_side);
    t.k2 = two_d_rank(t.pagerank.position, t.cheirank.position);
    return t;
}

void write_rank_table_csv(std::ostream& out, const RankTable& t) {
    out << "code,K,Kstar,K2,Kimport,Kexport\n";
    for (std::size_t i = 0; i < t.n(); ++i) {
        out << t.registry.code(i) << ',' << t.pagerank.position[i] << ',' << t.cheirank.position[i] << ','
            << t.k2[i] << ',' << t.import_rank.position[i] << ',' << t.export_rank.position[i] << '\n';
    }
}

namespace {

std::vector<std::size_t> invert(const std::vector<std::size_t>& position) {
    std::vector<std::size_t> order(position.size());
    for (std::size_t node = 0; node < position.size(); ++node) order[position[node] - 1] = node;
    return order;
}

}  // namespace

void write_top_k_csv(std::ostream& out, const RankTable& t, std::size_t k) {
    const auto k2_order = invert(t.k2);
    out << "rank,K,Kstar,K2,Kimport,Kexport\n";
    for (std::size_t r = 0; r < std::min(k, t.n()); ++r) {
        out << r + 1 << ',' << t.registry.code(t.pagerank.order[r]) << ',' << t.registry.code(t.cheirank.order[r])
            << ',' << t.registry.code(k2_order[r]) << ',' << t.registry.code(t.import_rank.order[r]) << ','
            << t.registry.code(t.export_rank.order[r]) << '\n';
    }
}

std::string rank_table_json(const RankTable& t) {
    nlohmann::ordered_json j;
    j["year"] = t.year;
    j["commodity"] = t.commodity;
    j["alpha"] = t.alpha;
    j["n"] = t.n();
    j["pagerank_iterations"] = t.pagerank.iterations;
    j["cheirank_iterations"] = t.cheirank.iterations;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.n(); ++i) {
        rows.push_back({{"code", t.registry.code(i)},
                        {"K", t.pagerank.position[i]},
                        {"Kstar", t.cheirank.position[i]},
                        {"K2", t.k2[i]},
                        {"Kimport", t.import_rank.position[i]},
                        {"Kexport", t.export_rank.position[i]},
                        {"P", t.pagerank.probabilities[i]},
                        {"Pstar", t.cheirank.probabilities[i]},
                        {"Pimport", t.import_rank.probabilities[i]},
                        {"Pexport", t.export_rank.probabilities[i]}});
    }
    return j.dump(2) + "\n";
}

std::string top_k_json(const RankTable& t, std::size_t k) {
    const auto k2_order = invert(t.k2);
    nlohmann::ordered_json j;
    j["year"] = t.year;
    j["commodity"] = t.commodity;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < std::min(k, t.n()); ++r) {
        rows.push_back({{"rank", r + 1},
                        {"K", t.registry.code(t.pagerank.order[r])},
                        {"Kstar", t.registry.code(t.cheirank.order[r])},
                        {"K2", t.registry.code(k2_order[r])},
                        {"Kimport", t.registry.code(t.import_rank.order[r])},
                        {"Kexport", t.registry.code(t.export_rank.order[r])}});
    }
    return j.dump(2) + "\n";
}

}  // namespace traderank
