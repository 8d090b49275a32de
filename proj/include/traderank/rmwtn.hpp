#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "traderank/analysis.hpp"
#include "traderank/rank.hpp"
#include "traderank/trade_graph.hpp"

namespace traderank {

/// Random matrix model of the trade network: M_ij = e_i e'_j / (i j) with
/// uniform [0, 1) factors and indices i, j = 1..N read as ImportRank positions.
/// The variants differ only in how the uniform factors are drawn.
enum class RmwtnVariant {
    per_element_pair,  // fresh (u_ij, v_ij) for every element
    shared_vector,     // one vector e, exactly symmetric matrix
    two_vectors,       // independent vectors e (rows) and e' (columns)
};

const char* to_string(RmwtnVariant v) noexcept;
/// Accepts "pair", "shared", "two" and the full enumerator names.
RmwtnVariant parse_variant(const std::string& name);

struct RmwtnConfig {
    std::size_t n = 227;
    std::uint64_t seed = 1;
    RmwtnVariant variant = RmwtnVariant::per_element_pair;
};

/// SplitMix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Seed for realization r: splitmix64(base + (r + 1) * golden-ratio increment).
std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t realization) noexcept;

/// Country codes "R001".."R227" (zero-padded, so code order equals index order).
/// Diagonal is zero; year is 0 and commodity "RMWTN". Deterministic in cfg.
MoneyMatrix generate(const RmwtnConfig& cfg);

struct Realization {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    CountryRegistry registry;
    std::vector<std::size_t> k;       // by node id
    std::vector<std::size_t> k_star;  // by node id
    std::vector<double> import_by_rank;  // P~(K~), K~ = 1..N
};

/// Generates and ranks `realizations` independent matrices; realization r
/// uses realization_seed(cfg.seed, r). Results are ordered by r regardless
/// of worker scheduling.
std::vector<Realization> ensemble_run(const RmwtnConfig& cfg, std::size_t realizations, double alpha = kDefaultAlpha,
                                      double tol = kDefaultTol, int max_iter = kDefaultMaxIter,
                                      std::size_t workers = 0);

/// Flattens (K, K*, N) points of every realization.
std::vector<RankPoint> ensemble_points(const std::vector<Realization>& runs);

}  // namespace traderank
