#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "traderank/google_matrix.hpp"
#include "traderank/trade_graph.hpp"

namespace traderank {

enum class RankKind { pagerank, cheirank, import_mass, export_mass };

const char* to_string(RankKind k) noexcept;

inline constexpr double kDefaultAlpha = 0.5;
inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultMaxIter = 1000;

/// A probability per node plus the ordering it induces. Node ids are the
/// registry ids, so "ascending id" and "ascending country code" coincide.
struct RankVector {
    RankKind kind = RankKind::pagerank;
    std::vector<double> probabilities;  // by node id
    std::vector<std::size_t> order;     // order[r] = node at rank r + 1
    std::vector<std::size_t> position;  // position[node] = rank index K, 1-based
    int iterations = 0;                 // power-iteration steps; 0 for mass ranks
    double residual = 0.0;              // ||G v - v||_1 of the returned vector

    std::size_t n() const noexcept { return probabilities.size(); }
    /// Probabilities listed by rank: P(K) for K = 1..N.
    std::vector<double> by_rank() const;
};

/// Sorts non-increasingly by probability; equal probabilities go to the lower node id.
RankVector make_rank_vector(std::vector<double> probabilities, RankKind kind);

/// Power iteration from the uniform vector. The returned vector v satisfies
/// ||G v - v||_1 < tol. Throws ConvergenceError after max_iter steps.
RankVector pagerank(const GoogleMatrix& g, double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

/// PageRank of the Google matrix built on the link-inverted network.
RankVector cheirank(const MoneyMatrix& m, double alpha = kDefaultAlpha, double tol = kDefaultTol,
                    int max_iter = kDefaultMaxIter);

enum class MassSide { import_side, export_side };

/// Share of world import (row sums) or export (column sums) mass.
/// Throws InputError when the matrix carries no flow at all.
RankVector mass_rank(const MoneyMatrix& m, MassSide side);

/// 2DRank: nodes in order of first appearance inside growing K x K squares.
/// Inputs are 1-based positions indexed by node id; so is the result.
/// Within one square, nodes enter by min(K, K*) and then by node id.
std::vector<std::size_t> two_d_rank(std::span<const std::size_t> k, std::span<const std::size_t> k_star);

struct RankTable {
    int year = 0;
    std::string commodity;
    double alpha = kDefaultAlpha;
    CountryRegistry registry;
    RankVector pagerank;
    RankVector cheirank;
    RankVector import_rank;
    RankVector export_rank;
    std::vector<std::size_t> k2;  // by node id, 1-based

    std::size_t n() const noexcept { return registry.size(); }
};

RankTable rank_table(const MoneyMatrix& m, double alpha = kDefaultAlpha, double tol = kDefaultTol,
                     int max_iter = kDefaultMaxIter);

/// `code,K,Kstar,K2,Kimport,Kexport`, one row per country in code order.
void write_rank_table_csv(std::ostream& out, const RankTable& t);
/// `rank,K,Kstar,K2,Kimport,Kexport`: row r lists the country holding rank r in each column.
void write_top_k_csv(std::ostream& out, const RankTable& t, std::size_t k);
std::string rank_table_json(const RankTable& t);
std::string top_k_json(const RankTable& t, std::size_t k);

}  // namespace traderank
