#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "traderank/rank.hpp"
#include "traderank/trade_graph.hpp"

namespace traderank {

// ---------------------------------------------------------------------------
// Power-law fits
// ---------------------------------------------------------------------------

/// OLS fit of log P(K) = c - beta * log K over ranks [k_min, k_max].
struct PowerLawFit {
    double beta = 0.0;
    double std_error = 0.0;  // standard error of the slope
    double r_squared = 0.0;
    std::size_t k_min = 0;
    std::size_t k_max = 0;
};

/// `by_rank[0]` is P(1). Throws InputError on an invalid range, fewer than
/// three points, or non-positive probabilities inside the range.
PowerLawFit fit_power_law(std::span<const double> by_rank, std::size_t k_min, std::size_t k_max);
PowerLawFit fit_power_law(const RankVector& p, std::size_t k_min, std::size_t k_max);

// ---------------------------------------------------------------------------
// Correlator
// ---------------------------------------------------------------------------

/// N * sum_i P(i) P*(i) - 1, summed over node identity. Both vectors must sum to 1.
double correlator(std::span<const double> p, std::span<const double> p_star);
double correlator(const RankVector& p, const RankVector& p_star);

// ---------------------------------------------------------------------------
// Spindle histogram over (K* - K, K* + K)
// ---------------------------------------------------------------------------

struct RankPoint {
    std::size_t k = 0;
    std::size_t k_star = 0;
    std::size_t n = 0;  // network size of the snapshot the point came from
};

struct SpindleOptions {
    bool rescale = false;
    double cell_width = 3.0;   // raw mode only
    double cell_height = 3.0;  // raw mode only
    std::size_t grid_x = 76;   // rescaled mode: cells across [-1, 1]
    std::size_t grid_y = 152;  // rescaled mode: cells across [0, 2]
};

struct SpindleHistogram {
    bool rescaled = false;
    double origin_x = 0.0;
    double origin_y = 0.0;
    double cell_width = 0.0;
    double cell_height = 0.0;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<std::uint64_t> counts;  // row-major, counts[iy * nx + ix]
    std::uint64_t total = 0;

    std::uint64_t count(std::size_t ix, std::size_t iy) const { return counts[iy * nx + ix]; }
    double x_lo(std::size_t ix) const { return origin_x + static_cast<double>(ix) * cell_width; }
    double y_lo(std::size_t iy) const { return origin_y + static_cast<double>(iy) * cell_height; }
    double x_center(std::size_t ix) const { return x_lo(ix) + 0.5 * cell_width; }
    double y_center(std::size_t iy) const { return y_lo(iy) + 0.5 * cell_height; }
};

/// Raw mode bins (K*-K, K*+K) into cells centred on K*-K = 0 with y cells
/// starting at 0. Rescaled mode divides both coordinates by the point's N and
/// bins on a fixed grid over [-1, 1] x [0, 2]. Throws InputError on empty input.
SpindleHistogram spindle_histogram(std::span<const RankPoint> points, const SpindleOptions& options = {});

/// `x,y,count` for every non-empty cell, coordinates at cell centres.
void write_histogram_csv(std::ostream& out, const SpindleHistogram& h);

// ---------------------------------------------------------------------------
// Rank velocity
// ---------------------------------------------------------------------------

/// Per-country yearly (K, K*) positions: trajectory[code][year].
using Trajectory = std::map<std::string, std::map<int, RankPoint>>;

struct VelocitySample {
    std::string code;
    int year_from = 0;
    int year_to = 0;
    std::size_t kpk = 0;  // K + K* in year_from
    double dv2 = 0.0;     // (dK)^2 + (dK*)^2
};

struct VelocitySeries {
    std::vector<VelocitySample> samples;  // by code, then year
};

/// One sample per country per pair of consecutive calendar years; gaps give no sample.
VelocitySeries velocity_sq(const Trajectory& trajectory);

struct Band {
    std::size_t lo = 0;  // inclusive, in K + K*
    std::size_t hi = 0;  // inclusive
};

struct BandWindowMean {
    Band band;
    int window_start = 0;
    int window_end = 0;  // inclusive, in year_from
    std::optional<double> mean;  // empty when no samples fall in the cell
    std::size_t count = 0;
    bool partial = false;  // window runs past the last year with data
};

struct VelocityCurvePoint {
    std::size_t kpk = 0;
    std::optional<double> mean;      // mean dv2 over samples with exactly this K + K*
    std::optional<double> smoothed;  // mean of `mean` over [kpk - half_width, kpk + half_width]
    std::size_t count = 0;           // rho(K + K*)
};

struct VelocityAggregate {
    std::vector<BandWindowMean> bands;
    std::vector<VelocityCurvePoint> curve;
};

/// Band means per window of `window_years` consecutive start years, and the
/// fixed-(K+K*) curve with its centred sliding mean. Bands must not overlap.
VelocityAggregate velocity_aggregate(const VelocitySeries& vs, std::span<const Band> bands, int window_years,
                                     std::size_t smoothing_half_width = 10);

void write_velocity_samples_csv(std::ostream& out, const VelocitySeries& vs);
/// `kpk,mean,smoothed,count`; missing values are written as empty fields.
void write_velocity_curve_csv(std::ostream& out, const VelocityAggregate& agg);
void write_velocity_bands_csv(std::ostream& out, const VelocityAggregate& agg);

// ---------------------------------------------------------------------------
// Multi-year summary
// ---------------------------------------------------------------------------

struct YearSummary {
    int year = 0;
    std::size_t n = 0;
    double links_per_country = 0.0;
    double total_mass = 0.0;
};

/// One row per snapshot, sorted by year.
std::vector<YearSummary> yearly_summary(std::span<const MoneyMatrix> snapshots);

}  // namespace traderank
