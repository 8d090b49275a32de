#include "traderank/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "summation.hpp"
#include "traderank/error.hpp"
#include "traderank/output.hpp"

namespace traderank {

PowerLawFit fit_power_law(std::span<const double> by_rank, std::size_t k_min, std::size_t k_max) {
    if (k_min < 1 || k_min >= k_max || k_max > by_rank.size()) {
        throw InputError("fit range [" + std::to_string(k_min) + ", " + std::to_string(k_max) +
                         "] is not inside 1.." + std::to_string(by_rank.size()));
    }
    const std::size_t count = k_max - k_min + 1;
    if (count < 3) throw InputError("power-law fit needs at least 3 points");

    std::vector<double> xs, ys;
    xs.reserve(count);
    ys.reserve(count);
    for (std::size_t k = k_min; k <= k_max; ++k) {
        const double p = by_rank[k - 1];
        if (!(p > 0.0)) throw InputError("non-positive probability at rank " + std::to_string(k));
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(p));
    }
    const double n = static_cast<double>(count);
    const double mean_x = detail::compensated_sum(xs) / n;
    const double mean_y = detail::compensated_sum(ys) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double dx = xs[k] - mean_x;
        const double dy = ys[k] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    double ssr = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double r = (ys[k] - mean_y) - slope * (xs[k] - mean_x);
        ssr += r * r;
    }
    PowerLawFit fit;
    fit.beta = -slope;
    fit.std_error = std::sqrt(ssr / (n - 2.0) / sxx);
    fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    fit.k_min = k_min;
    fit.k_max = k_max;
    return fit;
}

PowerLawFit fit_power_law(const RankVector& p, std::size_t k_min, std::size_t k_max) {
    const auto by_rank = p.by_rank();
    return fit_power_law(by_rank, k_min, k_max);
}

double correlator(std::span<const double> p, std::span<const double> p_star) {
    if (p.size() != p_star.size()) throw std::invalid_argument("correlator: vectors differ in length");
    if (p.empty()) return 0.0;
    // For normalised inputs N * sum P P* - 1 == N * sum (P - 1/N)(P* - 1/N);
    // the centred form avoids cancelling against 1 and is exactly 0 on uniform vectors.
    const double uniform = 1.0 / static_cast<double>(p.size());
    detail::CompensatedSum overlap;
    for (std::size_t i = 0; i < p.size(); ++i) overlap.add((p[i] - uniform) * (p_star[i] - uniform));
    return static_cast<double>(p.size()) * overlap.value();
}

double correlator(const RankVector& p, const RankVector& p_star) {
    return correlator(p.probabilities, p_star.probabilities);
}

SpindleHistogram spindle_histogram(std::span<const RankPoint> points, const SpindleOptions& options) {
    if (points.empty()) throw InputError("spindle histogram of an empty point set");
    SpindleHistogram h;
    h.rescaled = options.rescale;
    std::size_t max_n = 0;
    for (const auto& p : points) {
        if (p.n == 0 || p.k < 1 || p.k_star < 1 || p.k > p.n || p.k_star > p.n) {
            throw InputError("rank point outside 1..N");
        }
        max_n = std::max(max_n, p.n);
    }

    if (options.rescale) {
        if (options.grid_x == 0 || options.grid_y == 0) throw std::invalid_argument("grid must be non-empty");
        h.nx = options.grid_x;
        h.ny = options.grid_y;
        h.origin_x = -1.0;
        h.origin_y = 0.0;
        h.cell_width = 2.0 / static_cast<double>(h.nx);
        h.cell_height = 2.0 / static_cast<double>(h.ny);
        h.counts.assign(h.nx * h.ny, 0);
        for (const auto& p : points) {
            // exact integer binning of ((K*-K)/N + 1) / width and ((K*+K)/N) / height
            const std::size_t shifted = p.k_star + p.n - p.k;  // (K* - K) + N >= 1
            const std::size_t ix = std::min(shifted * h.nx / (2 * p.n), h.nx - 1);
            const std::size_t iy = std::min((p.k_star + p.k) * h.ny / (2 * p.n), h.ny - 1);
            ++h.counts[iy * h.nx + ix];
        }
    } else {
        if (!(options.cell_width > 0.0) || !(options.cell_height > 0.0)) {
            throw std::invalid_argument("cell dimensions must be positive");
        }
        h.cell_width = options.cell_width;
        h.cell_height = options.cell_height;
        const double half_span = static_cast<double>(max_n - 1);
        const auto mx = static_cast<std::size_t>(std::floor(half_span / h.cell_width + 0.5));
        h.nx = 2 * mx + 1;
        h.origin_x = -(static_cast<double>(mx) + 0.5) * h.cell_width;
        h.origin_y = 0.0;
        h.ny = static_cast<std::size_t>(std::floor(2.0 * static_cast<double>(max_n) / h.cell_height)) + 1;
        h.counts.assign(h.nx * h.ny, 0);
        for (const auto& p : points) {
            const double x = static_cast<double>(p.k_star) - static_cast<double>(p.k);
            const double y = static_cast<double>(p.k_star + p.k);
            const auto ix = static_cast<std::size_t>(std::floor((x - h.origin_x) / h.cell_width));
            const auto iy = static_cast<std::size_t>(std::floor(y / h.cell_height));
            ++h.counts[std::min(iy, h.ny - 1) * h.nx + std::min(ix, h.nx - 1)];
        }
    }
    h.total = points.size();
    return h;
}

void write_histogram_csv(std::ostream& out, const SpindleHistogram& h) {
    out << "x,y,count\n";
    for (std::size_t iy = 0; iy < h.ny; ++iy) {
        for (std::size_t ix = 0; ix < h.nx; ++ix) {
            const auto c = h.count(ix, iy);
            if (c == 0) continue;
            out << format_double(h.x_center(ix)) << ',' << format_double(h.y_center(iy)) << ',' << c << '\n';
        }
    }
}

VelocitySeries velocity_sq(const Trajectory& trajectory) {
    VelocitySeries vs;
    for (const auto& [code, years] : trajectory) {
        for (auto it = years.begin(); it != years.end(); ++it) {
            const auto next = std::next(it);
            if (next == years.end()) break;
            if (next->first != it->first + 1) continue;
            const double dk = static_cast<double>(next->second.k) - static_cast<double>(it->second.k);
            const double dks = static_cast<double>(next->second.k_star) - static_cast<double>(it->second.k_star);
            vs.samples.push_back({code, it->first, next->first, it->second.k + it->second.k_star, dk * dk + dks * dks});
        }
    }
    return vs;
}

VelocityAggregate velocity_aggregate(const VelocitySeries& vs, std::span<const Band> bands, int window_years,
                                     std::size_t smoothing_half_width) {
    if (window_years < 1) throw std::invalid_argument("window length must be at least one year");
    std::vector<Band> sorted(bands.begin(), bands.end());
    std::sort(sorted.begin(), sorted.end(), [](const Band& a, const Band& b) { return a.lo < b.lo; });
    for (std::size_t b = 0; b < sorted.size(); ++b) {
        if (sorted[b].lo > sorted[b].hi) throw std::invalid_argument("band with lo > hi");
        if (b > 0 && sorted[b].lo <= sorted[b - 1].hi) throw std::invalid_argument("bands overlap");
    }

    VelocityAggregate agg;
    if (vs.samples.empty()) return agg;

    int first_year = vs.samples.front().year_from;
    int last_year = first_year;
    std::size_t min_kpk = vs.samples.front().kpk;
    std::size_t max_kpk = min_kpk;
    for (const auto& s : vs.samples) {
        first_year = std::min(first_year, s.year_from);
        last_year = std::max(last_year, s.year_from);
        min_kpk = std::min(min_kpk, s.kpk);
        max_kpk = std::max(max_kpk, s.kpk);
    }

    for (const auto& band : bands) {
        for (int start = first_year; start <= last_year; start += window_years) {
            BandWindowMean cell;
            cell.band = band;
            cell.window_start = start;
            cell.window_end = start + window_years - 1;
            cell.partial = cell.window_end > last_year;
            detail::CompensatedSum sum;
            for (const auto& s : vs.samples) {
                if (s.kpk < band.lo || s.kpk > band.hi) continue;
                if (s.year_from < cell.window_start || s.year_from > cell.window_end) continue;
                sum.add(s.dv2);
                ++cell.count;
            }
            if (cell.count > 0) cell.mean = sum.value() / static_cast<double>(cell.count);
            agg.bands.push_back(cell);
        }
    }

    const std::size_t span = max_kpk - min_kpk + 1;
    std::vector<detail::CompensatedSum> sums(span);
    std::vector<std::size_t> counts(span, 0);
    for (const auto& s : vs.samples) {
        sums[s.kpk - min_kpk].add(s.dv2);
        ++counts[s.kpk - min_kpk];
    }
    agg.curve.resize(span);
    for (std::size_t k = 0; k < span; ++k) {
        auto& pt = agg.curve[k];
        pt.kpk = min_kpk + k;
        pt.count = counts[k];
        if (counts[k] > 0) pt.mean = sums[k].value() / static_cast<double>(counts[k]);
    }
    for (std::size_t k = 0; k < span; ++k) {
        const std::size_t lo = k >= smoothing_half_width ? k - smoothing_half_width : 0;
        const std::size_t hi = std::min(span - 1, k + smoothing_half_width);
        detail::CompensatedSum sum;
        std::size_t members = 0;
        for (std::size_t q = lo; q <= hi; ++q) {
            if (!agg.curve[q].mean) continue;
            sum.add(*agg.curve[q].mean);
            ++members;
        }
        if (members > 0) agg.curve[k].smoothed = sum.value() / static_cast<double>(members);
    }
    return agg;
}

namespace {

std::string optional_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

void write_velocity_samples_csv(std::ostream& out, const VelocitySeries& vs) {
    out << "code,year_from,year_to,kpk,dv2\n";
    for (const auto& s : vs.samples) {
        out << s.code << ',' << s.year_from << ',' << s.year_to << ',' << s.kpk << ',' << format_double(s.dv2) << '\n';
    }
}

void write_velocity_curve_csv(std::ostream& out, const VelocityAggregate& agg) {
    out << "kpk,mean,smoothed,count\n";
    for (const auto& pt : agg.curve) {
        out << pt.kpk << ',' << optional_field(pt.mean) << ',' << optional_field(pt.smoothed) << ',' << pt.count << '\n';
    }
}

void write_velocity_bands_csv(std::ostream& out, const VelocityAggregate& agg) {
    out << "band_lo,band_hi,window_start,window_end,mean,count,partial\n";
    for (const auto& c : agg.bands) {
        out << c.band.lo << ',' << c.band.hi << ',' << c.window_start << ',' << c.window_end << ','
            << optional_field(c.mean) << ',' << c.count << ',' << (c.partial ? 1 : 0) << '\n';
    }
}

std::vector<YearSummary> yearly_summary(std::span<const MoneyMatrix> snapshots) {
    std::vector<YearSummary> rows;
    rows.reserve(snapshots.size());
    for (const auto& m : snapshots) {
        const auto links = link_stats(m);
        rows.push_back({m.year(), m.n(), links.links_per_country, mass_vectors(m).total});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
    return rows;
}

}  // namespace traderank
