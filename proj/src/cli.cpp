#include "traderank/cli.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "traderank/error.hpp"
#include "traderank/output.hpp"
#include "traderank/parallel.hpp"
#include "traderank/rank.hpp"
#include "traderank/rmwtn.hpp"
#include "traderank/spectrum.hpp"
#include "traderank/trade_graph.hpp"

namespace traderank::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("cannot parse " + what + " from '" + std::string(text) + "'");
    }
    return value;
}

std::pair<std::string_view, std::string_view> split_once(std::string_view text, char sep, const std::string& what) {
    const auto pos = text.find(sep);
    if (pos == std::string_view::npos) throw InputError("expected " + what + ", got '" + std::string(text) + "'");
    return {text.substr(0, pos), text.substr(pos + 1)};
}

bool is_json(const RunConfig& cfg) { return cfg.format == "json"; }

std::string ext(const RunConfig& cfg) { return is_json(cfg) ? ".json" : ".csv"; }

json config_json(const RunConfig& cfg) {
    json c;
    c["command"] = cfg.command;
    c["inputs"] = cfg.inputs;
    c["mirror_inputs"] = cfg.mirror_inputs;
    if (cfg.years) {
        c["years"] = {cfg.years->first, cfg.years->second};
    } else {
        c["years"] = nullptr;
    }
    c["commodity"] = cfg.commodity;
    c["alpha"] = cfg.alpha;
    c["tol"] = cfg.tol;
    c["max_iter"] = cfg.max_iter;
    c["format"] = cfg.format;
    c["seed"] = cfg.seed;
    c["realizations"] = cfg.realizations;
    c["variant"] = cfg.variant;
    c["n"] = cfg.n;
    if (cfg.fit_range) {
        c["fit_range"] = {cfg.fit_range->first, cfg.fit_range->second};
    } else {
        c["fit_range"] = nullptr;
    }
    c["cell"] = {cfg.cell_width, cfg.cell_height};
    c["rescale"] = cfg.rescale;
    c["top"] = cfg.top;
    c["gap"] = cfg.gap;
    auto bands = json::array();
    for (const auto& b : cfg.bands) bands.push_back({b.lo, b.hi});
    c["bands"] = bands;
    c["window"] = cfg.window;
    return c;
}

// Collects output files of one command and writes the sidecar last.
class OutputSet {
public:
    OutputSet(const RunConfig& cfg) : cfg_(cfg), dir_(cfg.out_dir) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw InputError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
    }

    void write(const std::string& name, const std::string& contents) {
        write_file_atomic(dir_ / name, contents);
        files_.push_back(name);
    }

    json& summary() { return summary_; }

    void finish() {
        json meta;
        meta["tool"] = "traderank";
        meta["version"] = kVersion;
        meta["config"] = config_json(cfg_);
        meta["outputs"] = files_;
        meta["summary"] = summary_.is_null() ? json::object() : summary_;
        write_file_atomic(dir_ / (cfg_.command + "_meta.json"), meta.dump(2) + "\n");
    }

private:
    const RunConfig& cfg_;
    fs::path dir_;
    std::vector<std::string> files_;
    json summary_;
};

struct InputData {
    std::vector<TradeFlowRecord> records;
    std::vector<TradeFlowRecord> mirror_records;
    std::vector<int> years;
};

InputData read_inputs(const RunConfig& cfg, std::ostream& log) {
    if (cfg.inputs.empty()) throw InputError("command '" + cfg.command + "' needs --input");
    InputData data;
    std::vector<std::string> warnings;
    for (const auto& path : cfg.inputs) {
        auto recs = read_flow_file(path, &warnings);
        data.records.insert(data.records.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
    }
    for (const auto& path : cfg.mirror_inputs) {
        auto recs = read_flow_file(path, &warnings);
        data.mirror_records.insert(data.mirror_records.end(), std::make_move_iterator(recs.begin()),
                                   std::make_move_iterator(recs.end()));
    }
    for (const auto& w : warnings) log << "warning: " << w << '\n';

    for (int y : available_years(data.records, cfg.commodity)) {
        if (!cfg.years || (y >= cfg.years->first && y <= cfg.years->second)) data.years.push_back(y);
    }
    if (data.years.empty()) {
        throw InputError("no records for commodity '" + cfg.commodity + "' in the requested years");
    }
    return data;
}

std::vector<MoneyMatrix> load_snapshots(const RunConfig& cfg, const InputData& data, std::ostream& log) {
    std::vector<MoneyMatrix> snapshots(data.years.size());
    std::vector<std::vector<std::string>> warnings(data.years.size());
    parallel_for(data.years.size(), [&](std::size_t k) {
        auto m = load_flows(data.records, data.years[k], cfg.commodity, &warnings[k]);
        if (!data.mirror_records.empty()) m = mirror_fill(m, data.mirror_records, &warnings[k]);
        snapshots[k] = std::move(m);
    });
    for (const auto& ws : warnings) {
        for (const auto& w : ws) log << "warning: " << w << '\n';
    }
    return snapshots;
}

MoneyMatrix single_snapshot(const RunConfig& cfg, std::ostream& log) {
    const auto data = read_inputs(cfg, log);
    if (data.years.size() != 1) {
        throw InputError("command '" + cfg.command + "' needs exactly one year; use --year to select one of " +
                         std::to_string(data.years.size()) + " available");
    }
    return std::move(load_snapshots(cfg, data, log).front());
}

std::vector<RankTable> rank_snapshots(const RunConfig& cfg, const std::vector<MoneyMatrix>& snapshots) {
    std::vector<RankTable> tables(snapshots.size());
    parallel_for(snapshots.size(),
                 [&](std::size_t k) { tables[k] = rank_table(snapshots[k], cfg.alpha, cfg.tol, cfg.max_iter); });
    return tables;
}

json fit_json(const char* kind, const PowerLawFit& fit) {
    return {{"kind", kind},       {"beta", fit.beta},   {"std_error", fit.std_error},
            {"r_squared", fit.r_squared}, {"k_min", fit.k_min}, {"k_max", fit.k_max}};
}

std::string histogram_json(const SpindleHistogram& h) {
    json j;
    j["rescaled"] = h.rescaled;
    j["origin"] = {h.origin_x, h.origin_y};
    j["cell"] = {h.cell_width, h.cell_height};
    j["grid"] = {h.nx, h.ny};
    j["total"] = h.total;
    auto cells = json::array();
    for (std::size_t iy = 0; iy < h.ny; ++iy) {
        for (std::size_t ix = 0; ix < h.nx; ++ix) {
            if (const auto c = h.count(ix, iy)) cells.push_back({{"x", h.x_center(ix)}, {"y", h.y_center(iy)}, {"count", c}});
        }
    }
    j["cells"] = cells;
    return j.dump(2) + "\n";
}

SpindleOptions spindle_options(const RunConfig& cfg) {
    SpindleOptions opt;
    opt.rescale = cfg.rescale;
    opt.cell_width = cfg.cell_width;
    opt.cell_height = cfg.cell_height;
    return opt;
}

void write_histogram(OutputSet& out, const RunConfig& cfg, const std::string& stem, const SpindleHistogram& h) {
    if (is_json(cfg)) {
        out.write(stem + ".json", histogram_json(h));
    } else {
        std::ostringstream s;
        write_histogram_csv(s, h);
        out.write(stem + ".csv", s.str());
    }
}

// ---------------------------------------------------------------------------

void cmd_rank(const RunConfig& cfg, std::ostream& log) {
    const auto m = single_snapshot(cfg, log);
    const auto table = rank_table(m, cfg.alpha, cfg.tol, cfg.max_iter);
    OutputSet out(cfg);
    if (is_json(cfg)) {
        out.write("rank_table.json", rank_table_json(table));
        out.write("rank_top" + std::to_string(cfg.top) + ".json", top_k_json(table, cfg.top));
    } else {
        std::ostringstream full, top;
        write_rank_table_csv(full, table);
        write_top_k_csv(top, table, cfg.top);
        out.write("rank_table.csv", full.str());
        out.write("rank_top" + std::to_string(cfg.top) + ".csv", top.str());
    }
    auto& s = out.summary();
    s["year"] = table.year;
    s["n"] = table.n();
    s["pagerank_iterations"] = table.pagerank.iterations;
    s["cheirank_iterations"] = table.cheirank.iterations;
    s["kappa"] = correlator(table.pagerank, table.cheirank);
    s["kappa_mass"] = correlator(table.import_rank, table.export_rank);

    if (cfg.fit_range) {
        const auto [lo, hi] = *cfg.fit_range;
        const std::pair<const char*, const RankVector*> vectors[] = {{"pagerank", &table.pagerank},
                                                                     {"cheirank", &table.cheirank},
                                                                     {"import", &table.import_rank},
                                                                     {"export", &table.export_rank}};
        json fits = json::array();
        std::ostringstream csv;
        csv << "kind,beta,std_error,r_squared,k_min,k_max\n";
        for (const auto& [kind, rv] : vectors) {
            const auto fit = fit_power_law(*rv, lo, hi);
            fits.push_back(fit_json(kind, fit));
            csv << kind << ',' << format_double(fit.beta) << ',' << format_double(fit.std_error) << ','
                << format_double(fit.r_squared) << ',' << fit.k_min << ',' << fit.k_max << '\n';
        }
        if (is_json(cfg)) {
            out.write("powerlaw.json", fits.dump(2) + "\n");
        } else {
            out.write("powerlaw.csv", csv.str());
        }
    }
    out.finish();
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& log) {
    const auto m = single_snapshot(cfg, log);
    OutputSet out(cfg);
    auto& s = out.summary();
    s["year"] = m.year();
    s["n"] = m.n();
    s["spectrum_alpha"] = 1.0;
    for (const auto direction : {Direction::direct, Direction::inverted}) {
        const auto stochastic = build_stochastic(m, direction);
        auto sp = full_spectrum(GoogleMatrix(stochastic, 1.0, direction));
        sp.year = m.year();
        sp.commodity = m.commodity();
        const auto quasi = detect_quasi_degenerate(sp, cfg.gap);
        const std::string stem = std::string("spectrum_") + to_string(direction);
        if (is_json(cfg)) {
            out.write(stem + ".json", spectrum_json(sp, quasi, cfg.gap));
        } else {
            std::ostringstream all, near;
            write_spectrum_csv(all, sp.eigenvalues);
            write_spectrum_csv(near, quasi);
            out.write(stem + ".csv", all.str());
            out.write(stem + "_quasi_degenerate.csv", near.str());
        }
        json d;
        d["quasi_degenerate_count"] = quasi.size();
        if (cfg.alpha < 1.0) d["alpha_scaling_max_mismatch"] = verify_alpha_scaling(stochastic, cfg.alpha).max_mismatch;
        s[to_string(direction)] = d;
    }
    out.finish();
}

void cmd_spindle(const RunConfig& cfg, std::ostream& log) {
    const auto data = read_inputs(cfg, log);
    const auto snapshots = load_snapshots(cfg, data, log);
    const auto tables = rank_snapshots(cfg, snapshots);
    std::vector<RankPoint> points;
    for (const auto& t : tables) {
        for (std::size_t i = 0; i < t.n(); ++i) points.push_back({t.pagerank.position[i], t.cheirank.position[i], t.n()});
    }
    const auto h = spindle_histogram(points, spindle_options(cfg));
    OutputSet out(cfg);
    write_histogram(out, cfg, "spindle", h);
    out.summary()["years"] = data.years;
    out.summary()["points"] = h.total;
    out.finish();
}

void cmd_velocity(const RunConfig& cfg, std::ostream& log) {
    const auto data = read_inputs(cfg, log);
    if (data.years.size() < 2) throw InputError("velocity needs at least two yearly snapshots");
    const auto snapshots = load_snapshots(cfg, data, log);
    const auto tables = rank_snapshots(cfg, snapshots);
    Trajectory trajectory;
    for (const auto& t : tables) {
        for (std::size_t i = 0; i < t.n(); ++i) {
            trajectory[t.registry.code(i)][t.year] = {t.pagerank.position[i], t.cheirank.position[i], t.n()};
        }
    }
    const auto series = velocity_sq(trajectory);
    const auto agg = velocity_aggregate(series, cfg.bands, cfg.window);
    OutputSet out(cfg);
    if (is_json(cfg)) {
        auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
        json samples = json::array();
        for (const auto& v : series.samples) {
            samples.push_back({{"code", v.code}, {"year_from", v.year_from}, {"year_to", v.year_to}, {"kpk", v.kpk}, {"dv2", v.dv2}});
        }
        json curve = json::array();
        for (const auto& p : agg.curve) {
            curve.push_back({{"kpk", p.kpk}, {"mean", opt(p.mean)}, {"smoothed", opt(p.smoothed)}, {"count", p.count}});
        }
        json bands = json::array();
        for (const auto& b : agg.bands) {
            bands.push_back({{"band_lo", b.band.lo}, {"band_hi", b.band.hi}, {"window_start", b.window_start},
                             {"window_end", b.window_end}, {"mean", opt(b.mean)}, {"count", b.count}, {"partial", b.partial}});
        }
        out.write("velocity_samples.json", samples.dump(2) + "\n");
        out.write("velocity_curve.json", curve.dump(2) + "\n");
        out.write("velocity_bands.json", bands.dump(2) + "\n");
    } else {
        std::ostringstream samples, curve, bands;
        write_velocity_samples_csv(samples, series);
        write_velocity_curve_csv(curve, agg);
        write_velocity_bands_csv(bands, agg);
        out.write("velocity_samples.csv", samples.str());
        out.write("velocity_curve.csv", curve.str());
        out.write("velocity_bands.csv", bands.str());
    }
    out.summary()["years"] = data.years;
    out.summary()["samples"] = series.samples.size();
    out.finish();
}

void cmd_correlator(const RunConfig& cfg, std::ostream& log) {
    const auto data = read_inputs(cfg, log);
    const auto snapshots = load_snapshots(cfg, data, log);
    const auto tables = rank_snapshots(cfg, snapshots);
    OutputSet out(cfg);
    json rows = json::array();
    std::ostringstream csv;
    csv << "year,n,kappa,kappa_mass\n";
    for (const auto& t : tables) {
        const double kappa = correlator(t.pagerank, t.cheirank);
        const double kappa_mass = correlator(t.import_rank, t.export_rank);
        rows.push_back({{"year", t.year}, {"n", t.n()}, {"kappa", kappa}, {"kappa_mass", kappa_mass}});
        csv << t.year << ',' << t.n() << ',' << format_double(kappa) << ',' << format_double(kappa_mass) << '\n';
    }
    out.write("correlator" + ext(cfg), is_json(cfg) ? rows.dump(2) + "\n" : csv.str());
    out.summary()["years"] = data.years;
    out.finish();
}

void cmd_summary(const RunConfig& cfg, std::ostream& log) {
    const auto data = read_inputs(cfg, log);
    if (data.years.size() < 2) throw InputError("summary needs at least two yearly snapshots");
    const auto snapshots = load_snapshots(cfg, data, log);
    const auto rows = yearly_summary(snapshots);
    OutputSet out(cfg);
    json arr = json::array();
    std::ostringstream csv;
    csv << "year,n,links_per_country,total_usd\n";
    for (const auto& r : rows) {
        arr.push_back({{"year", r.year}, {"n", r.n}, {"links_per_country", r.links_per_country}, {"total_usd", r.total_mass}});
        csv << r.year << ',' << r.n << ',' << format_double(r.links_per_country) << ',' << format_double(r.total_mass) << '\n';
    }
    out.write("summary" + ext(cfg), is_json(cfg) ? arr.dump(2) + "\n" : csv.str());
    out.summary()["years"] = data.years;
    out.finish();
}

void cmd_rmwtn(const RunConfig& cfg, std::ostream&) {
    RmwtnConfig model;
    model.n = cfg.n;
    model.seed = cfg.seed;
    model.variant = parse_variant(cfg.variant);
    const auto runs = ensemble_run(model, cfg.realizations, cfg.alpha, cfg.tol, cfg.max_iter);
    const auto points = ensemble_points(runs);
    const auto h = spindle_histogram(points, spindle_options(cfg));

    OutputSet out(cfg);
    if (is_json(cfg)) {
        json arr = json::array();
        for (const auto& run : runs) {
            for (std::size_t i = 0; i < run.k.size(); ++i) {
                arr.push_back({{"realization", run.index}, {"code", run.registry.code(i)}, {"K", run.k[i]}, {"Kstar", run.k_star[i]}});
            }
        }
        out.write("rmwtn_ensemble.json", arr.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << "realization,code,K,Kstar\n";
        for (const auto& run : runs) {
            for (std::size_t i = 0; i < run.k.size(); ++i) {
                csv << run.index << ',' << run.registry.code(i) << ',' << run.k[i] << ',' << run.k_star[i] << '\n';
            }
        }
        out.write("rmwtn_ensemble.csv", csv.str());
    }
    write_histogram(out, cfg, "rmwtn_spindle", h);

    // ImportRank slope over the top half of ranks, averaged over realizations
    const std::size_t half = std::max<std::size_t>(cfg.n / 2, 3);
    double slope_sum = 0.0;
    for (const auto& run : runs) slope_sum += -fit_power_law(run.import_by_rank, 1, std::min(half, cfg.n)).beta;
    auto seeds = json::array();
    for (const auto& run : runs) seeds.push_back(run.seed);
    auto& s = out.summary();
    s["points"] = h.total;
    s["import_slope_top_half_mean"] = slope_sum / static_cast<double>(runs.size());
    s["realization_seeds"] = seeds;
    out.finish();
}

}  // namespace

std::pair<int, int> parse_year_range(const std::string& text) {
    const auto dash = text.find('-', 1);
    if (dash == std::string::npos) {
        const int y = parse_number<int>(text, "year");
        return {y, y};
    }
    const int a = parse_number<int>(std::string_view(text).substr(0, dash), "year");
    const int b = parse_number<int>(std::string_view(text).substr(dash + 1), "year");
    if (a > b) throw InputError("year range '" + text + "' is reversed");
    return {a, b};
}

std::pair<std::size_t, std::size_t> parse_fit_range(const std::string& text) {
    const auto [a, b] = split_once(text, ':', "fit range A:B");
    return {parse_number<std::size_t>(a, "fit range"), parse_number<std::size_t>(b, "fit range")};
}

std::pair<double, double> parse_cell(const std::string& text) {
    const auto [w, h] = split_once(text, 'x', "cell WxH");
    return {parse_number<double>(w, "cell width"), parse_number<double>(h, "cell height")};
}

std::vector<Band> parse_bands(const std::string& text) {
    std::vector<Band> bands;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto [lo, hi] = split_once(item, ':', "band LO:HI");
        bands.push_back({parse_number<std::size_t>(lo, "band"), parse_number<std::size_t>(hi, "band")});
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return bands;
}

void validate(const RunConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw InputError("--alpha must lie in (0, 1]");
    if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");
    if (cfg.max_iter < 1) throw InputError("--max-iter must be positive");
    if (cfg.format != "csv" && cfg.format != "json") throw InputError("--format must be csv or json");
    if (!(cfg.cell_width > 0.0 && cfg.cell_height > 0.0)) throw InputError("--cell dimensions must be positive");
    if (cfg.window < 1) throw InputError("--window must be at least 1");
    if (cfg.realizations < 1) throw InputError("--realizations must be at least 1");
    if (cfg.n < 2) throw InputError("--n must be at least 2");
}

int run(const RunConfig& cfg, std::ostream& log) {
    const auto started = std::chrono::steady_clock::now();
    try {
        validate(cfg);
        if (cfg.command == "rank") {
            cmd_rank(cfg, log);
        } else if (cfg.command == "spectrum") {
            cmd_spectrum(cfg, log);
        } else if (cfg.command == "spindle") {
            cmd_spindle(cfg, log);
        } else if (cfg.command == "velocity") {
            cmd_velocity(cfg, log);
        } else if (cfg.command == "correlator") {
            cmd_correlator(cfg, log);
        } else if (cfg.command == "summary") {
            cmd_summary(cfg, log);
        } else if (cfg.command == "rmwtn") {
            cmd_rmwtn(cfg, log);
        } else {
            throw InputError("unknown command '" + cfg.command + "'");
        }
    } catch (const NumericalError& e) {
        log << "error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const InputError& e) {
        log << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return kInputError;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    log << cfg.command << ": done in " << elapsed.count() << " s\n";
    return kOk;
}

int main(int argc, char** argv, std::ostream& log) {
    CLI::App app{"Google-matrix ranking of weighted directed trade networks", "traderank"};
    app.set_version_flag("--version", std::string("traderank ") + kVersion);
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string years, fit_range, cell, bands;
    app.add_option("--input", cfg.inputs, "Flow CSV files (year,commodity,exporter,importer,value_usd)");
    app.add_option("--mirror", cfg.mirror_inputs, "Import-side flow CSV files used to fill missing export records");
    app.add_option("--year", years, "Year Y or inclusive range Y-Y2");
    app.add_option("--commodity", cfg.commodity, "Commodity code")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Damping factor in (0, 1]")->capture_default_str();
    app.add_option("--tol", cfg.tol, "L1 residual tolerance for power iteration")->capture_default_str();
    app.add_option("--max-iter", cfg.max_iter, "Power-iteration cap")->capture_default_str();
    app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    app.add_option("--format", cfg.format, "csv or json")->capture_default_str();
    app.add_option("--seed", cfg.seed, "RMWTN base seed")->capture_default_str();
    app.add_option("--realizations", cfg.realizations, "RMWTN realizations")->capture_default_str();
    app.add_option("--variant", cfg.variant, "RMWTN draw scheme: pair, shared or two")->capture_default_str();
    app.add_option("--n", cfg.n, "RMWTN network size")->capture_default_str();
    app.add_option("--fit-range", fit_range, "Power-law fit ranks A:B (rank command)");
    app.add_option("--cell", cell, "Raw spindle cell size WxH")->default_str("3x3");
    app.add_flag("--rescale", cfg.rescale, "Spindle in (K*-K)/N, (K*+K)/N on a 76x152 grid");
    app.add_option("--top", cfg.top, "Rows in the top-k rank excerpt")->capture_default_str();
    app.add_option("--gap", cfg.gap, "Quasi-degeneracy distance from the unit circle")->capture_default_str();
    app.add_option("--bands", bands, "Velocity bands in K+K*, e.g. 1:40,41:80,81:120");
    app.add_option("--window", cfg.window, "Velocity window length in years")->capture_default_str();

    const std::pair<const char*, const char*> commands[] = {
        {"rank", "PageRank, CheiRank, 2DRank and mass ranks for one year"},
        {"spectrum", "Full spectrum at alpha = 1 and quasi-degenerate modes for one year"},
        {"spindle", "(K*-K, K*+K) density histogram over the selected years"},
        {"velocity", "Year-over-year rank velocity, band means and smoothed curve"},
        {"correlator", "PageRank/CheiRank and import/export correlators per year"},
        {"summary", "Countries, links per country and total mass per year"},
        {"rmwtn", "Random matrix model ensemble and its spindle histogram"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, std::cout, log);
        return code == 0 ? kOk : kInputError;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!years.empty()) cfg.years = parse_year_range(years);
        if (!fit_range.empty()) cfg.fit_range = parse_fit_range(fit_range);
        if (!cell.empty()) std::tie(cfg.cell_width, cfg.cell_height) = parse_cell(cell);
        if (!bands.empty()) cfg.bands = parse_bands(bands);
    } catch (const InputError& e) {
        log << "error: " << e.what() << '\n';
        return kInputError;
    }
    return run(cfg, log);
}

}  // namespace traderank::cli
