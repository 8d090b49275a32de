#include "traderank/trade_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include "summation.hpp"
#include "traderank/error.hpp"

namespace traderank {

namespace {

constexpr std::string_view kHeader = "year,commodity,exporter,importer,value_usd";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

void warn(std::vector<std::string>* warnings, std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
}

// Sums each cell's contributions in ascending value order so the total does
// not depend on the order records arrived in.
Eigen::MatrixXd accumulate(std::map<std::pair<std::size_t, std::size_t>, std::vector<double>>& cells, std::size_t n) {
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (auto& [ij, contributions] : cells) {
        std::sort(contributions.begin(), contributions.end());
        values(static_cast<Eigen::Index>(ij.first), static_cast<Eigen::Index>(ij.second)) =
            detail::compensated_sum(contributions);
    }
    return values;
}

}  // namespace

CountryRegistry::CountryRegistry(std::vector<std::string> codes)
    : CountryRegistry(std::move(codes), {}) {}

CountryRegistry::CountryRegistry(std::vector<std::string> codes, const std::map<std::string, std::string>& names) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    entries_.reserve(codes.size());
    for (auto& c : codes) {
        if (c.empty()) throw InputError("empty country code");
        const auto it = names.find(c);
        std::string name = it == names.end() ? c : it->second;
        index_.emplace(c, entries_.size());
        entries_.push_back({std::move(c), std::move(name)});
    }
}

std::size_t CountryRegistry::id(const std::string& code) const {
    const auto it = index_.find(code);
    if (it == index_.end()) throw InputError("unknown country code '" + code + "'");
    return it->second;
}

std::vector<std::string> CountryRegistry::codes() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.code);
    return out;
}

MoneyMatrix::MoneyMatrix(CountryRegistry registry, Eigen::MatrixXd values, int year, std::string commodity)
    : registry_(std::move(registry)), values_(std::move(values)), year_(year), commodity_(std::move(commodity)) {
    const auto n = static_cast<Eigen::Index>(registry_.size());
    if (values_.rows() != n || values_.cols() != n) {
        throw std::invalid_argument("money matrix size does not match registry size");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double v = values_(i, j);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw InputError("money matrix element (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is negative or not finite");
            }
        }
        if (values_(j, j) != 0.0) throw InputError("money matrix diagonal must be zero");
    }
}

MoneyMatrix MoneyMatrix::scaled(double factor) const {
    if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
    return MoneyMatrix(registry_, values_ * factor, year_, commodity_);
}

MoneyMatrix transposed(const MoneyMatrix& m) {
    return MoneyMatrix(m.registry(), m.values().transpose(), m.year(), m.commodity());
}

std::vector<TradeFlowRecord> read_flow_records(std::istream& in, const std::string& source,
                                               std::vector<std::string>* warnings) {
    std::vector<TradeFlowRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (!header_seen) {
            // tolerate a UTF-8 byte order mark
            if (view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
            if (view != kHeader) fail(source, line_no, "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        if (view.empty()) continue;

        const auto fields = split_fields(view);
        if (fields.size() != 5) {
            fail(source, line_no, "expected 5 fields, found " + std::to_string(fields.size()));
        }
        TradeFlowRecord rec;
        rec.line = line_no;
        {
            const auto f = fields[0];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), rec.year);
            if (ec != std::errc() || ptr != f.data() + f.size()) fail(source, line_no, "bad year '" + std::string(f) + "'");
        }
        rec.commodity = std::string(fields[1]);
        rec.exporter = std::string(fields[2]);
        rec.importer = std::string(fields[3]);
        if (rec.commodity.empty()) fail(source, line_no, "empty commodity code");
        if (rec.exporter.empty() || rec.importer.empty()) fail(source, line_no, "empty country code");
        {
            const auto f = fields[4];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), rec.value_usd);
            if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(rec.value_usd)) {
                fail(source, line_no, "bad value '" + std::string(f) + "'");
            }
        }
        if (rec.value_usd < 0.0) fail(source, line_no, "negative value " + std::string(fields[4]));
        if (rec.exporter == rec.importer) {
            warn(warnings, source + ":" + std::to_string(line_no) + ": self-loop for '" + rec.exporter + "' rejected");
            continue;
        }
        records.push_back(std::move(rec));
    }
    if (!header_seen) throw InputError(source + ": empty input, header missing");
    return records;
}

std::vector<TradeFlowRecord> read_flow_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_flow_records(in, path, warnings);
}

MoneyMatrix load_flows(const std::vector<TradeFlowRecord>& records, int year, const std::string& commodity,
                       std::vector<std::string>* warnings) {
    std::vector<const TradeFlowRecord*> selected;
    std::vector<std::string> codes;
    for (const auto& r : records) {
        if (r.year != year || r.commodity != commodity) continue;
        if (r.value_usd < 0.0) throw InputError("negative value at line " + std::to_string(r.line));
        if (r.exporter == r.importer) {
            warn(warnings, "self-loop for '" + r.exporter + "' rejected");
            continue;
        }
        selected.push_back(&r);
        codes.push_back(r.exporter);
        codes.push_back(r.importer);
    }
    if (selected.empty()) {
        throw InputError("no records for year " + std::to_string(year) + ", commodity '" + commodity + "'");
    }
    CountryRegistry registry(std::move(codes));
    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> cells;
    for (const auto* r : selected) {
        cells[{registry.id(r->importer), registry.id(r->exporter)}].push_back(r->value_usd);
    }
    auto values = accumulate(cells, registry.size());
    return MoneyMatrix(std::move(registry), std::move(values), year, commodity);
}

MoneyMatrix load_flows(std::istream& in, int year, const std::string& commodity, std::vector<std::string>* warnings) {
    return load_flows(read_flow_records(in, "<stream>", warnings), year, commodity, warnings);
}

MoneyMatrix mirror_fill(const MoneyMatrix& export_matrix, const std::vector<TradeFlowRecord>& import_records,
                        std::vector<std::string>* warnings) {
    std::vector<const TradeFlowRecord*> selected;
    std::vector<std::string> codes = export_matrix.registry().codes();
    for (const auto& r : import_records) {
        if (r.year != export_matrix.year() || r.commodity != export_matrix.commodity()) continue;
        if (r.exporter == r.importer) {
            warn(warnings, "self-loop for '" + r.exporter + "' rejected");
            continue;
        }
        selected.push_back(&r);
        codes.push_back(r.exporter);
        codes.push_back(r.importer);
    }
    CountryRegistry registry(std::move(codes));

    const auto& old_reg = export_matrix.registry();
    std::vector<std::size_t> remap(old_reg.size());
    for (std::size_t k = 0; k < old_reg.size(); ++k) remap[k] = registry.id(old_reg.code(k));

    const auto n = static_cast<Eigen::Index>(registry.size());
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < old_reg.size(); ++j) {
        for (std::size_t i = 0; i < old_reg.size(); ++i) {
            values(static_cast<Eigen::Index>(remap[i]), static_cast<Eigen::Index>(remap[j])) = export_matrix(i, j);
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> reported;
    for (const auto* r : selected) {
        auto& bucket = reported[{registry.id(r->importer), registry.id(r->exporter)}];
        if (!bucket.empty()) {
            warn(warnings, "duplicate import-side record " + r->exporter + " -> " + r->importer + " summed");
        }
        bucket.push_back(r->value_usd);
    }
    const auto imported = accumulate(reported, registry.size());
    for (const auto& [ij, unused] : reported) {
        const auto i = static_cast<Eigen::Index>(ij.first);
        const auto j = static_cast<Eigen::Index>(ij.second);
        if (values(i, j) == 0.0) values(i, j) = imported(i, j);
    }
    return MoneyMatrix(std::move(registry), std::move(values), export_matrix.year(), export_matrix.commodity());
}

MassVectors mass_vectors(const MoneyMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.n());
    const auto& v = m.values();
    MassVectors out;
    out.export_mass.resize(m.n());
    out.import_mass.resize(m.n());
    for (Eigen::Index j = 0; j < n; ++j) {
        detail::CompensatedSum col;
        for (Eigen::Index i = 0; i < n; ++i) col.add(v(i, j));
        out.export_mass[static_cast<std::size_t>(j)] = col.value();
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        detail::CompensatedSum row;
        for (Eigen::Index j = 0; j < n; ++j) row.add(v(i, j));
        out.import_mass[static_cast<std::size_t>(i)] = row.value();
    }
    detail::CompensatedSum total;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) total.add(v(i, j));
    }
    out.total = total.value();
    return out;
}

LinkStats link_stats(const MoneyMatrix& m) {
    LinkStats out;
    out.links_total = static_cast<std::size_t>((m.values().array() > 0.0).count());
    out.links_per_country = m.n() == 0 ? 0.0 : static_cast<double>(out.links_total) / static_cast<double>(m.n());
    return out;
}

std::vector<int> available_years(const std::vector<TradeFlowRecord>& records, const std::string& commodity) {
    std::set<int> years;
    for (const auto& r : records) {
        if (r.commodity == commodity) years.insert(r.year);
    }
    return {years.begin(), years.end()};
}

}  // namespace traderank
