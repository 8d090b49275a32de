#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace traderank {

/// Sorted, deduplicated set of country codes with dense ids 0..N-1.
/// Ids follow lexicographic code order, so a lower id always means a
/// lexicographically smaller code.
class CountryRegistry {
public:
    struct Entry {
        std::string code;
        std::string name;
    };

    CountryRegistry() = default;
    /// Codes may be given in any order and may repeat.
    explicit CountryRegistry(std::vector<std::string> codes);
    /// Display names keyed by code; codes absent from the map use the code as name.
    CountryRegistry(std::vector<std::string> codes, const std::map<std::string, std::string>& names);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::string& code(std::size_t id) const { return entries_.at(id).code; }
    const std::string& name(std::size_t id) const { return entries_.at(id).name; }
    bool contains(const std::string& code) const { return index_.count(code) != 0; }
    /// Throws InputError for unknown codes.
    std::size_t id(const std::string& code) const;
    std::vector<std::string> codes() const;

    friend bool operator==(const CountryRegistry& a, const CountryRegistry& b) {
        return a.codes() == b.codes();
    }

private:
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> index_;
};

struct TradeFlowRecord {
    int year = 0;
    std::string commodity;
    std::string exporter;
    std::string importer;
    double value_usd = 0.0;
    std::size_t line = 0;  // 1-based source line, 0 when synthetic
};

/// Dense N x N flow matrix; element (i, j) is the money sent from country j
/// to country i. Immutable after construction.
class MoneyMatrix {
public:
    MoneyMatrix() = default;
    /// Validates nonnegativity, zero diagonal and size agreement with the registry.
    MoneyMatrix(CountryRegistry registry, Eigen::MatrixXd values, int year, std::string commodity);

    std::size_t n() const noexcept { return registry_.size(); }
    const Eigen::MatrixXd& values() const noexcept { return values_; }
    double operator()(std::size_t i, std::size_t j) const { return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
    const CountryRegistry& registry() const noexcept { return registry_; }
    int year() const noexcept { return year_; }
    const std::string& commodity() const noexcept { return commodity_; }

    /// Same registry and tags, values multiplied by a positive factor.
    MoneyMatrix scaled(double factor) const;

private:
    CountryRegistry registry_;
    Eigen::MatrixXd values_;
    int year_ = 0;
    std::string commodity_;
};

/// Matrix of the link-inverted network: element (i, j) becomes M(j, i).
MoneyMatrix transposed(const MoneyMatrix& m);

/// Parses the `year,commodity,exporter,importer,value_usd` CSV format.
/// Self-loop rows are skipped and reported through `warnings`.
/// Throws InputError naming the source and line for malformed rows.
std::vector<TradeFlowRecord> read_flow_records(std::istream& in, const std::string& source = "<stream>",
                                               std::vector<std::string>* warnings = nullptr);
std::vector<TradeFlowRecord> read_flow_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Builds the snapshot for one (year, commodity). Duplicate (exporter, importer)
/// pairs are summed in a fixed order, so the result does not depend on row order.
MoneyMatrix load_flows(const std::vector<TradeFlowRecord>& records, int year, const std::string& commodity,
                       std::vector<std::string>* warnings = nullptr);
MoneyMatrix load_flows(std::istream& in, int year, const std::string& commodity,
                       std::vector<std::string>* warnings = nullptr);

/// Completes an export-reported matrix with import-reported flows: a cell is
/// taken from the import side only when the export side has it at zero.
MoneyMatrix mirror_fill(const MoneyMatrix& export_matrix, const std::vector<TradeFlowRecord>& import_records,
                        std::vector<std::string>* warnings = nullptr);

struct MassVectors {
    std::vector<double> export_mass;  // column sums
    std::vector<double> import_mass;  // row sums
    double total = 0.0;
};

MassVectors mass_vectors(const MoneyMatrix& m);

struct LinkStats {
    std::size_t links_total = 0;
    double links_per_country = 0.0;
};

LinkStats link_stats(const MoneyMatrix& m);

/// Years present in `records` for the given commodity, ascending.
std::vector<int> available_years(const std::vector<TradeFlowRecord>& records, const std::string& commodity);

}  // namespace traderank
