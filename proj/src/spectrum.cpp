#include "traderank/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "traderank/error.hpp"
#include "traderank/output.hpp"

namespace traderank {

void sort_spectrum(std::vector<std::complex<double>>& eigenvalues) {
    std::sort(eigenvalues.begin(), eigenvalues.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

Spectrum full_spectrum(const GoogleMatrix& g) {
    if (g.n() > kMaxDenseSpectrumSize) {
        throw InputError("dense spectrum limited to N <= " + std::to_string(kMaxDenseSpectrumSize) + ", got " +
                         std::to_string(g.n()));
    }
    Spectrum sp;
    sp.alpha = g.alpha();
    if (g.n() == 0) return sp;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(g.dense(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration did not converge");
    const auto& ev = solver.eigenvalues();
    sp.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    sort_spectrum(sp.eigenvalues);
    return sp;
}

double greedy_match_distance(const std::vector<std::complex<double>>& expected,
                             const std::vector<std::complex<double>>& actual) {
    if (expected.size() != actual.size()) throw std::invalid_argument("spectra differ in size");
    std::vector<bool> used(actual.size(), false);
    double worst = 0.0;
    for (const auto& e : expected) {
        std::size_t best = actual.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < actual.size(); ++k) {
            if (used[k]) continue;
            const double d = std::abs(actual[k] - e);
            if (d < best_dist) {
                best_dist = d;
                best = k;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

AlphaScalingReport verify_alpha_scaling(const StochasticMatrix& s, double alpha, double tolerance) {
    AlphaScalingReport report;
    report.alpha = alpha;
    const auto base = full_spectrum(GoogleMatrix(s, 1.0));
    const auto damped = full_spectrum(GoogleMatrix(s, alpha));
    report.observed = damped.eigenvalues;
    if (base.eigenvalues.empty()) return report;

    // drop one copy of the Perron eigenvalue; degenerate copies are scaled like the rest
    auto rest = base.eigenvalues;
    const auto leading = std::min_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        return std::abs(a - 1.0) < std::abs(b - 1.0);
    });
    rest.erase(leading);

    report.predicted.reserve(base.eigenvalues.size());
    report.predicted.emplace_back(1.0, 0.0);
    for (const auto& lambda : rest) report.predicted.push_back(alpha * lambda);
    sort_spectrum(report.predicted);

    report.max_mismatch = greedy_match_distance(report.predicted, report.observed);
    if (!(report.max_mismatch <= tolerance)) {
        throw NumericalError("alpha-scaling check failed: max mismatch " + format_double(report.max_mismatch) +
                             " exceeds " + format_double(tolerance));
    }
    return report;
}

std::vector<std::complex<double>> detect_quasi_degenerate(const Spectrum& sp, double gap_threshold) {
    std::vector<std::complex<double>> out;
    for (const auto& lambda : sp.eigenvalues) {
        if (std::abs(lambda) > 1.0 - gap_threshold) out.push_back(lambda);
    }
    return out;
}

void write_spectrum_csv(std::ostream& out, const std::vector<std::complex<double>>& eigenvalues) {
    out << "re,im\n";
    for (const auto& lambda : eigenvalues) out << format_double(lambda.real()) << ',' << format_double(lambda.imag()) << '\n';
}

std::string spectrum_json(const Spectrum& sp, const std::vector<std::complex<double>>& quasi_degenerate,
                          double gap_threshold) {
    auto to_json = [](const std::vector<std::complex<double>>& values) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : values) arr.push_back({{"re", v.real()}, {"im", v.imag()}});
        return arr;
    };
    nlohmann::ordered_json j;
    j["year"] = sp.year;
    j["commodity"] = sp.commodity;
    j["alpha"] = sp.alpha;
    j["n"] = sp.eigenvalues.size();
    j["gap_threshold"] = gap_threshold;
    j["quasi_degenerate"] = to_json(quasi_degenerate);
    j["eigenvalues"] = to_json(sp.eigenvalues);
    return j.dump(2) + "\n";
}

}  // namespace traderank
