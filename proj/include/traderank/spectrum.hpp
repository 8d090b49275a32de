#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "traderank/google_matrix.hpp"

namespace traderank {

inline constexpr std::size_t kMaxDenseSpectrumSize = 5000;

struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;  // descending |lambda|, then descending Re, then descending Im
    double alpha = 1.0;
    int year = 0;
    std::string commodity;
};

/// All N eigenvalues of the dense effective matrix of `g`.
/// Throws InputError above kMaxDenseSpectrumSize and NumericalError if the
/// QR iteration fails.
Spectrum full_spectrum(const GoogleMatrix& g);

/// Sorts in the Spectrum order.
void sort_spectrum(std::vector<std::complex<double>>& eigenvalues);

struct AlphaScalingReport {
    double alpha = 1.0;
    double max_mismatch = 0.0;
    std::vector<std::complex<double>> predicted;  // {1} plus alpha * (alpha=1 spectrum without its leading 1)
    std::vector<std::complex<double>> observed;   // spectrum computed directly at alpha
};

/// Checks that the spectrum of alpha*S + (1-alpha)/N is {1} together with the
/// non-leading eigenvalues of S scaled by alpha. Pairs predicted and observed
/// eigenvalues greedily by nearest distance; throws NumericalError when the
/// largest pair distance exceeds `tolerance`.
AlphaScalingReport verify_alpha_scaling(const StochasticMatrix& s, double alpha, double tolerance = 1e-8);

/// Greedy nearest-neighbour matching distance between two equally sized multisets.
double greedy_match_distance(const std::vector<std::complex<double>>& expected,
                             const std::vector<std::complex<double>>& actual);

/// Eigenvalues with |lambda| > 1 - gap_threshold.
std::vector<std::complex<double>> detect_quasi_degenerate(const Spectrum& sp, double gap_threshold);

/// `re,im` rows.
void write_spectrum_csv(std::ostream& out, const std::vector<std::complex<double>>& eigenvalues);
std::string spectrum_json(const Spectrum& sp, const std::vector<std::complex<double>>& quasi_degenerate,
                          double gap_threshold);

}  // namespace traderank
