#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "padicts/padic.hpp"
#include "padicts/series.hpp"
#include "padicts/wavelets.hpp"

namespace padicts {

/// Two candidate closed forms for the level-l correlation prefactor. Both
/// reduce to the same function at level 0; at level >= 1 they disagree and
/// the Monte Carlo verification adjudicates between them.
enum class CovarianceVariant { paper, alternative };

inline const char* to_string(CovarianceVariant v) {
    return v == CovarianceVariant::paper ? "paper" : "alternative";
}

/// Closed-form second-order model of the discretized fractional ultrametric
/// Brownian motion: rho, the two-point covariance, and the variogram.
struct CovarianceModel {
    std::uint32_t prime = 2;
    double alpha = 1.0;
    std::uint32_t level = 0;
    CovarianceVariant variant = CovarianceVariant::paper;
};

/// rho at an attainable norm (zero or p^e with e >= level+1). rho(0) = 0
/// exactly. For alpha != 1/2,
///   rho(p^e) = PRE (1-p^{-1})/(1-p^{2a-1}) + p^{e(2a-1)} (p^{-2a}-1)/(1-p^{2a-1})
/// with PRE = p^{-level} (paper) or p^{(2a-1) level} (alternative).
/// At alpha = 1/2 the analytic limit (1-p^{-1})(e-level) + p^{-1} is used;
/// the paper-variant limit does not exist for level >= 1.
double rho(const NormValue& norm, const CovarianceModel& model);

/// <conj(F(x)) F(y)> = rho(|x|) + rho(|y|) - rho(|x-y|). Norms at or below
/// p^level identify points of the same level-l coset and count as zero.
double covariance(const UltrametricIndex& x, const UltrametricIndex& y,
                  const CovarianceModel& model);

/// <|F(x) - F(y)|^2> = 2 rho(h) at lag norm h.
double variogram(const NormValue& h, const CovarianceModel& model);

/// Dense model covariance over the p^(J-level) window points of level l.
/// Row/column 0 vanish (F(0) = 0); real symmetric, PSD to roundoff.
Eigen::MatrixXd model_covariance_matrix(const CovarianceModel& model, std::uint32_t J,
                                        std::uint64_t cap = 4096);

enum class OutputMode { complex_valued, real_part };

struct SimulationConfig {
    std::uint32_t prime = 2;
    double alpha = 1.0;
    std::uint32_t J = 5;       // window holds p^(J-level) samples
    std::uint32_t level = 0;
    std::uint64_t realizations = 1;
    std::uint64_t seed = 0;
    OutputMode output = OutputMode::complex_valued;
};

struct SimulationBatch {
    SimulationConfig config;
    std::vector<SampledSeries> series;
};

/// The iid circular complex Gaussian coefficient d_{k;j,ball} of one
/// realization, keyed by (seed, realization, k, j, ball). Exposed so the
/// noise driving a simulation can be reproduced independently.
std::complex<double> noise_coefficient(std::uint64_t seed, std::uint64_t realization,
                                       const WaveletIndex& w);

/// Exact finite-window realizations of the fractional Brownian motion: the
/// wavelet expansion with coefficients p^{alpha(j-1)} d_{k;j,ball}, mean
/// term dropped, and the origin-ball average subtracted so every
/// realization satisfies F(0) = 0 identically. Scales outside l+1..J
/// contribute nothing on the window, so the finite sum carries no
/// truncation error. In real-part mode the covariance halves.
SimulationBatch simulate(const SimulationConfig& config);

struct EmpiricalCovariance {
    Eigen::MatrixXcd mean;      // (1/M) sum conj(F_m(x)) F_m(y)
    Eigen::MatrixXd std_error;  // sample std of the summand / sqrt(M)
    std::uint64_t realizations = 0;
    SimulationConfig config;
};

/// Sample covariance of a batch; the process is mean-zero by construction,
/// so no mean is subtracted.
EmpiricalCovariance estimate(const SimulationBatch& batch);

struct VariantScore {
    CovarianceVariant variant = CovarianceVariant::paper;
    double max_abs_z = 0.0;
    double total_squared_z = 0.0;
    double frac_within_2 = 0.0;
    double frac_within_5 = 0.0;
};

struct VerificationReport {
    double max_abs_z = 0.0;
    double frac_within_2 = 0.0;
    double frac_within_5 = 0.0;
    /// Present when level >= 1: side-by-side scores for both prefactor
    /// variants and the winner by total squared z.
    std::optional<VariantScore> paper_score;
    std::optional<VariantScore> alternative_score;
    std::optional<CovarianceVariant> winner;
};

/// Per-entry z-scores of the empirical covariance against the model.
/// Entries with zero standard error must match exactly. The entry count,
/// maximum |z| and the within-2/within-5 fractions are reported; for
/// level >= 1 both variants are scored.
VerificationReport verify(const CovarianceModel& model, const EmpiricalCovariance& empirical);

struct WhitenessReport {
    std::uint64_t coefficient_count = 0;
    std::uint64_t pair_count = 0;
    double max_abs_mean_z = 0.0;        // recovered d should have mean 0
    double max_abs_variance_z = 0.0;    // ... unit total variance
    double max_abs_correlation_z = 0.0; // ... vanishing cross-correlation
    bool within(double z_bound) const {
        return max_abs_mean_z <= z_bound && max_abs_variance_z <= z_bound &&
               max_abs_correlation_z <= z_bound;
    }
};

/// Recovers the driving noise of a level-0 batch by undoing the spectral
/// weights and tests it for whiteness (unit variance, no correlation,
/// zero mean), reporting the worst z-score of each family.
WhitenessReport whiteness_check(const SimulationBatch& batch, double alpha);

} // namespace padicts
