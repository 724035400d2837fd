#include "padicts/fbm.hpp"

#include <cmath>
#include <limits>

#include "padicts/rng.hpp"

namespace padicts {

namespace {

void validate(const CovarianceModel& model) {
    if (!is_prime(model.prime)) throw invalid_parameter("p must be prime");
    if (!(model.alpha > 0.0)) throw invalid_parameter("alpha must be positive");
}

/// Norm of an underlying Q_p/Z_p element seen from level l: differences at
/// or below p^l sit inside one level-l ball and count as zero.
NormValue level_norm(const NormValue& norm, std::uint32_t level) {
    if (norm.is_zero() || norm.exponent() <= static_cast<int>(level)) return NormValue::zero();
    return norm;
}

/// Norm of the level-l sample index m: the underlying index is m p^l.
NormValue sample_norm(std::uint64_t m, std::uint32_t p, std::uint32_t level) {
    if (m == 0) return NormValue::zero();
    int e = 0;
    while (m != 0) {
        m /= p;
        ++e;
    }
    return NormValue::power(e + static_cast<int>(level));
}

NormValue sample_distance(std::uint64_t x, std::uint64_t y, std::uint32_t p,
                          std::uint32_t level) {
    if (x == y) return NormValue::zero();
    const NormValue d = index_distance(x, y, p);
    return NormValue::power(d.exponent() + static_cast<int>(level));
}

std::complex<double> pairwise_sum(const std::complex<double>* v, std::size_t n) {
    if (n <= 8) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

struct ZStats {
    double max_abs_z = 0.0;
    double total_squared_z = 0.0;
    std::uint64_t within_2 = 0;
    std::uint64_t within_5 = 0;
    std::uint64_t entries = 0;
};

ZStats score_against(const Eigen::MatrixXd& model_matrix, const EmpiricalCovariance& emp) {
    ZStats st;
    for (Eigen::Index x = 0; x < model_matrix.rows(); ++x) {
        for (Eigen::Index y = 0; y < model_matrix.cols(); ++y) {
            const double diff = std::abs(emp.mean(x, y) - model_matrix(x, y));
            const double se = emp.std_error(x, y);
            double z;
            if (se == 0.0) {
                z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            } else {
                z = diff / se;
            }
            st.max_abs_z = std::max(st.max_abs_z, z);
            st.total_squared_z += z * z;
            if (z <= 2.0) ++st.within_2;
            if (z <= 5.0) ++st.within_5;
            ++st.entries;
        }
    }
    return st;
}

VariantScore to_score(CovarianceVariant v, const ZStats& st) {
    VariantScore s;
    s.variant = v;
    s.max_abs_z = st.max_abs_z;
    s.total_squared_z = st.total_squared_z;
    s.frac_within_2 = static_cast<double>(st.within_2) / static_cast<double>(st.entries);
    s.frac_within_5 = static_cast<double>(st.within_5) / static_cast<double>(st.entries);
    return s;
}

} // namespace

double rho(const NormValue& norm, const CovarianceModel& model) {
    validate(model);
    if (norm.is_zero()) return 0.0;
    const int e = norm.exponent();
    if (e < static_cast<int>(model.level) + 1)
        throw invalid_parameter("rho: norm not attainable at this level");
    const double pd = static_cast<double>(model.prime);
    const double lvl = static_cast<double>(model.level);

    if (model.alpha == 0.5) {
        // Analytic limit of the closed form; the paper-variant prefactor
        // p^{-l} leaves a pole at alpha = 1/2 once l >= 1.
        if (model.variant == CovarianceVariant::paper && model.level >= 1)
            throw invalid_parameter("rho: paper-variant closed form diverges at alpha = 1/2 "
                                    "for level >= 1");
        return (1.0 - 1.0 / pd) * (static_cast<double>(e) - lvl) + 1.0 / pd;
    }

    const double s = 2.0 * model.alpha - 1.0;
    const double denom = 1.0 - std::pow(pd, s);
    const double first = (1.0 - 1.0 / pd) / denom;
    const double second = (std::pow(pd, -2.0 * model.alpha) - 1.0) / denom;
    const double prefactor = model.variant == CovarianceVariant::paper
                                 ? std::pow(pd, -lvl)
                                 : std::pow(pd, s * lvl);
    return prefactor * first + second * std::pow(pd, s * static_cast<double>(e));
}

double covariance(const UltrametricIndex& x, const UltrametricIndex& y,
                  const CovarianceModel& model) {
    validate(model);
    if (x.prime() != model.prime || y.prime() != model.prime)
        throw invalid_parameter("covariance: prime mismatch");
    const NormValue nx = level_norm(x.norm(), model.level);
    const NormValue ny = level_norm(y.norm(), model.level);
    const NormValue nd = level_norm(index_distance(x, y), model.level);
    return rho(nx, model) + rho(ny, model) - rho(nd, model);
}

double variogram(const NormValue& h, const CovarianceModel& model) {
    return 2.0 * rho(h, model);
}

Eigen::MatrixXd model_covariance_matrix(const CovarianceModel& model, std::uint32_t J,
                                        std::uint64_t cap) {
    validate(model);
    if (J < model.level + 1)
        throw invalid_parameter("model_covariance_matrix: J must be at least level + 1");
    const std::uint64_t n = power_of(model.prime, J - model.level);
    if (n > cap) throw resource_limit("model_covariance_matrix: window exceeds the cap");

    std::vector<double> rho_of_sample(n);
    for (std::uint64_t m = 0; m < n; ++m)
        rho_of_sample[m] = rho(sample_norm(m, model.prime, model.level), model);

    Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::uint64_t x = 0; x < n; ++x) {
        out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 2.0 * rho_of_sample[x];
        for (std::uint64_t y = x + 1; y < n; ++y) {
            const double v = rho_of_sample[x] + rho_of_sample[y] -
                             rho(sample_distance(x, y, model.prime, model.level), model);
            out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = v;
            out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = v;
        }
    }
    return out;
}

std::complex<double> noise_coefficient(std::uint64_t seed, std::uint64_t realization,
                                       const WaveletIndex& w) {
    // Counter layout: realization | (k, j, ball). Ball indices fit 32 bits
    // for any window this artifact can hold in memory.
    const std::uint64_t ctr_hi = (static_cast<std::uint64_t>(w.k) << 40) |
                                 (static_cast<std::uint64_t>(w.j & 0xff) << 32) | w.ball;
    return gaussian_complex_unit(seed, realization, ctr_hi);
}

SimulationBatch simulate(const SimulationConfig& config) {
    if (!is_prime(config.prime)) throw invalid_parameter("p must be prime");
    if (!(config.alpha > 0.0)) throw invalid_parameter("alpha must be positive");
    if (config.J < config.level + 1)
        throw invalid_parameter("simulate: J must be at least level + 1");
    if (config.realizations < 1) throw invalid_parameter("simulate: need at least one realization");

    const double log_p = std::log(static_cast<double>(config.prime));
    const double level_scale = std::exp(-0.5 * static_cast<double>(config.level) * log_p);

    SimulationBatch batch;
    batch.config = config;
    batch.series.reserve(config.realizations);
    WaveletCoefficients coeffs(config.prime, config.J, config.level);

    for (std::uint64_t m = 0; m < config.realizations; ++m) {
        for (std::uint32_t j = config.level + 1; j <= config.J; ++j) {
            const double weight =
                std::exp(config.alpha * (static_cast<double>(j) - 1.0) * log_p);
            const std::uint64_t balls = power_of(config.prime, config.J - j);
            for (std::uint64_t b = 0; b < balls; ++b) {
                for (std::uint32_t k = 1; k < config.prime; ++k) {
                    const WaveletIndex w{k, j, b};
                    coeffs.set_detail(w, weight * noise_coefficient(config.seed, m, w));
                }
            }
        }
        SampledSeries f = inverse(coeffs);
        // Subtracting the sample-0 value implements the origin-ball mean
        // subtraction of the expansion and pins F(0) = 0 exactly.
        const std::complex<double> origin = f.samples[0] * level_scale;
        for (auto& s : f.samples) s = s * level_scale - origin;
        if (config.output == OutputMode::real_part)
            for (auto& s : f.samples) s = {s.real(), 0.0};
        batch.series.push_back(std::move(f));
    }
    return batch;
}

EmpiricalCovariance estimate(const SimulationBatch& batch) {
    const std::uint64_t m_count = batch.series.size();
    if (m_count < 2) throw invalid_parameter("estimate: need at least two realizations");
    const std::size_t n = batch.series.front().size();
    for (const auto& s : batch.series)
        if (s.size() != n) throw invalid_parameter("estimate: ragged batch");

    EmpiricalCovariance emp;
    emp.realizations = m_count;
    emp.config = batch.config;
    emp.mean.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    emp.std_error.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

    std::vector<std::complex<double>> summand(m_count);
    std::vector<double> sq_dev(m_count);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::uint64_t m = 0; m < m_count; ++m)
                summand[m] = std::conj(batch.series[m].samples[x]) * batch.series[m].samples[y];
            const std::complex<double> mean =
                pairwise_sum(summand.data(), m_count) / static_cast<double>(m_count);
            for (std::uint64_t m = 0; m < m_count; ++m)
                sq_dev[m] = std::norm(summand[m] - mean);
            const double var =
                pairwise_sum(sq_dev.data(), m_count) / static_cast<double>(m_count - 1);
            emp.mean(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = mean;
            emp.std_error(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
                std::sqrt(var / static_cast<double>(m_count));
        }
    }
    return emp;
}

VerificationReport verify(const CovarianceModel& model, const EmpiricalCovariance& empirical) {
    validate(model);
    if (empirical.mean.rows() != empirical.mean.cols() ||
        empirical.mean.rows() != empirical.std_error.rows() ||
        empirical.mean.cols() != empirical.std_error.cols())
        throw invalid_parameter("verify: malformed empirical covariance");
    const std::uint64_t n = static_cast<std::uint64_t>(empirical.mean.rows());
    const std::uint32_t J = model.level + power_exponent(n, model.prime);

    VerificationReport report;
    const ZStats primary = score_against(model_covariance_matrix(model, J), empirical);
    report.max_abs_z = primary.max_abs_z;
    report.frac_within_2 = static_cast<double>(primary.within_2) / static_cast<double>(primary.entries);
    report.frac_within_5 = static_cast<double>(primary.within_5) / static_cast<double>(primary.entries);

    if (model.level >= 1) {
        CovarianceModel paper_model = model;
        paper_model.variant = CovarianceVariant::paper;
        CovarianceModel alt_model = model;
        alt_model.variant = CovarianceVariant::alternative;
        const ZStats zp = score_against(model_covariance_matrix(paper_model, J), empirical);
        const ZStats za = score_against(model_covariance_matrix(alt_model, J), empirical);
        report.paper_score = to_score(CovarianceVariant::paper, zp);
        report.alternative_score = to_score(CovarianceVariant::alternative, za);
        report.winner = zp.total_squared_z <= za.total_squared_z
                            ? CovarianceVariant::paper
                            : CovarianceVariant::alternative;
    }
    return report;
}

WhitenessReport whiteness_check(const SimulationBatch& batch, double alpha) {
    if (batch.config.level != 0)
        throw invalid_parameter("whiteness_check: only level-0 batches recover plain noise");
    const std::uint64_t m_count = batch.series.size();
    if (m_count < 2) throw invalid_parameter("whiteness_check: need at least two realizations");

    const std::uint32_t p = batch.series.front().prime;
    const double log_p = std::log(static_cast<double>(p));

    // recovered[w][m]
    std::vector<std::vector<std::complex<double>>> recovered;
    for (std::uint64_t m = 0; m < m_count; ++m) {
        WaveletCoefficients coeffs = forward(batch.series[m]);
        if (m == 0)
            recovered.assign(coeffs.detail_count(),
                             std::vector<std::complex<double>>(m_count));
        std::size_t idx = 0;
        coeffs.for_each([&](const WaveletIndex& w, std::complex<double> c) {
            const double weight = std::exp(alpha * (static_cast<double>(w.j) - 1.0) * log_p);
            recovered[idx++][m] = c / weight;
        });
    }

    WhitenessReport report;
    report.coefficient_count = recovered.size();

    std::vector<std::complex<double>> means(recovered.size());
    std::vector<double> scratch(m_count);
    std::vector<std::complex<double>> cscratch(m_count);
    for (std::size_t w = 0; w < recovered.size(); ++w) {
        const auto& d = recovered[w];
        const std::complex<double> mean =
            pairwise_sum(d.data(), m_count) / static_cast<double>(m_count);
        means[w] = mean;
        for (std::uint64_t m = 0; m < m_count; ++m) scratch[m] = std::norm(d[m] - mean);
        const double var = pairwise_sum(scratch.data(), m_count) / static_cast<double>(m_count - 1);
        const double se_mean = std::sqrt(var / static_cast<double>(m_count));
        report.max_abs_mean_z = std::max(report.max_abs_mean_z, std::abs(mean) / se_mean);

        for (std::uint64_t m = 0; m < m_count; ++m) {
            const double sq = std::norm(d[m] - mean);
            scratch[m] = (sq - var) * (sq - var);
        }
        const double var_of_sq =
            pairwise_sum(scratch.data(), m_count) / static_cast<double>(m_count - 1);
        const double se_var = std::sqrt(var_of_sq / static_cast<double>(m_count));
        report.max_abs_variance_z =
            std::max(report.max_abs_variance_z, std::abs(var - 1.0) / se_var);
    }

    for (std::size_t w = 0; w < recovered.size(); ++w) {
        for (std::size_t w2 = w + 1; w2 < recovered.size(); ++w2) {
            for (std::uint64_t m = 0; m < m_count; ++m)
                cscratch[m] = std::conj(recovered[w][m]) * recovered[w2][m];
            const std::complex<double> corr =
                pairwise_sum(cscratch.data(), m_count) / static_cast<double>(m_count);
            for (std::uint64_t m = 0; m < m_count; ++m)
                scratch[m] = std::norm(cscratch[m] - corr);
            const double var =
                pairwise_sum(scratch.data(), m_count) / static_cast<double>(m_count - 1);
            const double se = std::sqrt(var / static_cast<double>(m_count));
            report.max_abs_correlation_z =
                std::max(report.max_abs_correlation_z, std::abs(corr) / se);
            ++report.pair_count;
        }
    }
    return report;
}

} // namespace padicts
