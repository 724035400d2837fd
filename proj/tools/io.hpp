#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace padicts::cli {

/// CSV problem tied to a 1-based line number; mapped to exit code 3.
struct csv_error {
    std::size_t line;
    std::string message;
};

/// Filesystem problem; mapped to exit code 5.
struct io_error {
    std::string message;
};

std::string format_double(double v); // 17 significant digits, round-trip safe

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_string(const std::string& bytes); // "fnv1a64:<hex>"

/// A parsed `index,value` or `index,re,im` series file. Indices must run
/// 0,1,2,... in order.
std::vector<std::complex<double>> parse_series_csv(const std::string& contents);

std::string series_csv(const std::vector<std::complex<double>>& samples);

/// Stacked realizations: `realization,index,re,im`.
std::string batch_csv(const std::vector<std::vector<std::complex<double>>>& batch);

struct CoefficientRow {
    std::uint32_t k = 0;
    std::uint32_t j = 0;
    std::uint64_t ball = 0;
    std::complex<double> value;
};

/// Coefficient table `k,j,ball,re,im`; the mean row is flagged k=0,j=0.
std::string coefficients_csv(const std::vector<CoefficientRow>& rows);
std::vector<CoefficientRow> parse_coefficients_csv(const std::string& contents);

/// Run manifest: command, parameters, input digest, artifact version.
/// Serialized with sorted keys so equal manifests are equal bytes.
nlohmann::json make_manifest(const std::string& command, const nlohmann::json& parameters,
                             const std::optional<std::string>& input_digest);

void write_manifest(const std::string& output_path, const nlohmann::json& manifest);

} // namespace padicts::cli
