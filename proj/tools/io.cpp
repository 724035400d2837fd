#include "io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "padicts/version.hpp"

namespace padicts::cli {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> lines_of(const std::string& contents) {
    std::vector<std::string> out;
    std::stringstream ss(contents);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

double parse_double(const std::string& field, std::size_t line) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw csv_error{line, "expected a number, got '" + field + "'"};
    return v;
}

std::uint64_t parse_unsigned(const std::string& field, std::size_t line) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0' || field.find('-') != std::string::npos)
        throw csv_error{line, "expected a nonnegative integer, got '" + field + "'"};
    return v;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error{"cannot open '" + path + "' for reading"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error{"cannot open '" + path + "' for writing"};
    out << contents;
    if (!out) throw io_error{"failed writing '" + path + "'"};
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_string(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::vector<std::complex<double>> parse_series_csv(const std::string& contents) {
    const auto lines = lines_of(contents);
    if (lines.empty()) throw csv_error{1, "empty input"};
    const std::string& header = lines.front();
    bool complex_form;
    if (header == "index,value") {
        complex_form = false;
    } else if (header == "index,re,im") {
        complex_form = true;
    } else {
        throw csv_error{1, "header must be 'index,value' or 'index,re,im'"};
    }

    std::vector<std::complex<double>> samples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto fields = split(lines[i], ',');
        const std::size_t want = complex_form ? 3 : 2;
        if (fields.size() != want)
            throw csv_error{i + 1, "expected " + std::to_string(want) + " fields"};
        const std::uint64_t idx = parse_unsigned(fields[0], i + 1);
        if (idx != samples.size())
            throw csv_error{i + 1, "indices must run 0,1,2,... in order"};
        const double re = parse_double(fields[1], i + 1);
        const double im = complex_form ? parse_double(fields[2], i + 1) : 0.0;
        samples.push_back({re, im});
    }
    if (samples.empty()) throw csv_error{lines.size(), "no data rows"};
    return samples;
}

std::string series_csv(const std::vector<std::complex<double>>& samples) {
    std::string out = "index,re,im\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(samples[i].real());
        out += ',';
        out += format_double(samples[i].imag());
        out += '\n';
    }
    return out;
}

std::string batch_csv(const std::vector<std::vector<std::complex<double>>>& batch) {
    std::string out = "realization,index,re,im\n";
    for (std::size_t m = 0; m < batch.size(); ++m) {
        for (std::size_t i = 0; i < batch[m].size(); ++i) {
            out += std::to_string(m);
            out += ',';
            out += std::to_string(i);
            out += ',';
            out += format_double(batch[m][i].real());
            out += ',';
            out += format_double(batch[m][i].imag());
            out += '\n';
        }
    }
    return out;
}

std::string coefficients_csv(const std::vector<CoefficientRow>& rows) {
    std::string out = "k,j,ball,re,im\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.j);
        out += ',';
        out += std::to_string(r.ball);
        out += ',';
        out += format_double(r.value.real());
        out += ',';
        out += format_double(r.value.imag());
        out += '\n';
    }
    return out;
}

std::vector<CoefficientRow> parse_coefficients_csv(const std::string& contents) {
    const auto lines = lines_of(contents);
    if (lines.empty()) throw csv_error{1, "empty input"};
    if (lines.front() != "k,j,ball,re,im")
        throw csv_error{1, "header must be 'k,j,ball,re,im'"};
    std::vector<CoefficientRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 5) throw csv_error{i + 1, "expected 5 fields"};
        CoefficientRow r;
        r.k = static_cast<std::uint32_t>(parse_unsigned(fields[0], i + 1));
        r.j = static_cast<std::uint32_t>(parse_unsigned(fields[1], i + 1));
        r.ball = parse_unsigned(fields[2], i + 1);
        r.value = {parse_double(fields[3], i + 1), parse_double(fields[4], i + 1)};
        rows.push_back(r);
    }
    if (rows.empty()) throw csv_error{lines.size(), "no data rows"};
    return rows;
}

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& parameters,
                             const std::optional<std::string>& input_digest) {
    nlohmann::json m;
    m["schema"] = "v1";
    m["artifact_version"] = padicts::version_string;
    m["command"] = command;
    m["parameters"] = parameters;
    m["input_digest"] = input_digest.has_value() ? nlohmann::json(*input_digest)
                                                 : nlohmann::json(nullptr);
    return m;
}

void write_manifest(const std::string& output_path, const nlohmann::json& manifest) {
    write_file(output_path + ".manifest.json", manifest.dump(2) + "\n");
}

} // namespace padicts::cli
