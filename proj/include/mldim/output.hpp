#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mldim {

inline constexpr const char* kToolName = "mldim";
inline constexpr const char* kToolVersion = "0.1.0";

/// Reals are written with 6 significant digits, '.' decimal point.
std::string format_real(double v);

/// RFC-4180 quoting: fields containing commas, quotes, or newlines are quoted.
std::string csv_field(const std::string& raw);
std::string csv_row(const std::vector<std::string>& fields);

std::string sha256_hex(std::span<const unsigned char> data);
std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::string& path);

/// What produced a set of output files. Serialized next to them as
/// manifest.json; identical manifests imply byte-identical outputs.
struct RunManifest {
    std::string command;
    std::string input_path;
    std::string input_format;
    std::string input_sha256;
    std::map<std::string, std::string> params;
    std::vector<std::string> outputs;

    std::string to_json() const;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mldim
