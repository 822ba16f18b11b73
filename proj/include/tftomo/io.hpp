#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tftomo/entropy.hpp"
#include "tftomo/signal.hpp"
#include "tftomo/tfdist.hpp"
#include "tftomo/tomography.hpp"

namespace tftomo {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

struct MatrixText {
  std::string text;
  std::size_t rows = 0;  // data rows, header excluded
  std::size_t cols = 0;  // data columns, axis column excluded
};

/// First row: column axis; first column: row axis; cell (0,0): `corner`.
MatrixText matrix_csv(std::string_view corner, std::span<const double> row_axis,
                      std::span<const double> col_axis, std::span<const double> values);
MatrixText matrix_csv(const TFDistribution& w);
MatrixText matrix_csv(const Tomogram& t);
MatrixText matrix_csv(const EntropySurface& s);

/// "t,s" header then one row per sample.
std::string signal_csv(const SampledSignal& s);
SampledSignal parse_signal_csv(std::string_view text);
SampledSignal import_signal(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::string sha256_hex(std::string_view data);

/// {"kind":..., "params":{...}, "grid":{"t_start","dt","n"}}
SampledSignal signal_from_json(const nlohmann::json& j);

}  // namespace tftomo
