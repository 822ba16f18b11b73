#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "tftomo/entropy.hpp"
#include "tftomo/error.hpp"
#include "tftomo/signal.hpp"
#include "tftomo/tomography.hpp"

namespace tftomo {

enum class Output { Wvd, Pwvd, TomogramDirect, TomogramRadon, Diff, Entropy, Surface };
const char* output_name(Output o);

struct PipelineConfig {
  SampledSignal signal;
  std::optional<std::size_t> window_length;  // Hamming; nullopt with window_none
  bool window_none = false;
  AngleGrid angles = AngleGrid::uniform(181);
  std::optional<QuadratureGrid> quad;
  FrftMethod method = FrftMethod::Fast;
  std::set<Output> outputs;
  std::filesystem::path output_dir = "out";
  std::optional<SurfaceSpec> surface;
};

/// Relative paths inside the config resolve against base_dir.
PipelineConfig parse_pipeline_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Surface-only run: {"surface":{...}, "output_dir":..} or a bare surface spec.
PipelineConfig load_surface_config(const std::filesystem::path& path);

SampledSignal load_signal_config(const std::filesystem::path& path);
SurfaceSpec parse_surface_spec(const nlohmann::json& j);

/// Computes the requested outputs, checks the numerical contracts, writes
/// the CSV files and manifest.json. Returns the manifest.
nlohmann::json run_pipeline(const PipelineConfig& cfg);

/// Writes signal.csv and a manifest.
nlohmann::json write_signal(const SampledSignal& s, const std::filesystem::path& dir);

/// Recomputes every checksum listed in dir/manifest.json. Throws
/// ErrorKind::Invariant on mismatch.
void verify_manifest(const std::filesystem::path& dir);

/// 0 ok, 2 config, 3 invariant, 4 I/O.
int exit_code(ErrorKind k);
const char* kind_name(ErrorKind k);

}  // namespace tftomo
