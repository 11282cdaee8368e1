#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nhmono/branching.hpp"
#include "nhmono/dump.hpp"
#include "nhmono/flux.hpp"
#include "nhmono/spectra.hpp"
#include "nhmono/surface.hpp"

namespace nhmono::cli {

/// Invalid configuration; `key` is the dotted path of the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct ChernParams {
  nlohmann::json surface;  // validated surface spec
  int sheet = 1;
  int max_level = 4;
};

struct DivergenceParams {
  Box box;
  std::array<int, 3> grid{11, 11, 11};
  Real h = 1e-3;
  bool richardson = true;
};

struct LoopParams {
  nlohmann::json loop;
};

struct DensityParams {
  std::string kind = "disk";  // disk | plane
  std::vector<Real> radii;
  Real eps = 1e-6;
};

struct LimitParams {
  std::vector<Real> radii;
  int orientation = 1;
  int max_level = 4;
};

struct DumpParams {
  std::vector<ParamPoint> points;
  unsigned fields = kDumpB;
  int sheet = 1;
};

using StudyParams =
    std::variant<ChernParams, DivergenceParams, LoopParams, DensityParams, LimitParams, DumpParams>;

struct StudyConfig {
  ModelConfig model;
  BranchCut cut;
  nlohmann::json cut_spec;
  std::string study;
  StudyParams params;
  std::string output_path;
  std::string format = "csv";
  nlohmann::json echo;
};

struct RunOptions {
  std::filesystem::path out_dir;
  int threads = 1;
};

/// Parses and validates a configuration document. Throws ConfigError.
StudyConfig parse_config(const nlohmann::json& doc);

/// Runs one study and returns the report (also the process's stdout).
/// Throws ConfigError for bad study parameters and nhmono::Error for
/// numerical failures.
nlohmann::json run(const StudyConfig& config, const RunOptions& options = {});

/// Writes one configuration per acceptance criterion; returns the file paths.
std::vector<std::filesystem::path> emit_reproduction_suite(const std::filesystem::path& dir);

/// The suite configurations themselves, keyed by file name.
std::vector<std::pair<std::string, nlohmann::json>> reproduction_suite();

/// Surface named by a chern-study surface spec.
Surface surface_from_json(const nlohmann::json& spec, const std::string& key);

}  // namespace nhmono::cli
