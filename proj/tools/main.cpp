#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <thread>

#include <CLI11.hpp>

#include "study.hpp"

namespace {

int resolve_threads(int flag) {
  int n = flag;
  if (n < 0) {
    n = 1;
    if (const char* env = std::getenv("MC_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0) n = static_cast<int>(v);
      else std::cerr << "warning: ignoring MC_THREADS='" << env << "'\n";
    }
  }
  if (n == 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return n;
}

nlohmann::json read_document(const std::string& source) {
  try {
    if (source == "-") return nlohmann::json::parse(std::cin);
    std::ifstream in(source);
    if (!in) throw nhmono::cli::ConfigError("config", "cannot open '" + source + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw nhmono::cli::ConfigError("config", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berry curvature and Chern flux studies for the non-Hermitian Dirac model"};
  app.require_subcommand(1);
  int threads = -1;
  bool verbose = false;
  std::string out_dir;
  app.add_option("--threads", threads, "worker threads (0 = auto; default from MC_THREADS or 1)");
  app.add_flag("-v,--verbose", verbose, "log progress to stderr");

  auto* run_cmd = app.add_subcommand("run", "run one study from a JSON config (path or '-')");
  std::string config_path;
  run_cmd->add_option("config", config_path, "config file, or - for stdin")->required();
  run_cmd->add_option("--out-dir", out_dir, "directory for data files");

  auto* suite_cmd = app.add_subcommand("suite", "write the reproduction configs into a directory");
  std::string suite_dir;
  suite_cmd->add_option("dir", suite_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const auto config = nhmono::cli::parse_config(read_document(config_path));
      nhmono::cli::RunOptions options;
      options.out_dir = out_dir;
      options.threads = resolve_threads(threads);
      if (verbose) std::cerr << "running " << config.study << " with " << options.threads << " thread(s)\n";
      const auto report = nhmono::cli::run(config, options);
      std::cout << report.dump(2) << '\n';
      if (verbose) std::cerr << "done in " << report.at("wall_time_s").get<double>() << " s\n";
    } else {
      const auto written = nhmono::cli::emit_reproduction_suite(suite_dir);
      nlohmann::json listing = nlohmann::json::array();
      for (const auto& p : written) listing.push_back(p.string());
      std::cout << listing.dump(2) << '\n';
      if (verbose) std::cerr << "wrote " << written.size() << " configs\n";
    }
  } catch (const nhmono::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nhmono::Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == nhmono::ErrorKind::InvalidArgument ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
