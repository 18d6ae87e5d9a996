// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "auris/common/error.hpp"
#include "common.hpp"

namespace auris::cli {

void register_build_dataset(CLI::App& app, const GlobalOptions& global);
void register_train(CLI::App& app, const GlobalOptions& global);
void register_eval(CLI::App& app, const GlobalOptions& global);
void register_infer(CLI::App& app, const GlobalOptions& global);
void register_bench(CLI::App& app, const GlobalOptions& global);
void register_inspect(CLI::App& app, const GlobalOptions& global);

}  // namespace auris::cli

int main(int argc, char** argv) {
  using namespace auris;
  using namespace auris::cli;

  CLI::App app{"auris - acoustic scene recognition toolkit"};
  app.require_subcommand(1);
  app.set_config("--config")
      ->envname("AURIS_CONFIG")
      ->description("Read option defaults from a TOML/INI config file");
  app.allow_config_extras(false);  // unknown keys are rejected

  GlobalOptions global;
  app.add_option("--seed", global.seed,
                 "Seed for every random decision in the run")
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "Cap on worker threads for per-clip parallel stages")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));

  register_build_dataset(app, global);
  register_train(app, global);
  register_eval(app, global);
  register_infer(app, global);
  register_bench(app, global);
  register_inspect(app, global);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const AudioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DatasetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const WeightsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const TrainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
