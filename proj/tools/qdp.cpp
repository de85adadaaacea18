#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qdp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Coding-theory experiment toolkit: decoding thresholds, "
               "measurement spectra, and short-codeword reductions"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> pending;

  // Every flag maps straight onto a config key; flags override file entries.
  const std::vector<std::pair<const char*, const char*>> options = {
      {"--field", "field"},       {"--n", "n"},
      {"--k", "k"},               {"--omega", "omega"},
      {"--theta", "theta"},       {"--trials", "trials"},
      {"--seed", "seed"},         {"--budget", "budget"},
      {"--out", "out"},           {"--format", "format"},
      {"--workers", "workers"},   {"--epsilon", "epsilon"},
      {"--variant", "variant"},   {"--code", "code"},
      {"--distribution", "distribution"},
      {"--rate-min", "rate_min"}, {"--rate-max", "rate_max"},
      {"--omega-min", "omega_min"}, {"--omega-max", "omega_max"},
      {"--points", "points"}};

  const std::vector<std::pair<const char*, const char*>> subcommands = {
      {"thresholds", "emit the decoding-regime bound curves over a rate grid"},
      {"solve-qdp", "run the polynomial-time decoder on sampled instances"},
      {"reduce", "run the short-codeword reduction pipeline"},
      {"pgm", "compute measurement spectra and final weight distributions"},
      {"prange", "compare the reduction against information-set search"},
      {"verify", "cross-check closed forms against dense and brute-force oracles"},
      {"sweep", "decoder success curve across the noise range"}};

  std::string chosen;
  for (const auto& [name, description] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "configuration file (key=value lines)");
    for (const auto& [flag, key] : options)
      sub->add_option_function<std::string>(
          flag,
          [&pending, key = std::string(key)](const std::string& value) { pending[key] = value; },
          std::string("sets config key '") + key + "'");
    sub->callback([&chosen, name = std::string(name)] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  qdp::RunConfig config;
  if (!config_path.empty()) {
    try {
      config = qdp::load_config_file(config_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  for (const auto& [key, value] : pending) config.set(key, value);
  config.set("subcommand", chosen);
  return qdp::run_cli(config);
}
