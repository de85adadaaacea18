#pragma once

// Experiment runner shared by the command-line binary and the tests:
// flat key=value configuration with a stable hash, deterministic command
// entry points writing to caller-supplied streams, and an oracle battery.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "qdp/regev.hpp"
#include "qdp/solvers.hpp"

namespace qdp {

// Configuration as ordered key=value pairs. Values stay as strings so a
// config file round-trips losslessly; typed accessors parse on demand.
struct RunConfig {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  void set(const std::string& key, const std::string& value) { values[key] = value; }
  std::string get(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t seed() const;
};

// One `key=value` per line; blank lines and lines starting with '#' skipped.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string serialize_config(const RunConfig& config);

// 64-bit FNV-1a over the serialized form, as fixed-width hex.
std::string config_hash(const RunConfig& config);

// Command entry points. Primary output goes to `out`; commands with
// per-trial records also write a small JSON manifest (the only place a
// wall-clock timestamp appears). All return a process exit code.
int cmd_thresholds(const RunConfig& config, std::ostream& out);
int cmd_solve_qdp(const RunConfig& config, std::ostream& records, std::ostream& manifest);
int cmd_reduce(const RunConfig& config, std::ostream& records, std::ostream& manifest);
int cmd_pgm(const RunConfig& config, std::ostream& out);
int cmd_prange(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);

// Cross-checks every closed-form route against an independent dense-state or
// brute-force oracle; prints one status line per property. Returns 0 when
// everything agrees, 3 otherwise.
int cmd_verify(std::ostream& out);

// Opens output files per `out`/`format` keys, dispatches on the
// `subcommand` key, and maps exceptions to exit codes
// (1 usage, 2 budget, 3 verification).
int run_cli(const RunConfig& config);

}  // namespace qdp
