#include "qdp/cli.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qdp/qstate.hpp"

namespace qdp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string now_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

const FiniteField& field_from(const RunConfig& config) {
  return field_cache_parse(config.get("field", "2"));
}

long need_int(const RunConfig& config, const std::string& key) {
  if (!config.has(key)) throw std::invalid_argument("missing required option --" + key);
  return config.get_int(key, 0);
}

double need_double(const RunConfig& config, const std::string& key) {
  if (!config.has(key)) throw std::invalid_argument("missing required option --" + key);
  return config.get_double(key, 0);
}

std::string format_of(const RunConfig& config, const std::string& fallback) {
  const std::string format = config.get("format", fallback);
  if (format != "csv" && format != "json")
    throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
  return format;
}

const char* outcome_name(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::Recovered: return "Recovered";
    case SolveOutcome::WrongCodeword: return "WrongCodeword";
    default: return "Abstain";
  }
}

const char* outcome_name(ReductionOutcome outcome) {
  switch (outcome) {
    case ReductionOutcome::Codeword: return "Codeword";
    case ReductionOutcome::Zero: return "Zero";
    case ReductionOutcome::Bottom: return "Bottom";
    default: return "Abort";
  }
}

ordered_json manifest_base(const RunConfig& config, const char* command) {
  ordered_json j;
  j["command"] = command;
  j["config"] = config_hash(config);
  ordered_json echo;
  for (const auto& [key, value] : config.values) echo[key] = value;
  j["configuration"] = echo;
  j["generated_at"] = now_iso8601();
  return j;
}

// Runs `body(t)` for t in [0, trials) on a pool of `workers` threads.  Trial
// results must be written to per-trial slots; the first exception wins.
void run_trials(int trials, int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto drain = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        body(t);
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_lock);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

long RunConfig::get_int(const std::string& key, long fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("option --" + key + ": '" + it->second + "' is not an integer");
  }
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("option --" + key + ": '" + it->second + "' is not a number");
  }
}

std::uint64_t RunConfig::seed() const {
  const auto it = values.find("seed");
  if (it == values.end()) return 1;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("option --seed: '" + it->second + "' is not an integer");
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key=value");
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
    config.set(key, trim(stripped.substr(eq + 1)));
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const auto& [key, value] : config.values) out += key + "=" + value + "\n";
  return out;
}

std::string config_hash(const RunConfig& config) {
  const std::string text = serialize_config(config);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

int cmd_thresholds(const RunConfig& config, std::ostream& out) {
  const FiniteField& f = field_from(config);
  const unsigned q = f.q();
  const double rate_min = config.get_double("rate_min", 0.05);
  const double rate_max = config.get_double("rate_max", 0.95);
  const long points = config.get_int("points", 19);
  if (points < 2 || !(rate_min > 0) || !(rate_max < 1) || !(rate_min < rate_max))
    throw std::invalid_argument("bad rate grid: need >= 2 points with 0 < min < max < 1");

  std::vector<ThresholdSet> rows;
  for (long i = 0; i < points; ++i) {
    const double rate = rate_min + (rate_max - rate_min) * i / (points - 1);
    rows.push_back(thresholds(q, rate));
  }
  const double cap = (q - 1.0) / q + 1e-12;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ThresholdSet& row = rows[i];
    const bool in_range = row.easy_bound >= -1e-12 && row.classical_bound >= -1e-12 &&
                          row.tractable_bound >= -1e-12 && row.easy_bound <= cap &&
                          row.classical_bound <= cap && row.tractable_bound <= cap;
    const bool ordered = row.easy_bound <= row.tractable_bound + 1e-9;
    const bool monotone = i == 0 || (row.easy_bound <= rows[i - 1].easy_bound + 1e-9 &&
                                     row.classical_bound <= rows[i - 1].classical_bound + 1e-9 &&
                                     row.tractable_bound <= rows[i - 1].tractable_bound + 1e-9);
    if (!in_range || !ordered || !monotone)
      throw std::logic_error("threshold sanity check failed at rate " + fmt_double(row.rate));
  }

  const std::string hash = config_hash(config);
  if (format_of(config, "csv") == "csv") {
    out << "# config " << hash << "\n";
    out << "q,rate,easy_bound,classical_bound,tractable_bound\n";
    for (const ThresholdSet& row : rows)
      out << q << ',' << fmt_double(row.rate) << ',' << fmt_double(row.easy_bound) << ','
          << fmt_double(row.classical_bound) << ',' << fmt_double(row.tractable_bound) << "\n";
  } else {
    ordered_json j;
    j["command"] = "thresholds";
    j["config"] = hash;
    j["rows"] = ordered_json::array();
    for (const ThresholdSet& row : rows) {
      ordered_json r;
      r["q"] = q;
      r["rate"] = row.rate;
      r["easy_bound"] = row.easy_bound;
      r["classical_bound"] = row.classical_bound;
      r["tractable_bound"] = row.tractable_bound;
      j["rows"].push_back(r);
    }
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_solve_qdp(const RunConfig& config, std::ostream& records, std::ostream& manifest) {
  const FiniteField& f = field_from(config);
  const int n = static_cast<int>(need_int(config, "n"));
  const int k = static_cast<int>(need_int(config, "k"));
  const double omega = need_double(config, "omega");
  const int trials = static_cast<int>(config.get_int("trials", 100));
  const int workers = static_cast<int>(config.get_int("workers", 1));
  const std::uint64_t seed = config.seed();
  const std::string format = format_of(config, "json");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  const bool phase_mode = config.has("theta");
  const double theta = config.get_double("theta", 0.0);
  if (phase_mode && f.q() != 2)
    throw std::invalid_argument("phase readout requires the binary field");

  struct TrialRow {
    SolveOutcome outcome = SolveOutcome::Abstain;
    int revealed = 0;
    bool rank_ok = false;
  };
  std::vector<TrialRow> rows(trials);

  run_trials(trials, workers, [&](int t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    TrialRow row;
    if (!phase_mode) {
      const QdpInstance inst = sample_instance(f.q(), n, k, omega, rng);
      const SolveReport report = solve_usd(inst);
      row.outcome = report.outcome;
      row.revealed = report.revealed_count;
      row.rank_ok = report.rank_ok;
    } else {
      // Phase-profile variant: conclusive per-coordinate readout of a random
      // codeword, then linear-algebra recovery from the revealed positions.
      const BinaryPhaseProfile profile(omega, theta);
      const LinearCode code = random_code(f, n, k, rng);
      const GfVec message = random_vector(f, k, rng);
      const GfVec codeword = encode(code, message);
      std::vector<int> kept;
      for (int i = 0; i < n; ++i)
        if (phase_usd_sample(profile, codeword(i), rng).accepted) kept.push_back(i);
      const LinearCode restricted = puncture(code, kept);
      GfVec word(1, static_cast<int>(kept.size()));
      for (std::size_t i = 0; i < kept.size(); ++i) word(i) = codeword(kept[i]);
      const auto solved = solve_left(f, restricted.gen, word);
      row.revealed = static_cast<int>(kept.size());
      row.rank_ok = solved.has_value();
      if (solved)
        row.outcome = *solved == message ? SolveOutcome::Recovered : SolveOutcome::WrongCodeword;
    }
    rows[t] = row;
  });

  const std::string hash = config_hash(config);
  int recovered = 0, wrong = 0, abstain = 0;
  for (const TrialRow& row : rows) {
    if (row.outcome == SolveOutcome::Recovered) ++recovered;
    else if (row.outcome == SolveOutcome::WrongCodeword) ++wrong;
    else ++abstain;
  }

  if (format == "csv") {
    records << "# config " << hash << "\n";
    records << "trial,outcome,revealed_count,rank_ok,success\n";
    for (int t = 0; t < trials; ++t)
      records << t << ',' << outcome_name(rows[t].outcome) << ',' << rows[t].revealed << ','
              << (rows[t].rank_ok ? 1 : 0) << ','
              << (rows[t].outcome == SolveOutcome::Recovered ? 1 : 0) << "\n";
  } else {
    ordered_json head;
    head["command"] = "solve-qdp";
    head["config"] = hash;
    records << head.dump() << "\n";
    for (int t = 0; t < trials; ++t) {
      ordered_json r;
      r["trial"] = t;
      r["outcome"] = outcome_name(rows[t].outcome);
      r["revealed_count"] = rows[t].revealed;
      r["rank_ok"] = rows[t].rank_ok;
      r["success"] = rows[t].outcome == SolveOutcome::Recovered;
      records << r.dump() << "\n";
    }
  }

  ordered_json m = manifest_base(config, "solve-qdp");
  m["trials"] = trials;
  m["recovered"] = recovered;
  m["wrong_codeword"] = wrong;
  m["abstain"] = abstain;
  m["success_rate"] = static_cast<double>(recovered) / trials;
  manifest << m.dump(2) << "\n";
  return 0;
}

int cmd_reduce(const RunConfig& config, std::ostream& records, std::ostream& manifest) {
  const FiniteField& f = field_from(config);
  const int n = static_cast<int>(need_int(config, "n"));
  const int k_prime = static_cast<int>(need_int(config, "k"));
  const double omega_prime = need_double(config, "omega");
  const int trials = static_cast<int>(config.get_int("trials", 100));
  const int workers = static_cast<int>(config.get_int("workers", 1));
  const double epsilon = config.get_double("epsilon", -1.0);
  const std::uint64_t seed = config.seed();
  const std::string format = format_of(config, "json");
  const std::string variant = config.get("variant", "usd");
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  Rng instance_rng(mix_seed(seed, 0));
  const ScpInstance scp = random_scp_instance(f.q(), n, k_prime, omega_prime, instance_rng);
  const std::string hash = config_hash(config);

  if (variant == "counterexample") {
    const ReductionReport report =
        pgm_counterexample_run(scp.decode, NoiseProfile(f.q(), scp.omega));
    if (format == "csv") {
      records << "# config " << hash << "\n";
      records << "outcome,branch_prob\n";
      records << outcome_name(report.outcome) << ',' << fmt_double(report.branch_prob) << "\n";
    } else {
      ordered_json head;
      head["command"] = "reduce";
      head["config"] = hash;
      records << head.dump() << "\n";
      ordered_json r;
      r["outcome"] = outcome_name(report.outcome);
      r["branch_prob"] = report.branch_prob;
      records << r.dump() << "\n";
    }
    ordered_json m = manifest_base(config, "reduce");
    m["variant"] = "counterexample";
    m["branch_prob"] = report.branch_prob;
    manifest << m.dump(2) << "\n";
    return 0;
  }
  if (variant != "usd")
    throw std::invalid_argument("unknown variant '" + variant + "' (expected usd or counterexample)");

  std::vector<ReductionReport> reports(trials);
  run_trials(trials, workers, [&](int t) {
    Rng rng(mix_seed(seed, 1 + static_cast<std::uint64_t>(t)));
    reports[t] = reduce_usd_path(scp, rng, epsilon);
  });

  int codewords = 0, zeros = 0, successes = 0;
  long long weight_sum = 0;
  for (const ReductionReport& report : reports) {
    if (report.outcome == ReductionOutcome::Codeword) {
      ++codewords;
      weight_sum += report.weight;
      if (report.success) ++successes;
    } else if (report.outcome == ReductionOutcome::Zero) {
      ++zeros;
    }
  }

  if (format == "csv") {
    records << "# config " << hash << "\n";
    records << "trial,outcome,j_size,j_draws,weight,success\n";
    for (int t = 0; t < trials; ++t)
      records << t << ',' << outcome_name(reports[t].outcome) << ',' << reports[t].j_size << ','
              << reports[t].j_draws << ',' << reports[t].weight << ','
              << (reports[t].success ? 1 : 0) << "\n";
  } else {
    ordered_json head;
    head["command"] = "reduce";
    head["config"] = hash;
    records << head.dump() << "\n";
    for (int t = 0; t < trials; ++t) {
      ordered_json r;
      r["trial"] = t;
      r["outcome"] = outcome_name(reports[t].outcome);
      r["j_size"] = reports[t].j_size;
      r["j_draws"] = reports[t].j_draws;
      r["weight"] = reports[t].weight;
      r["success"] = reports[t].success;
      records << r.dump() << "\n";
    }
  }

  ordered_json m = manifest_base(config, "reduce");
  m["variant"] = "usd";
  m["trials"] = trials;
  m["codewords"] = codewords;
  m["zeros"] = zeros;
  m["successes"] = successes;
  m["mean_weight"] = codewords > 0 ? static_cast<double>(weight_sum) / codewords : 0.0;
  m["mean_weight_fraction"] =
      codewords > 0 ? static_cast<double>(weight_sum) / codewords / n : 0.0;
  m["short_codeword_bound"] = (f.q() - 1.0) * (n - k_prime) / (f.q() * n);
  manifest << m.dump(2) << "\n";
  return 0;
}

int cmd_pgm(const RunConfig& config, std::ostream& out) {
  const FiniteField& f = field_from(config);
  const int n = static_cast<int>(need_int(config, "n"));
  const int k = static_cast<int>(need_int(config, "k"));
  const double omega = need_double(config, "omega");
  const std::uint64_t budget = static_cast<std::uint64_t>(
      config.get_int("budget", static_cast<long>(std::uint64_t{1} << 20)));
  const std::string code_kind = config.get("code", "random");
  const std::string dist_kind = config.get("distribution", "none");
  const std::string format = format_of(config, "json");

  LinearCode code{&f, GfMat()};
  if (code_kind == "repetition") {
    if (k != 1) throw std::invalid_argument("repetition code requires --k 1");
    code.gen = GfMat::Ones(1, n);
  } else if (code_kind == "random") {
    Rng rng(config.seed());
    code = random_code(f, n, k, rng);
    while (rank_of(f, code.gen) < k) code = random_code(f, n, k, rng);
  } else {
    throw std::invalid_argument("unknown code kind '" + code_kind + "'");
  }

  const NoiseProfile profile(f.q(), omega);
  const PgmSpectrum spectrum = pgm_spectrum_fast(code, profile, budget);

  WeightDistribution dist;
  if (dist_kind == "plain") dist = pgm_final_distribution(code, profile);
  else if (dist_kind == "tweaked") dist = pgm_tweaked_distribution(code, profile);
  else if (dist_kind != "none")
    throw std::invalid_argument("unknown distribution '" + dist_kind + "'");

  const std::string hash = config_hash(config);
  const bool emit_norms = spectrum.norms.size() <= 4096;
  if (format == "csv") {
    out << "# config " << hash << "\n";
    if (dist_kind != "none") {
      out << "t,p\n";
      for (std::size_t t = 0; t < dist.p.size(); ++t)
        out << t << ',' << fmt_double(dist.p[t]) << "\n";
    } else {
      if (!emit_norms)
        throw std::invalid_argument("spectrum too large for csv output; use --format json");
      out << "s,norm\n";
      for (std::size_t s = 0; s < spectrum.norms.size(); ++s)
        out << s << ',' << fmt_double(spectrum.norms[s]) << "\n";
    }
  } else {
    ordered_json j;
    j["command"] = "pgm";
    j["config"] = hash;
    j["field"] = f.descriptor();
    j["n"] = n;
    j["k"] = k;
    j["omega"] = omega;
    j["n0"] = spectrum.n0;
    j["p_pgm"] = spectrum.p_pgm;
    if (emit_norms) j["norms"] = spectrum.norms;
    if (dist_kind != "none") {
      ordered_json d;
      d["kind"] = dist_kind;
      d["p"] = dist.p;
      d["p_zero"] = dist.p_zero;
      d["branch_prob"] = dist.branch_prob;
      j["distribution"] = d;
    }
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_prange(const RunConfig& config, std::ostream& out) {
  const FiniteField& f = field_from(config);
  const int n = static_cast<int>(need_int(config, "n"));
  const int k_prime = static_cast<int>(need_int(config, "k"));
  const double omega_prime = need_double(config, "omega");
  const int trials = static_cast<int>(config.get_int("trials", 50));
  const std::uint64_t seed = config.seed();
  const std::string format = format_of(config, "json");
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  Rng instance_rng(mix_seed(seed, 0));
  const ScpInstance scp = random_scp_instance(f.q(), n, k_prime, omega_prime, instance_rng);
  Rng rng(mix_seed(seed, 1));
  const PrangeComparison cmp = compare_prange(scp, rng, trials);
  const int target = prange_target_weight(f.q(), scp.decode.k());

  const std::string hash = config_hash(config);
  if (format == "csv") {
    out << "# config " << hash << "\n";
    out << "weight,prange_count,usd_count\n";
    const std::size_t size = std::max(cmp.prange_hist.size(), cmp.usd_hist.size());
    for (std::size_t w = 0; w < size; ++w) {
      const std::uint64_t a = w < cmp.prange_hist.size() ? cmp.prange_hist[w] : 0;
      const std::uint64_t b = w < cmp.usd_hist.size() ? cmp.usd_hist[w] : 0;
      if (a != 0 || b != 0) out << w << ',' << a << ',' << b << "\n";
    }
  } else {
    ordered_json j;
    j["command"] = "prange";
    j["config"] = hash;
    j["trials"] = cmp.trials;
    j["target_weight"] = target;
    j["prange_hits"] = cmp.prange_hits;
    j["usd_codewords"] = cmp.usd_codewords;
    j["usd_successes"] = cmp.usd_successes;
    auto hist_pairs = [](const std::vector<std::uint64_t>& hist) {
      ordered_json a = ordered_json::array();
      for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w] != 0) a.push_back({w, hist[w]});
      return a;
    };
    j["prange_hist"] = hist_pairs(cmp.prange_hist);
    j["usd_hist"] = hist_pairs(cmp.usd_hist);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const FiniteField& f = field_from(config);
  const int n = static_cast<int>(need_int(config, "n"));
  const int k = static_cast<int>(need_int(config, "k"));
  const double omega_min = config.get_double("omega_min", 0.02);
  const double omega_max = config.get_double("omega_max", 0.34);
  const long points = config.get_int("points", 9);
  const int trials = static_cast<int>(config.get_int("trials", 200));
  const std::string format = format_of(config, "csv");
  const double cap = (f.q() - 1.0) / f.q();
  if (points < 1 || !(omega_min >= 0) || !(omega_max < cap) || omega_min > omega_max)
    throw std::invalid_argument("bad omega grid");
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  std::vector<double> grid;
  for (long i = 0; i < points; ++i)
    grid.push_back(points == 1 ? omega_min
                               : omega_min + (omega_max - omega_min) * i / (points - 1));
  Rng rng(config.seed());
  const std::vector<SweepRow> rows = tractability_sweep(f.q(), n, k, grid, trials, rng);

  const std::string hash = config_hash(config);
  if (format == "csv") {
    out << "# config " << hash << "\n";
    out << "omega,trials,successes,p_pgm,easy_bound,tractable_bound\n";
    for (const SweepRow& row : rows)
      out << fmt_double(row.omega) << ',' << row.trials << ',' << row.successes << ','
          << fmt_double(row.p_pgm) << ',' << fmt_double(row.easy_bound) << ','
          << fmt_double(row.tractable_bound) << "\n";
  } else {
    ordered_json j;
    j["command"] = "sweep";
    j["config"] = hash;
    j["rows"] = ordered_json::array();
    for (const SweepRow& row : rows) {
      ordered_json r;
      r["omega"] = row.omega;
      r["trials"] = row.trials;
      r["successes"] = row.successes;
      r["p_pgm"] = row.p_pgm;
      r["easy_bound"] = row.easy_bound;
      r["tractable_bound"] = row.tractable_bound;
      j["rows"].push_back(r);
    }
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out) {
  struct Property {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<std::pair<unsigned, unsigned>> field_specs = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};

  std::vector<Property> properties;

  properties.push_back({"dual-parameter involution", [&] {
    for (const auto& [p, s] : field_specs) {
      const unsigned q = field_cache(p, s).q();
      for (int i = 1; i < 300; ++i) {
        const double omega = (q - 1.0) / q * i / 300.0;
        if (std::abs(omega_perp(q, omega_perp(q, omega)) - omega) > 1e-12) return false;
      }
    }
    return true;
  }});

  properties.push_back({"character orthogonality", [&] {
    for (const auto& [p, s] : field_specs) {
      const FiniteField& f = field_cache(p, s);
      for (gf_t y = 0; y < f.q(); ++y) {
        std::complex<double> sum = 0;
        for (gf_t x = 0; x < f.q(); ++x) sum += f.character(x, y);
        const double expect = y == 0 ? static_cast<double>(f.q()) : 0.0;
        if (std::abs(sum - expect) > 1e-9) return false;
      }
    }
    return true;
  }});

  properties.push_back({"transform unitarity", [&] {
    for (const auto& [p, s] : field_specs) {
      const FiniteField& f = field_cache(p, s);
      const unsigned q = f.q();
      Eigen::MatrixXcd u(q, q);
      for (gf_t x = 0; x < q; ++x) u.col(x) = qft_qudit(basis_qudit(f, x)).amp;
      const double err =
          (u.adjoint() * u - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff();
      if (err > 1e-12) return false;
    }
    return true;
  }});

  properties.push_back({"profile duality under the transform", [&] {
    for (unsigned q : {2u, 3u, 5u, 8u}) {
      const FiniteField& f = q == 8 ? field_cache(2, 3) : field_cache(q, 1);
      for (double omega : {0.05, 0.2}) {
        const QuditState direct = qft_qudit(noisy_symbol_state(f, NoiseProfile(q, omega), 0));
        const QuditState dual_state =
            noisy_symbol_state(f, NoiseProfile(q, omega_perp(q, omega)), 0);
        if ((direct.amp - dual_state.amp).cwiseAbs().maxCoeff() > 1e-12) return false;
      }
    }
    return true;
  }});

  properties.push_back({"measurement spectrum vs dense oracle", [&] {
    struct Shape { unsigned q; int n, k; double omega; };
    const std::vector<Shape> shapes = {{2, 6, 3, 0.1}, {2, 7, 4, 0.15}, {2, 8, 5, 0.05},
                                       {2, 9, 4, 0.2},  {2, 8, 2, 0.3},  {3, 4, 2, 0.1},
                                       {3, 5, 3, 0.2},  {3, 5, 1, 0.15}};
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const Shape& sh = shapes[i];
      const FiniteField& f = field_cache(sh.q, 1);
      Rng rng(90 + i);
      const LinearCode code = random_code(f, sh.n, sh.k, rng);
      const NoiseProfile profile(sh.q, sh.omega);
      const PgmSpectrum table = pgm_spectrum(code, profile);
      const PgmSpectrum fast = pgm_spectrum_fast(code, profile);
      const double dense = pgm_dense_oracle(code, profile);
      if (std::abs(table.p_pgm - fast.p_pgm) > 1e-12) return false;
      if (std::abs(fast.p_pgm - dense) > 1e-9) return false;
    }
    return true;
  }});

  properties.push_back({"outcome distribution vs dense oracle", [&] {
    const FiniteField& f = field_cache(2, 1);
    Rng rng(77);
    const LinearCode code = random_code(f, 6, 3, rng);
    const NoiseProfile profile(2, 0.12);
    const std::vector<double> dist = pgm_outcome_distribution(pgm_spectrum_fast(code, profile));
    const PgmDenseResult dense = pgm_dense_oracle_full(code, profile);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        const GfVec diff = sub_vec(f, vec_of_index(2, 3, c), vec_of_index(2, 3, r));
        if (std::abs(dense.outcome(r, c) - dist[index_of_vec(2, diff)]) > 1e-9) return false;
      }
    return true;
  }});

  properties.push_back({"strict readout soundness", [&] {
    Rng rng(7001);
    const std::vector<std::pair<unsigned, double>> grid = {
        {2, 0.1}, {2, 0.3}, {3, 0.2}, {4, 0.25}, {5, 0.3}};
    for (const auto& [q, omega] : grid) {
      const FiniteField& f = q == 4 ? field_cache(2, 2) : field_cache(q, 1);
      const NoiseProfile profile(q, omega);
      for (int i = 0; i < 20000; ++i) {
        const gf_t b = static_cast<gf_t>(rng.below(q));
        const UsdOutcome outcome = qary_usd_sample(profile, b, rng);
        if (outcome.accepted && outcome.symbol != b) return false;
      }
    }
    return true;
  }});

  properties.push_back({"exhaustive decoder on clean words", [&] {
    Rng rng(8001);
    for (int i = 0; i < 20; ++i) {
      const unsigned q = i % 2 == 0 ? 2 : 3;
      const FiniteField& f = field_cache(q, 1);
      const int n = 10 + i % 5;
      const int k = 2 + i % 4;
      const LinearCode code = random_code(f, n, k, rng);
      const GfVec codeword = encode(code, random_vector(f, k, rng));
      if (!(ml_decode(code, codeword) == codeword)) return false;
    }
    return true;
  }});

  properties.push_back({"weight law vs transformed state", [&] {
    const FiniteField& f = field_cache(2, 1);
    GfMat gen(4, 5);
    gen.setZero();
    for (int r = 0; r < 4; ++r) {
      gen(r, r) = 1;
      gen(r, 4) = 1;
    }
    const LinearCode even{&f, gen};
    const NoiseProfile profile(2, omega_perp(2, 0.2));
    const WeightDistribution dist = pgm_final_distribution(even, profile);
    const double w0 = std::pow(0.8, 5), w5 = std::pow(0.2, 5);
    if (std::abs(dist.p[0] - w0 / (w0 + w5)) > 1e-12) return false;

    Rng rng(9001);
    const LinearCode code = random_code(f, 10, 5, rng);
    const NoiseProfile profile2(2, 0.1);
    const WeightDistribution dist2 = pgm_final_distribution(code, profile2);
    const Eigen::VectorXd probs = probabilities(qft_dense(dense_code_superposition(code, profile2)));
    std::vector<double> by_weight(11, 0.0);
    for (std::uint64_t idx = 0; idx < 1024; ++idx)
      by_weight[weight(vec_of_index(2, 10, idx))] += probs(idx);
    for (int t = 0; t <= 10; ++t)
      if (std::abs(by_weight[t] - dist2.p[t]) > 1e-9) return false;
    return true;
  }});

  properties.push_back({"reduction law vs dense pipeline", [&] {
    const FiniteField& f = field_cache(2, 1);
    GfMat gen(3, 6);
    const int cols[6][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (int j = 0; j < 6; ++j)
      for (int r = 0; r < 3; ++r) gen(r, j) = static_cast<gf_t>(cols[j][r]);
    const LinearCode decode{&f, gen};
    const ScpInstance scp = make_scp_instance(dual(decode), 0.4);
    const int samples = 20000;

    std::map<std::pair<std::uint64_t, std::uint64_t>, int> classical, dense;
    auto key_of = [](const std::vector<int>& j_set, std::uint64_t y_index) {
      std::uint64_t mask = 0;
      for (int j : j_set) mask |= std::uint64_t{1} << j;
      return std::make_pair(mask, y_index);
    };

    Rng crng(9101);
    for (int t = 0; t < samples; ++t) {
      const ReductionReport report = reduce_usd_path(scp, crng);
      const std::uint64_t y_index = report.outcome == ReductionOutcome::Codeword
                                        ? index_of_vec(2, report.codeword)
                                        : 0;
      ++classical[key_of(report.j_set, y_index)];
    }
    Rng drng(9102);
    for (int t = 0; t < samples; ++t) {
      std::vector<int> kept;
      for (;;) {
        kept.clear();
        for (int i = 0; i < 6; ++i)
          if (drng.bernoulli(scp.p_usd)) kept.push_back(i);
        if (kept.size() == 4) break;  // window collapses to one size here
      }
      DenseState st =
          qft_dense(dense_code_superposition(puncture(scp.decode, kept), NoiseProfile(2, 0.0)));
      const GfVec y_j = measure_vector(st, drng);
      GfVec embedded = GfVec::Zero(1, 6);
      for (std::size_t i = 0; i < kept.size(); ++i) embedded(kept[i]) = y_j(i);
      ++dense[key_of(kept, index_of_vec(2, embedded))];
    }

    double tv = 0;
    for (const auto& [key, count] : classical) {
      const auto it = dense.find(key);
      tv += std::abs(count - (it == dense.end() ? 0 : it->second)) / double(samples);
    }
    for (const auto& [key, count] : dense)
      if (!classical.count(key)) tv += count / double(samples);
    return tv / 2 <= 0.04;
  }});

  int failures = 0;
  for (const Property& property : properties) {
    bool ok = false;
    std::string note;
    try {
      ok = property.run();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    out << (ok ? "[ok]   " : "[FAIL] ") << property.name << note << "\n";
  }
  out << "verify: " << (properties.size() - failures) << "/" << properties.size()
      << " properties hold\n";
  return failures > 0 ? 3 : 0;
}

int run_cli(const RunConfig& config) {
  const std::string sub = config.get("subcommand", "");
  try {
    if (sub == "verify") return cmd_verify(std::cout);

    const std::string out_path = config.get("out", "");
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (sub == "thresholds") return cmd_thresholds(config, out);
    if (sub == "pgm") return cmd_pgm(config, out);
    if (sub == "prange") return cmd_prange(config, out);
    if (sub == "sweep") return cmd_sweep(config, out);

    if (sub == "solve-qdp" || sub == "reduce") {
      std::ofstream manifest_file;
      if (!out_path.empty()) {
        const std::string manifest_path = out_path + ".manifest.json";
        manifest_file.open(manifest_path);
        if (!manifest_file)
          throw std::invalid_argument("cannot open output file '" + manifest_path + "'");
      }
      std::ostream& manifest = out_path.empty() ? std::cout : manifest_file;
      return sub == "solve-qdp" ? cmd_solve_qdp(config, out, manifest)
                                : cmd_reduce(config, out, manifest);
    }
    throw std::invalid_argument("unknown subcommand '" + sub + "'");
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qdp
