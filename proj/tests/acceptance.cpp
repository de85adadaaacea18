// Acceptance harness: runs every release criterion end to end and prints one
// [PASS]/[FAIL] line per criterion.  Exit status is nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qdp/cli.hpp"
#include "qdp/qstate.hpp"

using namespace qdp;

namespace {

struct Harness {
  int index = 0;
  int failures = 0;

  // Runs one criterion; `time_cap` (seconds, 0 = uncapped) is part of the
  // pass condition when positive.
  void run(const std::string& name, double time_cap,
           const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && time_cap > 0 && seconds > time_cap) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time cap");
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), seconds,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
  }
};

const FiniteField& field_for(unsigned q) {
  switch (q) {
    case 4: return field_cache(2, 2);
    case 8: return field_cache(2, 3);
    case 9: return field_cache(3, 2);
    case 16: return field_cache(2, 4);
    default: return field_cache(q, 1);
  }
}

LinearCode full_rank_code(const FiniteField& f, int n, int k, Rng& rng) {
  LinearCode code = random_code(f, n, k, rng);
  while (rank_of(f, code.gen) < k) code = random_code(f, n, k, rng);
  return code;
}

double binomial_sigma(double p, double samples) {
  return std::sqrt(std::max(p * (1 - p), 1e-12) / samples);
}

}  // namespace

int main() {
  Harness h;
  std::printf("acceptance suite: 11 criteria\n");

  h.run("dual noise map is involutive and realized by the symbol transform", 1.0,
        [](std::string& detail) {
          double worst = 0;
          for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            const double cap = (q - 1.0) / q;
            for (int i = 1; i <= 1000; ++i) {
              const double omega = cap * i / 1001.0;
              worst = std::max(worst, std::abs(omega_perp(q, omega_perp(q, omega)) - omega));
            }
            const FiniteField& f = field_for(q);
            for (int j = 1; j <= 20; ++j) {
              const double omega = cap * j / 21.0;
              const QuditState direct = qft_qudit(noisy_symbol_state(f, NoiseProfile(q, omega), 0));
              const QuditState dual_profile =
                  noisy_symbol_state(f, NoiseProfile(q, omega_perp(q, omega)), 0);
              worst = std::max(worst, (direct.amp - dual_profile.amp).cwiseAbs().maxCoeff());
            }
          }
          detail = "max deviation " + std::to_string(worst);
          return worst <= 1e-12;
        });

  h.run("conclusive-readout decoder across the solvable boundary", 30.0,
        [](std::string& detail) {
          auto block = [](unsigned q, int n, int k, double omega, std::uint64_t stream) {
            int recovered = 0;
            for (int t = 0; t < 200; ++t) {
              Rng rng(mix_seed(2024, stream, static_cast<std::uint64_t>(t)));
              const QdpInstance inst = sample_instance(q, n, k, omega, rng);
              recovered += solve_usd(inst).outcome == SolveOutcome::Recovered;
            }
            return recovered;
          };
          const int low = block(2, 2000, 1000, 0.05, 1);
          const int high = block(2, 2000, 1000, 0.09, 2);
          // Ternary noise chosen so the readout rate exceeds the code rate by 0.05.
          const double omega3 = omega_perp(3, 2.0 * (1.0 / 3.0 + 0.05) / 3.0);
          const int ternary = block(3, 1500, 500, omega3, 3);
          char buf[128];
          std::snprintf(buf, sizeof(buf), "binary 0.05: %d/200, 0.09: %d/200, ternary: %d/200",
                        low, high, ternary);
          detail = buf;
          return low >= 198 && high <= 10 && ternary >= 195;
        });

  h.run("strict readout never mislabels a symbol", 30.0, [](std::string& detail) {
    const std::vector<std::pair<unsigned, double>> grid = {
        {2, 0.05}, {2, 0.25}, {2, 0.45}, {3, 0.2}, {3, 0.45},
        {4, 0.3},  {5, 0.35}, {8, 0.5},  {9, 0.6}, {16, 0.7}};
    Rng rng(333);
    long long wrong = 0, accepted = 0;
    for (const auto& [q, omega] : grid) {
      const FiniteField& f = field_for(q);
      const NoiseProfile profile(q, omega);
      for (int i = 0; i < 100000; ++i) {
        const gf_t b = static_cast<gf_t>(rng.below(q));
        const UsdOutcome outcome = qary_usd_sample(profile, b, rng);
        if (outcome.accepted) {
          ++accepted;
          wrong += outcome.symbol != b;
        }
      }
    }
    detail = std::to_string(wrong) + " wrong symbols in 1e6 samples (" +
             std::to_string(accepted) + " conclusive)";
    return wrong == 0 && accepted > 0;
  });

  h.run("partial readout hits the three-way branch law", 30.0, [](std::string& detail) {
    const std::vector<std::pair<double, double>> pairs = {
        {0.1, 0.05},  {0.2, 0.1},  {0.3, 0.15}, {0.25, 0.2}, {0.4, 0.3},
        {0.45, 0.2},  {0.15, 0.12}, {0.35, 0.05}, {0.2, 0.18}, {0.05, 0.01}};
    Rng rng(444);
    const int samples = 100000;
    double worst_sigma = 0;
    for (const auto& [omega, omega_prime] : pairs) {
      const double keep = omega_perp(2, omega) / omega_perp(2, omega_prime);
      const double expect[3] = {keep * (1 - omega_prime), keep * omega_prime, 1 - keep};
      int counts[3] = {0, 0, 0};
      for (int i = 0; i < samples; ++i) {
        const int b = static_cast<int>(rng.below(2));
        const UsdOutcome outcome = partial_usd_sample(omega, omega_prime, b, rng);
        if (!outcome.accepted) ++counts[2];
        else if (outcome.symbol == b) ++counts[0];
        else ++counts[1];
      }
      for (int j = 0; j < 3; ++j) {
        const double freq = static_cast<double>(counts[j]) / samples;
        const double sigma = binomial_sigma(expect[j], samples);
        worst_sigma = std::max(worst_sigma, std::abs(freq - expect[j]) / sigma);
      }
    }
    // Degenerate ends: residual zero reduces to the strict readout, residual
    // equal to the channel noise never aborts.
    bool degenerate_ok = true;
    for (double omega : {0.1, 0.3}) {
      degenerate_ok = degenerate_ok &&
                      std::abs(omega_perp(2, omega) / omega_perp(2, 0.0) -
                               usd_success_prob(2, omega)) <= 1e-14;
      int flips = 0, aborts = 0;
      for (int i = 0; i < 10000; ++i) {
        const UsdOutcome strict = partial_usd_sample(omega, 0.0, 0, rng);
        if (strict.accepted && strict.symbol != 0) ++flips;
        if (!partial_usd_sample(omega, omega, 0, rng).accepted) ++aborts;
      }
      degenerate_ok = degenerate_ok && flips == 0 && aborts == 0;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst branch deviation %.2f sigma", worst_sigma);
    detail = buf;
    return worst_sigma <= 4.0 && degenerate_ok;
  });

  h.run("measurement success: closed form agrees with the dense oracle", 60.0,
        [](std::string& detail) {
          const FiniteField& f2 = field_cache(2, 1);
          GfMat rep_gen = GfMat::Ones(1, 3);
          const LinearCode repetition{&f2, rep_gen};
          const NoiseProfile rep_profile(2, 0.1);
          const double rep_fast = pgm_spectrum_fast(repetition, rep_profile).p_pgm;
          const double rep_dense = pgm_dense_oracle(repetition, rep_profile);
          if (std::abs(rep_fast - 0.98819) > 1e-5 || std::abs(rep_dense - 0.98819) > 1e-5) {
            detail = "repetition-code value mismatch";
            return false;
          }

          const double omegas[] = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
          double worst = 0;
          int instances = 0;
          Rng rng(555);
          auto check = [&](unsigned q, int n, int k) {
            const FiniteField& f = field_for(q);
            const LinearCode code = random_code(f, n, k, rng);
            const NoiseProfile profile(q, omegas[instances % 6]);
            const double fast = pgm_spectrum_fast(code, profile).p_pgm;
            const double dense = pgm_dense_oracle(code, profile);
            worst = std::max(worst, std::abs(fast - dense));
            ++instances;
          };
          for (int r = 0; r < 10; ++r)
            for (int n = 6; n <= 8; ++n) check(2, n, 1 + (r + n) % (n - 1));
          for (int r = 0; r < 5; ++r) {
            check(3, 4, 1 + r % 3);
            check(3, 5, 1 + (r + 1) % 4);
          }
          for (int r = 0; r < 8; ++r) check(2, 9, 2 + r % 6);
          check(3, 6, 2);
          check(3, 6, 3);
          char buf[96];
          std::snprintf(buf, sizeof(buf), "%d instances, worst gap %.2e", instances, worst);
          detail = buf;
          return instances == 50 && worst <= 1e-9;
        });

  h.run("success probability falls across the tractability window", 300.0,
        [](std::string& detail) {
          std::vector<double> grid;
          for (int i = 1; i <= 17; ++i) grid.push_back(0.02 * i);
          grid.push_back(0.05);
          std::sort(grid.begin(), grid.end());

          const FiniteField& f = field_cache(2, 1);
          Rng rng(606);
          std::vector<double> mean(grid.size(), 0.0);
          const int codes = 20;
          for (int c = 0; c < codes; ++c) {
            const LinearCode code = full_rank_code(f, 24, 12, rng);
            for (std::size_t i = 0; i < grid.size(); ++i)
              mean[i] += pgm_spectrum_fast(code, NoiseProfile(2, grid[i])).p_pgm / codes;
          }

          bool monotone = true;
          for (std::size_t i = 1; i < grid.size(); ++i)
            monotone = monotone && mean[i] <= mean[i - 1] + 1e-6;
          double at_005 = 0, at_030 = 0;
          double last_above = -1, first_below = -1;
          for (std::size_t i = 0; i < grid.size(); ++i) {
            if (std::abs(grid[i] - 0.05) < 1e-9) at_005 = mean[i];
            if (std::abs(grid[i] - 0.30) < 1e-9) at_030 = mean[i];
            if (mean[i] >= 0.5) last_above = grid[i];
            else if (first_below < 0) first_below = grid[i];
          }
          const double lower_edge = omega_perp(2, 0.25) * 0.5;
          const bool crossing = last_above > 0 && first_below > 0 &&
                                last_above > lower_edge && first_below < 0.5;
          char buf[128];
          std::snprintf(buf, sizeof(buf), "P(0.05)=%.3f, P(0.30)=%.3f, crossing in (%.3f, %.3f)",
                        at_005, at_030, last_above, first_below);
          detail = buf;
          return monotone && at_005 >= 0.8 && at_030 <= 0.3 && crossing;
        });

  h.run("short-codeword pipeline lands on the information-set weight", 120.0,
        [](std::string& detail) {
          Rng instance_rng(mix_seed(707, 0));
          const ScpInstance scp = random_scp_instance(2, 1000, 500, 0.2525, instance_rng);
          int in_band = 0, emitted = 0;
          long long weight_sum = 0;
          for (int t = 0; t < 100; ++t) {
            Rng rng(mix_seed(707, 1 + static_cast<std::uint64_t>(t)));
            const ReductionReport report = reduce_usd_path(scp, rng);
            if (report.outcome != ReductionOutcome::Codeword) continue;
            if (is_zero(report.codeword)) return false;
            if (!is_zero(syndrome(scp.decode, report.codeword))) return false;
            ++emitted;
            weight_sum += report.weight;
            const double frac = report.weight / 1000.0;
            if (frac >= 0.20 && frac <= 0.26) ++in_band;
          }
          const double mean_frac =
              emitted > 0 ? static_cast<double>(weight_sum) / emitted / 1000.0 : 0.0;

          const FiniteField& f = field_cache(2, 1);
          Rng prng(mix_seed(707, 9999));
          int hits = 0;
          bool exact = true;
          for (int t = 0; t < 200; ++t) {
            const LinearCode parity = random_code(f, 200, 100, prng);
            const PrangeResult result =
                prange_short_codeword(f, parity.gen, prng, prange_default_rounds(200));
            if (result.hit) {
              ++hits;
              exact = exact && result.weight == 50;
            }
          }
          char buf[160];
          std::snprintf(buf, sizeof(buf),
                        "in-band %d/100, mean weight fraction %.4f, search hits %d/200", in_band,
                        mean_frac, hits);
          detail = buf;
          return in_band >= 30 && std::abs(mean_frac - 0.25) <= 0.005 && hits >= 198 && exact;
        });

  h.run("final-measurement weight laws on compact instances", 30.0, [](std::string& detail) {
    const FiniteField& f = field_cache(2, 1);
    Rng rng(808);
    const LinearCode code = full_rank_code(f, 16, 8, rng);

    const NoiseProfile mid_profile(2, omega_perp(2, 0.1));
    double totals[2] = {0, 0};
    const WeightDistribution plain = pgm_final_distribution(code, mid_profile);
    const WeightDistribution tweaked = pgm_tweaked_distribution(code, mid_profile);
    for (double v : plain.p) totals[0] += v;
    for (double v : tweaked.p) totals[1] += v;
    if (std::abs(totals[0] - 1.0) > 1e-12 || std::abs(totals[1] - 1.0) > 1e-12) {
      detail = "weight law not normalized";
      return false;
    }

    // Plain branch: below the zero-dominance edge the zero word carries
    // nearly all mass (dual distance >= 3 keeps low-weight terms out).
    Rng scan(809);
    LinearCode clean = full_rank_code(f, 16, 8, scan);
    auto dual_ok = [&](const LinearCode& c) {
      const auto hist = code_weight_histogram(dual(c));
      return hist[1] == 0 && hist[2] == 0;
    };
    while (!dual_ok(clean)) clean = full_rank_code(f, 16, 8, scan);
    const double edge = 1.0 - std::pow(2.0, -0.5);
    const WeightDistribution low =
        pgm_final_distribution(clean, NoiseProfile(2, omega_perp(2, 0.05)));
    const bool plain_ok = 0.05 < edge && low.p_zero >= 0.99;

    // Zero-excluding branch concentrates around the weight goal.
    Rng pinned(650);
    const LinearCode conc = random_code(f, 16, 8, pinned);
    const WeightDistribution band =
        pgm_tweaked_distribution(conc, NoiseProfile(2, omega_perp(2, 0.2)));
    double near = 0;
    for (int t = 0; t <= 16; ++t)
      if (std::abs(t / 16.0 - 0.2) <= 0.15) near += band.p[t];

    // Reject-branch weight of the counterexample run, against the
    // independently enumerated spectrum.
    const ReductionReport counter = pgm_counterexample_run(code, mid_profile);
    const PgmSpectrum table = pgm_spectrum(code, mid_profile);
    const double expect_branch =
        std::pow(std::sqrt(table.p_pgm) - table.n0 / std::sqrt(256.0), 2);
    const bool counter_ok = counter.outcome == ReductionOutcome::Bottom &&
                            std::abs(counter.branch_prob - expect_branch) <= 1e-12;

    char buf[128];
    std::snprintf(buf, sizeof(buf), "p_zero=%.4f, band mass %.4f, branch gap %.1e", low.p_zero,
                  near, std::abs(counter.branch_prob - expect_branch));
    detail = buf;
    return plain_ok && near >= 0.9 && counter_ok;
  });

  h.run("coset weight statistics concentrate at the expected enumerator", 30.0,
        [](std::string& detail) {
          const FiniteField& f = field_cache(2, 1);
          Rng rng(909);
          const int codes = 500;
          std::vector<double> sums(17, 0.0);
          int deviation_events = 0;
          const double s8 = expected_coset_count(2, 16, 8, 8);
          for (int c = 0; c < codes; ++c) {
            const LinearCode code = random_code(f, 16, 8, rng);
            GfVec s = random_vector(f, 8, rng);
            if (is_zero(s)) s(0) = 1;
            const CosetSpectrum cs = coset_spectrum(code, s);
            for (int t = 0; t <= 16; ++t) sums[t] += static_cast<double>(cs.counts[t]);
            if (std::abs(static_cast<double>(cs.counts[8]) - s8) >= 0.5 * s8) ++deviation_events;
          }
          double worst_rel = 0;
          for (int t = 6; t <= 10; ++t) {
            const double mean = sums[t] / codes;
            worst_rel = std::max(worst_rel,
                                 std::abs(mean / expected_coset_count(2, 16, 8, t) - 1.0));
          }
          const double chebyshev = 1.0 / (0.25 * s8);
          const double rate = static_cast<double>(deviation_events) / codes;
          char buf[128];
          std::snprintf(buf, sizeof(buf),
                        "worst bulk deviation %.2f%%, tail rate %.4f (bound %.4f)",
                        100 * worst_rel, rate, chebyshev);
          detail = buf;
          return worst_rel <= 0.05 && rate <= chebyshev;
        });

  h.run("phase-profile readout: balanced point and decoding boundary", 120.0,
        [](std::string& detail) {
          double worst_half = 0;
          for (int i = 1; i <= 100; ++i) {
            const BinaryPhaseProfile profile(i / 200.0, std::acos(-1.0) / 2);
            worst_half = std::max(worst_half, std::abs(profile.prob_one() - 0.5));
          }
          if (worst_half > 1.2e-16) {  // machine-exact balance
            detail = "balanced point off by " + std::to_string(worst_half);
            return false;
          }

          const double pi = std::acos(-1.0);
          const double t_grid[5] = {0.05, 0.15, 0.25, 0.35, 0.5};
          const double theta_grid[5] = {0.0, pi / 5, 0.35 * pi, 2 * pi / 5, pi / 2};
          const FiniteField& f = field_cache(2, 1);
          const int n = 1000, k = 500;
          int matched = 0;
          for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
              const BinaryPhaseProfile profile(t_grid[a], theta_grid[b]);
              const bool predicted = profile.usd_success() > 0.5 + 0.02;
              int recovered = 0;
              for (int trial = 0; trial < 10; ++trial) {
                Rng rng(mix_seed(1010, 5 * a + b, trial));
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
                recovered += solved && *solved == message;
              }
              matched += predicted ? recovered >= 7 : recovered <= 3;
            }
          detail = std::to_string(matched) + "/25 grid cells match the boundary rule";
          return matched == 25;
        });

  h.run("characters orthogonal and transform unitary on every built field", 10.0,
        [](std::string& detail) {
          const std::vector<std::pair<unsigned, unsigned>> specs = {
              {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
              {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
          double worst = 0;
          for (const auto& [p, s] : specs) {
            const FiniteField& f = field_cache(p, s);
            const unsigned q = f.q();
            for (gf_t a = 0; a < q; ++a)
              for (gf_t b = 0; b < q; ++b) {
                std::complex<double> sum = 0;
                for (gf_t x = 0; x < q; ++x)
                  sum += f.character(x, a) * std::conj(f.character(x, b));
                const double expect = a == b ? static_cast<double>(q) : 0.0;
                worst = std::max(worst, std::abs(sum - expect) / q);
              }
            Eigen::MatrixXcd u(q, q);
            for (gf_t x = 0; x < q; ++x) u.col(x) = qft_qudit(basis_qudit(f, x)).amp;
            worst = std::max(
                worst,
                (u.adjoint() * u - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff());
          }
          detail = "worst normalized deviation " + std::to_string(worst);
          return worst <= 1e-12;
        });

  std::printf("%d/%d criteria passed\n", h.index - h.failures, h.index);
  return h.failures == 0 ? 0 : 1;
}
