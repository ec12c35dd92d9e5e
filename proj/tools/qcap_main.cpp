// qcap command line: degradability checks, capacity computation, capacity
// surfaces, Haar sampling campaigns and convexity/bottleneck bounds.
//
// Exit codes: 0 success/conclusive verdict, 2 inconclusive verdict,
// 64 usage error, 65 data error.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcap/channel_io.hpp"
#include "qcap/surface.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qcap::QuantumChannel load_channel(const std::string& path) {
  const std::string text = qcap::read_file(path);
  qcap::QuantumChannel t = qcap::channel_from_json(text);
  const double residual = t.tp_residual();
  if (residual > qcap::tol::trace_one) {
    std::ostringstream os;
    os << path << ": not trace preserving, ||sum A^dag A - 1||_F = "
       << residual;
    throw DataError(os.str());
  }
  return t;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    qcap::write_file(out_path, text);
  }
}

int run_check(const std::string& file, double tolerance) {
  const qcap::QuantumChannel t = load_channel(file);
  const qcap::DegradabilityReport report = qcap::classify(t, tolerance);
  std::cout << qcap::report_to_json(report) << "\n";
  return qcap::verdict_exit_code(report.verdict);
}

int run_capacity(const std::optional<double>& alpha,
                 const std::optional<double>& beta, const std::string& file,
                 std::uint64_t seed) {
  qcap::CapacityResult result;
  if (alpha.has_value() != beta.has_value()) {
    throw CLI::ValidationError("capacity",
                               "--alpha and --beta must be given together");
  }
  if (alpha.has_value()) {
    result = qcap::qubit_capacity({*alpha, *beta});
  } else if (!file.empty()) {
    result = qcap::capacity_or_bounds(load_channel(file), seed);
  } else {
    throw CLI::ValidationError(
        "capacity", "provide a channel file or --alpha/--beta");
  }
  std::cout << qcap::capacity_to_json(result) << "\n";
  return 0;
}

int run_surface(const std::vector<double>& alpha_range,
                const std::vector<double>& beta_range, int resolution,
                const std::string& out_path) {
  const qcap::SurfaceTable table =
      qcap::capacity_surface(alpha_range[0], alpha_range[1], beta_range[0],
                             beta_range[1], resolution);
  emit(qcap::surface_to_csv(table), out_path);
  return 0;
}

int run_sample(int d, int d_env, long n, std::uint64_t seed, int threads,
               const std::string& out_path) {
  const qcap::SampleStats stats =
      qcap::degradable_fraction(d, d_env, n, seed, threads);
  emit(qcap::stats_to_json(stats) + "\n", out_path);
  return 0;
}

int run_bound(const std::vector<std::string>& mix,
              const std::vector<double>& compose_caps, std::uint64_t seed) {
  nlohmann::json j;
  if (!compose_caps.empty()) {
    j["bound"] = qcap::bottleneck_bound(compose_caps[0], compose_caps[1]);
    j["rule"] = "bottleneck";
  } else if (!mix.empty()) {
    if (mix.size() < 2 || mix.size() % 2 != 0) {
      throw CLI::ValidationError(
          "bound", "--mix expects weight/file pairs, e.g. --mix 0.5 a.json "
                   "0.5 b.json");
    }
    std::vector<std::pair<double, qcap::QuantumChannel>> terms;
    for (std::size_t i = 0; i < mix.size(); i += 2) {
      double w = 0.0;
      try {
        w = std::stod(mix[i]);
      } catch (const std::exception&) {
        throw CLI::ValidationError("bound",
                                   "--mix weight not a number: " + mix[i]);
      }
      terms.emplace_back(w, load_channel(mix[i + 1]));
    }
    const qcap::ConvexBound bound = qcap::convex_upper_bound(terms, seed);
    j["bound"] = bound.value;
    j["rule"] = "convexity";
    nlohmann::json per_term = nlohmann::json::array();
    for (std::size_t i = 0; i < bound.term_values.size(); ++i) {
      per_term.push_back({{"weight", terms[i].first},
                          {"capacity", bound.term_values[i]}});
    }
    j["terms"] = per_term;
  } else {
    throw CLI::ValidationError("bound", "provide --mix or --compose");
  }
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degradability and quantum capacity of channels with small "
               "environment"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand(
      "check", "Classify a channel file as degradable/anti-degradable");
  std::string check_file;
  double tolerance = qcap::tol::psd;
  check->add_option("file", check_file, "channel JSON file")->required();
  check->add_option("--tolerance", tolerance,
                    "PSD tolerance relative to the trace");

  // capacity
  auto* capacity = app.add_subcommand(
      "capacity", "Quantum capacity (exact where certified, else bounds)");
  std::string capacity_file;
  std::optional<double> alpha, beta;
  std::uint64_t seed = 0;
  capacity->add_option("file", capacity_file, "channel JSON file");
  capacity->add_option("--alpha", alpha, "normal-form alpha (radians)");
  capacity->add_option("--beta", beta, "normal-form beta (radians)");
  capacity->add_option("--seed", seed, "optimizer restart seed");

  // surface
  auto* surface = app.add_subcommand(
      "surface", "Capacity surface over the qubit normal form, CSV");
  std::vector<double> alpha_range{0.0, M_PI};
  std::vector<double> beta_range{0.0, M_PI};
  int resolution = 101;
  std::string surface_out;
  surface->add_option("--alpha-range", alpha_range, "alpha range (lo hi)")
      ->expected(2);
  surface->add_option("--beta-range", beta_range, "beta range (lo hi)")
      ->expected(2);
  surface->add_option("--resolution", resolution, "grid points per axis");
  surface->add_option("--out", surface_out, "output CSV path (default stdout)");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Haar-sample channels and report verdict fractions");
  int sample_d = 2;
  int sample_de = 2;
  long sample_n = 1000;
  std::uint64_t sample_seed = 0;
  int sample_threads = 1;
  std::string sample_out;
  sample->add_option("--d", sample_d, "system dimension")->required();
  sample->add_option("--dE", sample_de, "environment dimension")->required();
  sample->add_option("--n", sample_n, "number of draws")->required();
  sample->add_option("--seed", sample_seed, "master seed")->required();
  sample->add_option("--threads", sample_threads,
                     "worker threads (output is thread-count independent)");
  sample->add_option("--out", sample_out, "output JSON path (default stdout)");

  // bound
  auto* bound = app.add_subcommand(
      "bound", "Convexity or bottleneck upper bounds on the capacity");
  std::vector<std::string> mix;
  std::vector<double> compose_caps;
  std::uint64_t bound_seed = 0;
  bound->add_option("--mix", mix,
                    "alternating weight / channel-file list for a convex "
                    "mixture")
      ->expected(-2);
  bound->add_option("--compose", compose_caps,
                    "two capacities; returns min(q1, q2)")
      ->expected(2);
  bound->add_option("--seed", bound_seed, "optimizer restart seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(check_file, tolerance);
    if (*capacity) return run_capacity(alpha, beta, capacity_file, seed);
    if (*surface)
      return run_surface(alpha_range, beta_range, resolution, surface_out);
    if (*sample)
      return run_sample(sample_d, sample_de, sample_n, sample_seed,
                        sample_threads, sample_out);
    if (*bound) return run_bound(mix, compose_caps, bound_seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
