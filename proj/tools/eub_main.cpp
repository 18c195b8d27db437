#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eub/bounds.hpp"
#include "eub/families.hpp"
#include "eub/io.hpp"
#include "eub/statelab.hpp"

namespace {

using eub::BoundReport;
using eub::MeasurementSet;
using eub::UnitaryMatrix;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453;

struct RunConfig {
  std::vector<std::string> matrix_paths;
  std::string family;
  std::string range;  // "a:b:n"
  double param = -1.0;
  std::uint64_t seed = 1;
  int samples = 1000;
  int dim = 3;
  bool bits = true;
  double tolerance = 1e-8;
  std::string out_path;
  bool dump_profile = false;
  bool self_test = false;
};

void emit(const RunConfig& config, const std::string& content) {
  if (config.out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') {
      std::cout << '\n';
    }
  } else {
    eub::write_file_atomic(config.out_path, content);
  }
}

std::vector<UnitaryMatrix> load_matrices(const RunConfig& config) {
  std::vector<UnitaryMatrix> us;
  for (const std::string& path : config.matrix_paths) {
    us.push_back(eub::load_unitary(path, config.tolerance));
  }
  return us;
}

json g9(double v) { return json::parse(eub::format_g9(v)); }

int run_bounds_report(const RunConfig& config,
                      const std::vector<UnitaryMatrix>& us) {
  std::string profile_json;
  std::string report_json;
  if (us.size() == 1) {
    report_json = eub::report_to_json(eub::pairwise_report(us[0]), config.bits);
    if (config.dump_profile) {
      profile_json = eub::profile_to_json(eub::sk_profile(us[0]));
    }
  } else {
    report_json = eub::report_to_json(eub::multi_report(us), config.bits);
    if (config.dump_profile) {
      profile_json = eub::profile_to_json(eub::multi_profile(us));
    }
  }
  if (!profile_json.empty()) {
    ordered_json j = ordered_json::parse(report_json);
    j["profile"] = json::parse(profile_json);
    report_json = j.dump(2);
  }
  emit(config, report_json);
  return 0;
}

int cmd_bounds(const RunConfig& config) {
  return run_bounds_report(config, load_matrices(config));
}

int cmd_table1(const RunConfig& config) {
  return run_bounds_report(config, {eub::o3_matrix()});
}

int cmd_sweep(const RunConfig& config) {
  const eub::FamilyId id = eub::family_from_string(config.family);
  auto [lo, hi] = eub::FamilySpec{id, 0.0}.range();
  int steps = 101;
  if (!config.range.empty()) {
    double a = lo;
    double b = hi;
    int n = steps;
    if (std::sscanf(config.range.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 ||
        n < 2) {
      throw eub::InvalidInputError("--range expects a:b:n with n >= 2");
    }
    lo = a;
    hi = b;
    steps = n;
  }
  eub::SweepOptions options;
  options.seed = config.seed;
  const auto points = eub::sweep(id, lo, hi, steps, options);
  emit(config, eub::sweep_to_csv(points, config.bits));
  return 0;
}

int cmd_random(const RunConfig& config) {
  if (config.dim < 2) {
    throw eub::InvalidInputError("random study needs --dim >= 2");
  }
  if (config.samples < 1) {
    throw eub::InvalidInputError("random study needs --samples >= 1");
  }
  std::vector<std::map<std::string, double>> reports;
  reports.reserve(config.samples);
  for (int i = 0; i < config.samples; ++i) {
    const UnitaryMatrix u = eub::haar_random_unitary(
        config.dim, config.seed + static_cast<std::uint64_t>(i));
    reports.push_back(eub::pairwise_report(u).values);
  }
  const auto& ids = reports.front();

  ordered_json j;
  j["d"] = config.dim;
  j["samples"] = config.samples;
  j["seed"] = config.seed;
  j["unit"] = config.bits ? "bits" : "nats";
  const double unit = config.bits ? kLn2 : 1.0;

  ordered_json stats;
  for (const auto& [id, _] : ids) {
    double mean = 0.0;
    for (const auto& r : reports) {
      mean += r.at(id);
    }
    mean /= config.samples;
    double var = 0.0;
    for (const auto& r : reports) {
      const double dv = r.at(id) - mean;
      var += dv * dv;
    }
    var /= config.samples;
    stats[id] = {{"mean", g9(mean / unit)},
                 {"stddev", g9(std::sqrt(var) / unit)}};
  }
  j["bounds"] = std::move(stats);

  ordered_json wins;
  for (const auto& [a, _] : ids) {
    for (const auto& [b, __] : ids) {
      if (a == b) {
        continue;
      }
      int count = 0;
      for (const auto& r : reports) {
        if (r.at(a) > r.at(b)) {
          ++count;
        }
      }
      wins[a + ">" + b] = g9(static_cast<double>(count) / config.samples);
    }
  }
  j["win_rates"] = std::move(wins);
  emit(config, j.dump(2));
  return 0;
}

int cmd_verify(const RunConfig& config) {
  std::vector<UnitaryMatrix> us;
  if (!config.family.empty()) {
    const eub::FamilyId id = eub::family_from_string(config.family);
    eub::FamilySpec spec{id, 0.0};
    spec.parameter = config.param >= 0.0 ? config.param : spec.range().second;
    us = eub::build_family(spec).unitaries;
  } else {
    us = load_matrices(config);
    if (us.size() == 1) {
      us.insert(us.begin(), eub::identity_unitary(us[0].dim()));
    }
  }
  const MeasurementSet ms = MeasurementSet::of(us);

  // Bound id -> (value, carries the +S(rho) term for mixed states).
  std::vector<std::tuple<std::string, double, bool>> bounds;
  if (ms.count() == 2) {
    const UnitaryMatrix v(ms.unitaries[0].matrix().adjoint() *
                          ms.unitaries[1].matrix());
    for (const auto& [id, value] : eub::pairwise_report(v).values) {
      const bool rpz = id.rfind("RPZ", 0) == 0;
      bounds.emplace_back(id, value, rpz);
    }
  } else {
    const auto profile = eub::multi_profile(ms.unitaries);
    bounds.emplace_back(
        "Multi", eub::bound_multi_shannon(eub::multi_majorizing_vector(profile)),
        false);
  }
  if (config.self_test) {
    // Deliberately invalid bound; a healthy harness must flag it.
    bounds.emplace_back("SelfTest",
                        ms.count() * std::log(static_cast<double>(ms.dim)) + 0.1,
                        false);
  }

  ordered_json j;
  j["samples"] = config.samples;
  j["seed"] = config.seed;
  ordered_json margins;
  bool ok = true;
  for (const auto& [id, value, with_state] : bounds) {
    const double margin = eub::validity_margin(ms, value, config.samples,
                                               config.seed, with_state);
    margins[id] = g9(margin);
    if (margin < -1e-9) {
      ok = false;
    }
  }
  j["margins_nats"] = std::move(margins);
  j["ok"] = ok;
  emit(config, j.dump(2));
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bound calculator"};
  app.require_subcommand(1);
  RunConfig config;

  const auto add_shared = [&config](CLI::App* cmd) -> CLI::App* {
    cmd->add_option("--matrix", config.matrix_paths,
                    "matrix JSON file (repeat for several bases)");
    cmd->add_option("--family", config.family, "family id");
    cmd->add_option("--param", config.param, "family parameter");
    cmd->add_option("--range", config.range, "sweep range a:b:n");
    cmd->add_option("--seed", config.seed, "RNG seed");
    cmd->add_option("--samples", config.samples, "sample count");
    cmd->add_option("--dim", config.dim, "dimension for random studies");
    cmd->add_option("--tol", config.tolerance, "unitarity tolerance");
    cmd->add_option("--out", config.out_path, "output path (atomic write)");
    cmd->add_flag("--dump-profile", config.dump_profile,
                  "include the singular-value profile");
    cmd->add_flag("--self-test", config.self_test,
                  "verify an intentionally broken bound");
    auto* bits = cmd->add_flag("--bits", "report in bits (default)");
    auto* nats = cmd->add_flag("--nats", "report in nats");
    nats->excludes(bits);
    cmd->callback([&config, nats] {
      if (nats->count() > 0) {
        config.bits = false;
      }
    });
    return cmd;
  };

  auto* bounds_cmd =
      add_shared(app.add_subcommand("bounds", "bounds for given matrices")),
      *sweep_cmd = add_shared(app.add_subcommand("sweep", "family sweep CSV")),
      *random_cmd = add_shared(
          app.add_subcommand("random", "Haar-random bound statistics")),
      *verify_cmd = add_shared(
          app.add_subcommand("verify", "Monte-Carlo validity check")),
      *table1_cmd = add_shared(
          app.add_subcommand("table1", "bounds for the built-in O3 example"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds_cmd->parsed()) {
      if (config.matrix_paths.empty()) {
        throw eub::InvalidInputError("bounds needs at least one --matrix");
      }
      return cmd_bounds(config);
    }
    if (sweep_cmd->parsed()) {
      if (config.family.empty()) {
        throw eub::InvalidInputError("sweep needs --family");
      }
      return cmd_sweep(config);
    }
    if (random_cmd->parsed()) {
      return cmd_random(config);
    }
    if (verify_cmd->parsed()) {
      if (config.matrix_paths.empty() && config.family.empty()) {
        throw eub::InvalidInputError("verify needs --matrix or --family");
      }
      return cmd_verify(config);
    }
    if (table1_cmd->parsed()) {
      return cmd_table1(config);
    }
  } catch (const eub::UnitarityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const eub::NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const eub::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
