// Copyright 2026 The witness-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface. Exit codes encode outcomes so shell scripts can
// assert them: 0 success/certified/found, 1 mathematical negative
// (not certified / not found / witness evidence failed), 2 invalid
// invocation, 3 I/O or file-format failure.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wlab/hunt.hpp"
#include "wlab/rng.hpp"
#include "wlab/serialize.hpp"
#include "wlab/spanset.hpp"
#include "wlab/witness.hpp"

namespace {

using namespace wlab;

int worker_cap() {
  if (const char* env = std::getenv("WITNESS_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw std::invalid_argument("WITNESS_LAB_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string spanning_json(const SpanningReport& r) {
  std::string s = "{\"certified\":";
  s += r.certified ? "true" : "false";
  s += ",\"exact_rank\":" + std::to_string(r.exact_rank);
  s += ",\"expected_rank\":" + std::to_string(r.expected);
  s += ",\"generated_count\":" + std::to_string(r.generated_count);
  s += ",\"k\":" + std::to_string(r.spec.k);
  s += ",\"n\":" + std::to_string(r.spec.n);
  s += ",\"numeric_rank\":" + std::to_string(r.numeric_rank);
  s += ",\"target\":\"" + r.target + "\"}";
  return s;
}

struct BuildArgs {
  int n = 0, k = 0;
  bool normalized = false;
  bool gamma = false;
  std::string out;
};

int cmd_build(const BuildArgs& a) {
  const MapSpec spec = MapSpec::make(a.n, a.k);
  BlockWitness w = build_witness(spec, a.normalized);
  if (a.gamma) w = witness_gamma(w);
  atomic_write_file(a.out, witness_file_to_json(witness_file(w)) + "\n");
  return 0;
}

struct SpanningArgs {
  int n = 0, k = 0;
  std::string emit_family;
};

int cmd_spanning(const SpanningArgs& a) {
  const MapSpec spec = MapSpec::make(a.n, a.k);
  const SpanningReport report = spanning_report(spec);
  if (!a.emit_family.empty())
    atomic_write_file(a.emit_family, family_to_json(spec, generating_family(spec)) + "\n");
  std::cout << spanning_json(report) << "\n";
  return report.certified ? 0 : 1;
}

struct VerifyArgs {
  int n = 0, k = 0;
  int restarts = 50;
  int max_iters = 500;
  double tol = 1e-12;
  std::uint64_t seed = 7;
};

int cmd_verify(const VerifyArgs& a) {
  const MapSpec spec = MapSpec::make(a.n, a.k);
  const BlockWitness w = build_witness(spec);
  const ProductMinResult r =
      min_product_expectation(w, a.restarts, a.max_iters, a.tol, a.seed);
  const double lmin = lambda_min(w.matrix);
  std::cout << "{\"best_value\":" << format_double(r.best_value)
            << ",\"iterations\":" << r.iterations << ",\"k\":" << spec.k
            << ",\"lambda_min\":" << format_double(lmin) << ",\"n\":" << spec.n
            << ",\"restarts_used\":" << r.restarts_used << ",\"seed\":" << a.seed
            << "}\n";
  const bool witness_evidence = r.best_value >= -1e-9 && lmin < 0.0;
  return witness_evidence ? 0 : 1;
}

struct DetectArgs {
  int n = 0, k = 0;
  int steps = 2000;
  double step_size = 0.05;
  int dykstra_iters = 30;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_detect(const DetectArgs& a) {
  const MapSpec spec = MapSpec::make(a.n, a.k);
  const BlockWitness w = build_witness(spec);
  const auto cert = detect_pptes(w, a.steps, a.step_size, a.dykstra_iters, a.seed);
  if (!cert) {
    std::cout << "{\"found\":false,\"k\":" << spec.k << ",\"n\":" << spec.n
              << ",\"seed\":" << a.seed << ",\"steps\":" << a.steps << "}\n";
    return 1;
  }
  CertificateFileV1 file;
  file.n = spec.n;
  file.k = spec.k;
  file.rng = kRngName;
  file.certificate = *cert;
  atomic_write_file(a.out, certificate_to_json(file) + "\n");
  std::cout << "{\"found\":true,\"k\":" << spec.k << ",\"n\":" << spec.n
            << ",\"ppt_residual\":" << format_double(cert->ppt_residual)
            << ",\"psd_residual\":" << format_double(cert->psd_residual)
            << ",\"seed\":" << cert->seed << ",\"steps\":" << cert->steps
            << ",\"trace_residual\":" << format_double(cert->trace_residual)
            << ",\"value\":" << format_double(cert->value) << "}\n";
  return 0;
}

struct SweepArgs {
  int n_min = 3, n_max = 6;
  std::string report;
  std::uint64_t seed = 1;
  int detect_steps = 300;
  int restarts = 20;
};

int cmd_sweep(const SweepArgs& a) {
  if (a.n_min < 3 || a.n_min > a.n_max || a.n_max > 8)
    throw std::invalid_argument("sweep bounds must satisfy 3 <= n-min <= n-max <= 8");

  std::vector<MapSpec> specs;
  for (int n = a.n_min; n <= a.n_max; ++n)
    for (int k = 1; k < n; ++k) specs.push_back(MapSpec::make(n, k));

  std::vector<SweepRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto compute_row = [&](const MapSpec& spec) {
    const std::uint64_t row_seed = mix_seed(a.seed, spec.n, spec.k);
    const SpanningReport report = spanning_report(spec);
    const BlockWitness w = build_witness(spec);
    const ProductMinResult pm =
        min_product_expectation(w, a.restarts, 200, 1e-12, row_seed);
    const auto cert = detect_pptes(w, a.detect_steps, 0.05, 30, row_seed);
    SweepRow row;
    row.n = spec.n;
    row.k = spec.k;
    row.degenerate = spec.degenerate();
    row.exact_rank = report.exact_rank;
    row.expected_rank = report.expected;
    row.certified = report.certified;
    row.min_product_value = pm.best_value;
    if (cert) row.detection_value = cert->value;
    row.seed = row_seed;
    return row;
  };
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= specs.size()) return;
        rows[idx] = compute_row(specs[idx]);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  const int threads = std::min<int>(worker_cap(), static_cast<int>(specs.size()));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  atomic_write_file(a.report, sweep_csv(rows));

  int uncertified_nondegenerate = 0;
  int detections = 0;
  for (const auto& row : rows) {
    if (!row.degenerate && !row.certified) ++uncertified_nondegenerate;
    if (row.detection_value) ++detections;
  }
  std::cout << "{\"detections\":" << detections
            << ",\"report\":\"" << a.report << "\",\"rows\":" << rows.size()
            << ",\"uncertified_nondegenerate\":" << uncertified_nondegenerate << "}\n";
  return uncertified_nondegenerate == 0 ? 0 : 1;
}

struct ExpectArgs {
  std::string witness_path;
  std::string state_path;
};

int cmd_expect(const ExpectArgs& a) {
  const WitnessFileV1 wf = witness_file_from_json(read_file(a.witness_path));
  const CertificateFileV1 cf = certificate_from_json(read_file(a.state_path));
  if (wf.matrix.rows() != cf.certificate.rho.rows())
    throw std::invalid_argument("expect: witness and state dimensions differ");
  const double value = expectation_matrix(wf.matrix, cf.certificate.rho);
  std::cout << "{\"value\":" << format_double(value) << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indecomposable-positive-map witness family on C^n⊗C^n: construction, "
               "exact spanning certificates for the partial transpose, and numerical "
               "PPT-entanglement detection"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Construct a witness and write it as JSON");
  build->add_option("--n", build_args.n, "Local dimension n (>= 3)")->required();
  build->add_option("--k", build_args.k, "Shift parameter k (1..n-1)")->required();
  build->add_flag("--normalized", build_args.normalized, "Scale by 1/n");
  build->add_flag("--gamma", build_args.gamma, "Write the partial transpose instead");
  build->add_option("--out", build_args.out, "Output file")->required();

  SpanningArgs spanning_args;
  auto* spanning = app.add_subcommand(
      "spanning", "Certify the spanning property of the zero set of W^Gamma (exact rank)");
  spanning->add_option("--n", spanning_args.n)->required();
  spanning->add_option("--k", spanning_args.k)->required();
  spanning->add_option("--emit-family", spanning_args.emit_family,
                       "Also write the generating family as JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Witness evidence: product-state minimum and lambda_min(W)");
  verify->add_option("--n", verify_args.n)->required();
  verify->add_option("--k", verify_args.k)->required();
  verify->add_option("--restarts", verify_args.restarts, "Seeded restarts (default 50)");
  verify->add_option("--max-iters", verify_args.max_iters, "Iteration cap per restart");
  verify->add_option("--tol", verify_args.tol, "Stop when the decrease drops below this");
  verify->add_option("--seed", verify_args.seed, "Base seed (default 7)");

  DetectArgs detect_args;
  auto* detect = app.add_subcommand(
      "detect", "Search the PPT body for a state with negative expectation");
  detect->add_option("--n", detect_args.n)->required();
  detect->add_option("--k", detect_args.k)->required();
  detect->add_option("--steps", detect_args.steps, "Subgradient steps (default 2000)");
  detect->add_option("--step-size", detect_args.step_size,
                     "Step coefficient of 1/||W||_F (default 0.05)");
  detect->add_option("--dykstra-iters", detect_args.dykstra_iters,
                     "Projection rounds per step (default 30)");
  detect->add_option("--seed", detect_args.seed, "Seed (default 1)");
  detect->add_option("--out", detect_args.out, "Certificate output file")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Sweep all (n, k) and write a CSV report");
  sweep->add_option("--n-min", sweep_args.n_min, "Smallest n (default 3)");
  sweep->add_option("--n-max", sweep_args.n_max, "Largest n (default 6, cap 8)");
  sweep->add_option("--report", sweep_args.report, "CSV output file")->required();
  sweep->add_option("--seed", sweep_args.seed, "Base seed (default 1)");
  sweep->add_option("--detect-steps", sweep_args.detect_steps,
                    "Detection budget per row (default 300)");
  sweep->add_option("--restarts", sweep_args.restarts,
                    "Product-minimum restarts per row (default 20)");

  ExpectArgs expect_args;
  auto* expect = app.add_subcommand("expect", "Evaluate Tr(W rho) from saved files");
  expect->add_option("--witness", expect_args.witness_path, "Witness JSON file")->required();
  expect->add_option("--state", expect_args.state_path, "State/certificate JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(build)) return cmd_build(build_args);
    if (app.got_subcommand(spanning)) return cmd_spanning(spanning_args);
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
    if (app.got_subcommand(detect)) return cmd_detect(detect_args);
    if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args);
    if (app.got_subcommand(expect)) return cmd_expect(expect_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
