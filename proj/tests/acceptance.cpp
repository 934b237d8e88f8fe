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

// Acceptance suite: one self-contained check per shipping criterion, each
// printed as a single [PASS]/[FAIL] line. Exit status is nonzero if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wlab/hunt.hpp"
#include "wlab/rng.hpp"
#include "wlab/serialize.hpp"
#include "wlab/spanset.hpp"
#include "wlab/witness.hpp"

using namespace wlab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void report(int id, const std::string& label, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
  if (!ok) {
    ++g_failures;
    for (const auto& n : g_notes) std::printf("       - %s\n", n.c_str());
  }
  g_notes.clear();
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WLAB_CLI_PATH) + " " + args + " 2>&1";
  CmdResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Shared spanning table for criteria 1, 2 and 7.
std::map<std::pair<int, int>, SpanningReport> g_reports;
double g_reports_seconds = 0.0;

void compute_reports() {
  const auto t0 = Clock::now();
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      g_reports[{n, k}] = spanning_report(MapSpec::make(n, k));
  g_reports_seconds = seconds_since(t0);
}

bool criterion1_spanning() {
  bool ok = true;
  for (const auto& [key, report] : g_reports) {
    const auto [n, k] = key;
    if ((2 * k) % n == 0) continue;
    if (report.exact_rank != n * n || !report.certified) {
      ok = false;
      note("(" + std::to_string(n) + "," + std::to_string(k) + ") exact rank " +
           std::to_string(report.exact_rank) + " != " + std::to_string(n * n));
    }
  }
  if (g_reports_seconds >= 10.0) {
    ok = false;
    note("spanning table took " + std::to_string(g_reports_seconds) + " s (budget 10 s)");
  }
  note("all 27 spanning reports in " + std::to_string(g_reports_seconds) + " s");
  if (ok) g_notes.clear();
  return ok;
}

bool criterion2_degenerate() {
  bool ok = true;
  const std::map<std::pair<int, int>, int> expected = {
      {{4, 2}, 14}, {{6, 3}, 33}, {{8, 4}, 60}};
  for (const auto& [key, rank] : expected) {
    const auto& report = g_reports.at(key);
    if (report.exact_rank != rank || report.certified) {
      ok = false;
      note("(" + std::to_string(key.first) + "," + std::to_string(key.second) +
           ") exact rank " + std::to_string(report.exact_rank) + " != " +
           std::to_string(rank));
    }
  }
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const bool parity = (2 * k) % n == 0;
      const bool half = (n % 2 == 0) && (k == n / 2);
      if (parity != half || MapSpec::make(n, k).degenerate() != parity) {
        ok = false;
        note("parity predicate mismatch at (" + std::to_string(n) + "," +
             std::to_string(k) + ")");
      }
    }
  return ok;
}

bool criterion3_zero_set() {
  bool ok = true;
  for (int n : {3, 4}) {
    const long tuples = 1L << (2 * n);
    for (int k = 1; k < n; ++k) {
      const MapSpec spec = MapSpec::make(n, k);
      const BlockWitness w = build_witness(spec);
      const BlockWitness g = witness_gamma(w);
      for (long code = 0; code < tuples; ++code) {
        std::vector<int> theta(n);
        long rest = code;
        for (int j = 0; j < n; ++j) {
          theta[j] = static_cast<int>(rest & 3);
          rest >>= 2;
        }
        const PhaseTuple t = PhaseTuple::grid(theta);
        if (!zero_membership(w, ProductVectorTag::xi_xi_star(t), MembershipMode::Exact) ||
            !zero_membership(g, ProductVectorTag::xi_xi(t), MembershipMode::Exact)) {
          ok = false;
          note("nonzero form on the grid at (" + std::to_string(n) + "," +
               std::to_string(k) + "), tuple code " + std::to_string(code));
        }
      }
      for (int i = 0; i < n; ++i)
        for (const auto& tag : v_set(spec, i))
          if (!zero_membership(g, tag, MembershipMode::Exact)) {
            ok = false;
            note("V_i member not in the zero set at (" + std::to_string(n) + "," +
                 std::to_string(k) + "), i=" + std::to_string(i));
          }
    }
  }
  return ok;
}

bool criterion4_choi_consistency() {
  bool ok = true;
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const MapSpec spec = MapSpec::make(n, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CMatrix e = CMatrix::Zero(n, n);
          e(i, j) = 1.0;
          if (build_block(spec, i, j) != apply_map(spec, e)) {
            ok = false;
            note("block/map mismatch at (" + std::to_string(n) + "," + std::to_string(k) +
                 "), entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
    }
  return ok;
}

bool criterion5_witness_evidence() {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const MapSpec spec = MapSpec::make(n, k);
      const BlockWitness w = build_witness(spec);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";

      const double lmin = lambda_min(w.matrix);
      if (!(lmin < 0.0)) {
        ok = false;
        note(tag + " lambda_min " + std::to_string(lmin) + " not negative");
      }

      const ProductMinResult pm =
          min_product_expectation(w, 100, 300, 1e-13, mix_seed(2026, n, k));
      if (!(pm.best_value >= -1e-9)) {
        ok = false;
        note(tag + " product minimum " + std::to_string(pm.best_value) + " below -1e-9");
      }

      for (int s = 0; s < 10000; ++s) {
        const CMatrix rho =
            sample_separable(n, 1 + (s % 4), mix_seed(777, n * 10 + k, s));
        const double value = expectation(w, rho);
        if (!(value >= -1e-10)) {
          ok = false;
          note(tag + " separable sample " + std::to_string(s) + " expectation " +
               std::to_string(value));
          break;
        }
      }
    }
  }
  return ok;
}

// Detections shared between criteria 6 and 7.
std::vector<std::pair<MapSpec, DetectionCertificate>> g_detections;

bool criterion6_detection() {
  bool ok = true;
  const struct {
    int n, k, steps;
  } targets[] = {{3, 1, 2000}, {4, 1, 1200}, {5, 1, 1200}};
  for (const auto& t : targets) {
    const MapSpec spec = MapSpec::make(t.n, t.k);
    const BlockWitness w = build_witness(spec);
    const std::string tag = "(" + std::to_string(t.n) + "," + std::to_string(t.k) + ")";
    const auto t0 = Clock::now();
    const auto cert = detect_pptes(w, t.steps, 0.05, 30, 1);
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
      ok = false;
      note(tag + " detection took " + std::to_string(elapsed) + " s (budget 60 s)");
    }
    if (!cert) {
      ok = false;
      note(tag + " no detection found");
      continue;
    }
    if (!(cert->value < 0.0 && cert->psd_residual <= 1e-8 && cert->ppt_residual <= 1e-8 &&
          cert->trace_residual <= 1e-9)) {
      ok = false;
      note(tag + " certificate violates feasibility: value=" + std::to_string(cert->value) +
           " psd=" + std::to_string(cert->psd_residual) +
           " ppt=" + std::to_string(cert->ppt_residual) +
           " trace=" + std::to_string(cert->trace_residual));
    }
    g_detections.emplace_back(spec, *cert);

    if (t.n == 3) {  // bit-exact reproducibility, checked on the headline spec
      const auto rerun = detect_pptes(w, t.steps, 0.05, 30, 1);
      if (!rerun) {
        ok = false;
        note(tag + " rerun found nothing");
      } else {
        const CertificateFileV1 a{1, t.n, t.k, kRngName, *cert};
        const CertificateFileV1 b{1, t.n, t.k, kRngName, *rerun};
        if (certificate_to_json(a) != certificate_to_json(b)) {
          ok = false;
          note(tag + " rerun certificate differs byte-wise");
        }
      }
    }
  }
  return ok;
}

bool criterion7_oracle_agreement() {
  bool ok = true;
  for (const auto& [key, report] : g_reports)
    if (report.numeric_rank != report.exact_rank) {
      ok = false;
      note("numeric rank " + std::to_string(report.numeric_rank) + " != exact " +
           std::to_string(report.exact_rank) + " at (" + std::to_string(key.first) + "," +
           std::to_string(key.second) + ")");
    }
  for (const auto& [spec, cert] : g_detections) {
    const BlockWitness w = build_witness(spec);
    const double recheck = expectation(w, cert.rho);
    if (std::abs(recheck - cert.value) > 1e-10) {
      ok = false;
      note("certificate re-evaluation differs by " + std::to_string(recheck - cert.value));
    }
  }
  return ok;
}

bool criterion8_cli_contract() {
  bool ok = true;
  const fs::path dir = fs::temp_directory_path() / "wlab_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  // Round trip: build -> load -> serialize, byte-identical.
  const fs::path w_path = dir / "w31.json";
  if (run_cli("build --n 3 --k 1 --out " + w_path.string()).exit_code != 0) {
    ok = false;
    note("build exited nonzero");
  } else {
    const std::string bytes = read_file(w_path);
    const WitnessFileV1 loaded = witness_file_from_json(bytes);
    if (witness_file_to_json(loaded) + "\n" != bytes) {
      ok = false;
      note("round-trip serialization is not byte-identical");
    }
  }

  // Sweep n = 3..6 exits 0 and its rank columns match the certified table.
  const fs::path csv_path = dir / "sweep36.csv";
  const CmdResult sweep = run_cli("sweep --n-min 3 --n-max 6 --seed 1 --detect-steps 250 --report " +
                                  csv_path.string());
  if (sweep.exit_code != 0) {
    ok = false;
    note("sweep exited " + std::to_string(sweep.exit_code));
    return ok;
  }
  std::istringstream csv(read_file(csv_path));
  std::string line;
  std::getline(csv, line);
  if (line !=
      "n,k,degenerate,exact_rank,expected_rank,certified,min_product_value,"
      "detection_value,seed") {
    ok = false;
    note("unexpected CSV header: " + line);
  }
  int rows = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    ++rows;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() < 9) {
      ok = false;
      note("short CSV row: " + line);
      continue;
    }
    const int n = std::stoi(fields[0]);
    const int k = std::stoi(fields[1]);
    const bool degenerate = (2 * k) % n == 0;
    const int expected_rank = degenerate ? n * n - n / 2 : n * n;
    if (std::stoi(fields[3]) != expected_rank || fields[2] != (degenerate ? "true" : "false") ||
        fields[5] != (degenerate ? "false" : "true")) {
      ok = false;
      note("row deviates from the rank table: " + line);
    }
  }
  if (rows != 14) {
    ok = false;
    note("expected 14 rows for n in 3..6, got " + std::to_string(rows));
  }
  fs::remove_all(dir);
  return ok;
}

}  // namespace

int main() {
  compute_reports();
  report(1, "exact spanning certificate, all nondegenerate (n,k), n = 3..8, under 10 s",
         criterion1_spanning());
  report(2, "degenerate exact ranks 14/33/60 and the parity dichotomy", criterion2_degenerate());
  report(3, "exhaustive exact zero set on the phase grid and V_i inclusions, n = 3,4",
         criterion3_zero_set());
  report(4, "block table equals the map on every elementary matrix, n <= 8",
         criterion4_choi_consistency());
  report(5, "negative eigenvalue, nonnegative product minimum, separable nonnegativity, n <= 6",
         criterion5_witness_evidence());
  report(6, "PPT-entanglement detection certificates for (3,1), (4,1), (5,1), reproducible",
         criterion6_detection());
  report(7, "numeric rank equals exact rank; certificates re-evaluate within 1e-10",
         criterion7_oracle_agreement());
  report(8, "CLI round-trip bytes and sweep CSV agree with the certified table",
         criterion8_cli_contract());

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
