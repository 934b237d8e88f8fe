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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlab/hunt.hpp"
#include "wlab/spanset.hpp"
#include "wlab/witness.hpp"

namespace wlab {

// File formats are canonical JSON: object keys in sorted order, no
// whitespace, doubles rendered with 17 significant digits (%.17g), complex
// entries as [re, im] pairs. Each file carries a checksum: the SHA-256 hex
// digest of the canonical serialization with the checksum key omitted.

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);  // %.17g; rejects non-finite values
std::string sha256_hex(std::string_view data);

struct WitnessFileV1 {
  int format_version = 1;
  int n = 0;
  int k = 0;
  bool normalized = false;
  CMatrix matrix;  // n^2 x n^2 entries, row-major in the file
};

WitnessFileV1 witness_file(const BlockWitness& w);
std::string witness_file_to_json(const WitnessFileV1& f);
WitnessFileV1 witness_file_from_json(const std::string& text);  // verifies checksum

struct CertificateFileV1 {
  int format_version = 1;
  int n = 0;
  int k = 0;
  std::string rng;  // generator name, see wlab/rng.hpp
  DetectionCertificate certificate;
};

std::string certificate_to_json(const CertificateFileV1& f);
CertificateFileV1 certificate_from_json(const std::string& text);

std::string family_to_json(const MapSpec& spec, const std::vector<ProductVectorTag>& family);

struct SweepRow {
  int n = 0;
  int k = 0;
  bool degenerate = false;
  int exact_rank = 0;
  int expected_rank = 0;
  bool certified = false;
  double min_product_value = 0.0;
  std::optional<double> detection_value;  // empty CSV field when absent
  std::uint64_t seed = 0;
};

// Fixed header and column order; rows sorted by (n, k).
std::string sweep_csv(std::vector<SweepRow> rows);

// Writes to a temporary file in the target directory, then renames, so a
// failure never leaves a partial file at `path`.
void atomic_write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace wlab
