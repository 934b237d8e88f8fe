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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "wlab/rng.hpp"
#include "wlab/serialize.hpp"

using namespace wlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* name) {
  const fs::path dir = fs::temp_directory_path() / (std::string("wlab_test_") + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("doubles render with 17 significant digits and round-trip") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-1.5) == "-1.5");
  for (double v : {1.0 / 3.0, 1e-300, -0.15470053837925146, 2.0 / 3.0}) {
    const double parsed = std::strtod(format_double(v).c_str(), nullptr);
    CHECK(parsed == v);
  }
  CHECK_THROWS_AS(format_double(std::nan("")), std::invalid_argument);
}

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("witness files round-trip byte for byte") {
  const BlockWitness w = build_witness(MapSpec::make(3, 1));
  const std::string text = witness_file_to_json(witness_file(w));
  const WitnessFileV1 loaded = witness_file_from_json(text);
  CHECK(loaded.n == 3);
  CHECK(loaded.k == 1);
  CHECK_FALSE(loaded.normalized);
  CHECK(loaded.matrix == w.matrix);
  CHECK(witness_file_to_json(loaded) == text);

  // Keys arrive sorted and the payload has n^4 entries.
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("matrix").size() == 81);

  std::string tampered = text;
  const auto pos = tampered.find("\"k\":1");
  tampered.replace(pos, 5, "\"k\":2");
  CHECK_THROWS_AS(witness_file_from_json(tampered), FormatError);
  CHECK_THROWS_AS(witness_file_from_json("{\"format_version\":1}"), FormatError);
  CHECK_THROWS_AS(witness_file_from_json("not json"), FormatError);
}

TEST_CASE("certificate files round-trip") {
  DetectionCertificate cert;
  cert.rho = CMatrix::Identity(9, 9) / 9.0;
  cert.trace_residual = 1e-12;
  cert.psd_residual = 0.0;
  cert.ppt_residual = 2.5e-10;
  cert.value = -0.125;
  cert.seed = 123456789012345ULL;
  cert.steps = 321;
  const CertificateFileV1 file{1, 3, 1, kRngName, cert};
  const std::string text = certificate_to_json(file);
  const CertificateFileV1 loaded = certificate_from_json(text);
  CHECK(loaded.rng == std::string(kRngName));
  CHECK(loaded.certificate.value == cert.value);
  CHECK(loaded.certificate.seed == cert.seed);
  CHECK(loaded.certificate.steps == cert.steps);
  CHECK(loaded.certificate.rho == cert.rho);
  CHECK(certificate_to_json(loaded) == text);
}

TEST_CASE("family JSON carries tagged vectors") {
  const MapSpec spec = MapSpec::make(3, 1);
  const auto family = generating_family(spec);
  const std::string text = family_to_json(spec, family);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("n") == 3);
  CHECK(doc.at("family").size() == 27);
  int elementary = 0, grid = 0;
  for (const auto& entry : doc.at("family")) {
    CHECK(entry.at("vector").size() == 9);
    if (entry.at("kind") == "elementary") {
      ++elementary;
      CHECK(entry.contains("i"));
      CHECK(entry.contains("j"));
    } else {
      ++grid;
      CHECK(entry.at("kind") == "xi_xi");
      CHECK(entry.at("theta").size() == 3);
    }
  }
  CHECK(elementary == 3);
  CHECK(grid == 24);
}

TEST_CASE("sweep CSV has a fixed schema and sorted rows") {
  SweepRow a{4, 2, true, 14, 14, false, 3.2e-15, std::nullopt, 9};
  SweepRow b{3, 1, false, 9, 9, true, 1.5e-15, -0.154, 7};
  const std::string csv = sweep_csv({a, b});
  CHECK(csv ==
        "n,k,degenerate,exact_rank,expected_rank,certified,min_product_value,"
        "detection_value,seed\n"
        "3,1,false,9,9,true,1.4999999999999999e-15,-0.154,7\n"
        "4,2,true,14,14,false,3.1999999999999999e-15,,9\n");
}

TEST_CASE("atomic writes leave no partial files") {
  const fs::path dir = fresh_dir("atomic");
  const fs::path target = dir / "out.json";
  atomic_write_file(target, "payload");
  CHECK(read_file(target) == "payload");

  const fs::path missing = dir / "no_such_dir" / "out.json";
  CHECK_THROWS_AS(atomic_write_file(missing, "payload"), IoError);
  CHECK_FALSE(fs::exists(missing));
  CHECK_THROWS_AS(read_file(dir / "absent.json"), IoError);
  fs::remove_all(dir);
}
