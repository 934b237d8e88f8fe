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

#include "wlab/serialize.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace wlab {

namespace {

using nlohmann::json;

void append_matrix(std::string& out, const CMatrix& m) {
  out += '[';
  bool first = true;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!first) out += ',';
      first = false;
      out += '[';
      out += format_double(m(r, c).real());
      out += ',';
      out += format_double(m(r, c).imag());
      out += ']';
    }
  out += ']';
}

CMatrix parse_matrix(const json& entries, int dim, const char* what) {
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw FormatError(std::string(what) + ": matrix entry count mismatch");
  CMatrix m(dim, dim);
  std::size_t idx = 0;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2)
      throw FormatError(std::string(what) + ": matrix entries must be [re, im] pairs");
    m(static_cast<Eigen::Index>(idx / dim), static_cast<Eigen::Index>(idx % dim)) =
        cplx(pair[0].get<double>(), pair[1].get<double>());
    ++idx;
  }
  return m;
}

std::string with_checksum(const std::string& body) {
  // Keys are sorted and "checksum" sorts first in every format here, so the
  // digest of the body splices in right after the opening brace.
  return "{\"checksum\":\"" + sha256_hex(body) + "\"," + body.substr(1);
}

void verify_checksum(const json& doc, const std::string& body, const char* what) {
  if (!doc.contains("checksum") || !doc["checksum"].is_string())
    throw FormatError(std::string(what) + ": missing checksum");
  if (doc["checksum"].get<std::string>() != sha256_hex(body))
    throw FormatError(std::string(what) + ": checksum mismatch");
}

std::string witness_body(const WitnessFileV1& f) {
  std::string body = "{\"format_version\":1,\"k\":" + std::to_string(f.k) + ",\"matrix\":";
  append_matrix(body, f.matrix);
  body += ",\"n\":" + std::to_string(f.n);
  body += ",\"normalized\":";
  body += f.normalized ? "true" : "false";
  body += '}';
  return body;
}

std::string certificate_body(const CertificateFileV1& f) {
  const DetectionCertificate& c = f.certificate;
  std::string body = "{\"format_version\":1,\"k\":" + std::to_string(f.k);
  body += ",\"n\":" + std::to_string(f.n);
  body += ",\"ppt_residual\":" + format_double(c.ppt_residual);
  body += ",\"psd_residual\":" + format_double(c.psd_residual);
  body += ",\"rho\":";
  append_matrix(body, c.rho);
  body += ",\"rng\":\"" + f.rng + "\"";
  body += ",\"seed\":" + std::to_string(c.seed);
  body += ",\"steps\":" + std::to_string(c.steps);
  body += ",\"trace_residual\":" + format_double(c.trace_residual);
  body += ",\"value\":" + format_double(c.value);
  body += '}';
  return body;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_double: non-finite value");
  if (v == 0.0) return "0";  // normalize -0.0 so round-trips stay byte-stable
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256_hex: digest failure");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

WitnessFileV1 witness_file(const BlockWitness& w) {
  WitnessFileV1 f;
  f.n = w.spec.n;
  f.k = w.spec.k;
  f.normalized = w.normalized;
  f.matrix = w.matrix;
  return f;
}

std::string witness_file_to_json(const WitnessFileV1& f) {
  return with_checksum(witness_body(f));
}

WitnessFileV1 witness_file_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("witness file: ") + e.what());
  }
  WitnessFileV1 f;
  try {
    if (doc.at("format_version").get<int>() != 1)
      throw FormatError("witness file: unsupported format_version");
    f.n = doc.at("n").get<int>();
    f.k = doc.at("k").get<int>();
    f.normalized = doc.at("normalized").get<bool>();
    f.matrix = parse_matrix(doc.at("matrix"), f.n * f.n, "witness file");
  } catch (const json::exception& e) {
    throw FormatError(std::string("witness file: ") + e.what());
  }
  verify_checksum(doc, witness_body(f), "witness file");
  return f;
}

std::string certificate_to_json(const CertificateFileV1& f) {
  return with_checksum(certificate_body(f));
}

CertificateFileV1 certificate_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("certificate file: ") + e.what());
  }
  CertificateFileV1 f;
  try {
    if (doc.at("format_version").get<int>() != 1)
      throw FormatError("certificate file: unsupported format_version");
    f.n = doc.at("n").get<int>();
    f.k = doc.at("k").get<int>();
    f.rng = doc.at("rng").get<std::string>();
    f.certificate.rho = parse_matrix(doc.at("rho"), f.n * f.n, "certificate file");
    f.certificate.trace_residual = doc.at("trace_residual").get<double>();
    f.certificate.psd_residual = doc.at("psd_residual").get<double>();
    f.certificate.ppt_residual = doc.at("ppt_residual").get<double>();
    f.certificate.value = doc.at("value").get<double>();
    f.certificate.seed = doc.at("seed").get<std::uint64_t>();
    f.certificate.steps = doc.at("steps").get<int>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("certificate file: ") + e.what());
  }
  verify_checksum(doc, certificate_body(f), "certificate file");
  return f;
}

std::string family_to_json(const MapSpec& spec, const std::vector<ProductVectorTag>& family) {
  std::string body = "{\"family\":[";
  bool first_tag = true;
  for (const auto& tag : family) {
    if (!first_tag) body += ',';
    first_tag = false;
    const CVector v = product_vec(tag);
    switch (tag.kind) {
      case TagKind::Elementary:
        body += "{\"i\":" + std::to_string(tag.i) + ",\"j\":" + std::to_string(tag.j) +
                ",\"kind\":\"elementary\"";
        break;
      case TagKind::XiXi:
      case TagKind::XiXiStar: {
        body += "{\"kind\":\"";
        body += (tag.kind == TagKind::XiXi) ? "xi_xi" : "xi_xi_star";
        body += "\",\"theta\":[";
        for (std::size_t t = 0; t < tag.theta.theta.size(); ++t) {
          if (t) body += ',';
          body += std::to_string(tag.theta.theta[t]);
        }
        body += ']';
        break;
      }
    }
    body += ",\"vector\":[";
    for (Eigen::Index t = 0; t < v.size(); ++t) {
      if (t) body += ',';
      body += '[';
      body += format_double(v(t).real());
      body += ',';
      body += format_double(v(t).imag());
      body += ']';
    }
    body += "]}";
  }
  body += "],\"format_version\":1,\"k\":" + std::to_string(spec.k) +
          ",\"n\":" + std::to_string(spec.n) + "}";
  return with_checksum(body);
}

std::string sweep_csv(std::vector<SweepRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.n != b.n ? a.n < b.n : a.k < b.k;
  });
  std::string out =
      "n,k,degenerate,exact_rank,expected_rank,certified,min_product_value,"
      "detection_value,seed\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',';
    out += r.degenerate ? "true" : "false";
    out += ',' + std::to_string(r.exact_rank) + ',' + std::to_string(r.expected_rank) + ',';
    out += r.certified ? "true" : "false";
    out += ',';
    out += format_double(r.min_product_value);
    out += ',';
    if (r.detection_value) out += format_double(*r.detection_value);
    out += ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

void atomic_write_file(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::exists(dir, ec) || !fs::is_directory(dir, ec))
    throw IoError("cannot write " + path.string() + ": directory does not exist");
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open temporary file " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("short write to " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("read failure on " + path.string());
  return buf.str();
}

}  // namespace wlab
