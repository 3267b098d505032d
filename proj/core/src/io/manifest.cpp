// Copyright 2026 The scramble Authors
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


#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "scramble/io.hpp"

#ifndef SCRAMBLE_VERSION
#define SCRAMBLE_VERSION "0.0.0"
#endif

namespace scramble {

std::string library_version() { return SCRAMBLE_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xf];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

std::string manifest_text(const RunManifest& m) {
  std::ostringstream os;
  os << "subcommand=" << m.subcommand << "\n";
  os << "version=" << m.version << "\n";
  os.precision(6);
  os << std::fixed << "wall_seconds=" << m.wall_seconds << "\n";
  for (const auto& [k, v] : m.config) os << "config." << k << "=" << v << "\n";
  for (const auto& [k, v] : m.results) os << "result." << k << "=" << v << "\n";
  if (m.subcommand == "validate") os << "failures=" << m.failures << "\n";
  for (const auto& [file, hash] : m.outputs) os << "output." << file << "=sha256:" << hash << "\n";
  return os.str();
}

}  // namespace scramble
