#include "kg2i/hash.h"

#include <openssl/sha.h>

#include <array>

namespace kg2i {

namespace {

std::array<unsigned char, SHA256_DIGEST_LENGTH> Digest(std::string_view data) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> out;
  SHA256(reinterpret_cast<const unsigned char *>(data.data()), data.size(),
         out.data());
  return out;
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned char b : Digest(data)) {
    hex.push_back(kHex[b >> 4]);
    hex.push_back(kHex[b & 15]);
  }
  return hex;
}

uint64_t DeriveSeed(uint64_t seed, std::string_view stream) {
  auto digest = Digest(std::to_string(seed) + ":" + std::string(stream));
  uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out = (out << 8) | digest[i];
  return out;
}

}  // namespace kg2i
