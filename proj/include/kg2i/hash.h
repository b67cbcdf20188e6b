#ifndef KG2I_HASH_H_
#define KG2I_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace kg2i {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

// Seed for a named random stream: the first 8 bytes (big-endian) of
// SHA-256("<seed>:<stream>"). Streams with different names are independent,
// so toggling one stage never shifts another stage's draws.
uint64_t DeriveSeed(uint64_t seed, std::string_view stream);

}  // namespace kg2i

#endif  // KG2I_HASH_H_
