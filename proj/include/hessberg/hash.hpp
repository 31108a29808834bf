#ifndef HESSBERG_HASH_HPP
#define HESSBERG_HASH_HPP

#include <cstdint>
#include <string_view>

namespace hessberg {

// FNV-1a; used for report digests and per-instance seed derivation, stable
// across platforms and standard libraries
inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hessberg

#endif
