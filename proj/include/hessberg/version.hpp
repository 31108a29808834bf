#ifndef HESSBERG_VERSION_HPP
#define HESSBERG_VERSION_HPP

#include <cstdint>

namespace hessberg {

inline constexpr const char* kVersion = "1.0.0";

// default seed for every randomized check; reports echo the seed used
inline constexpr uint64_t kDefaultSeed = 12345;

}  // namespace hessberg

#endif
