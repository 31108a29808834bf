#ifndef HESSBERG_LINALG_HPP
#define HESSBERG_LINALG_HPP

#include <vector>

#include "hessberg/rational.hpp"

namespace hessberg {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Exact rank by fraction-free (Bareiss) elimination over the integers after
// clearing denominators row by row.
long rank_exact(const RatMatrix& m);
long rank_exact_int(IntMatrix m);

}  // namespace hessberg

#endif
