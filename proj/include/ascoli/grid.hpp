// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "ascoli/rational.hpp"

namespace ascoli {

/// The uniform grid Y_j = { i * 2^-(j+1) : 0 <= i <= 2^(j+1) }. Points of
/// spacing 2^-(j+1), so every x in [0,1] is strictly within 2^-j of one.
inline std::vector<Rational> grid_Y(unsigned long j) {
    std::size_t count = (static_cast<std::size_t>(1) << (j + 1)) + 1;
    Rational step = pow2(-static_cast<long>(j + 1));
    std::vector<Rational> ys;
    ys.reserve(count);
    Rational y(0);
    for (std::size_t i = 0; i < count; ++i, y += step) ys.push_back(y);
    return ys;
}

}  // namespace ascoli
