// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ascoli {

/// Raised when an extraction cannot materialize enough selections from the
/// given finite prefix of a sequence. The fix is a larger horizon, not a bug.
struct HorizonInsufficient : std::runtime_error {
    explicit HorizonInsufficient(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when answering a digit/bit query would need more precision than the
/// configured budget allows (e.g. deciding a binary digit of a number that is
/// exactly a dyadic boundary, from approximations alone).
struct PrecisionBudgetExceeded : std::runtime_error {
    explicit PrecisionBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a tree query goes past the tree's depth budget.
struct DepthBudgetExceeded : std::runtime_error {
    explicit DepthBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the leftmost-branch search when neither child of the current
/// node survives the lookahead liveness check.
struct DeadEnd : std::runtime_error {
    DeadEnd(const std::string& what, std::string node)
        : std::runtime_error(what), node(std::move(node)) {}
    std::string node;
};

/// Raised when a point's location in the middle-third scaffold cannot be
/// resolved within the requested depth.
struct UnresolvedLocation : std::runtime_error {
    UnresolvedLocation(const std::string& what, std::size_t depth)
        : std::runtime_error(what), depth_reached(depth) {}
    std::size_t depth_reached;
};

/// Raised when a claimed continuity certificate is contradicted by exact
/// evaluation during modulus uniformization.
struct CertificateViolation : std::runtime_error {
    explicit CertificateViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ascoli
