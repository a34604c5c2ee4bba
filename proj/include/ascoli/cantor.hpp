// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ascoli {

/// Finite 0/1 strings are plain std::string over '0'/'1'; the empty string
/// is the tree root.
using BitString = std::string;

inline void validate_bits(const BitString& s) {
    for (char c : s)
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only 0/1: '" + s + "'");
}

/// Cantor pairing <i,k> = (i+k)(i+k+1)/2 + k.
inline std::uint64_t pair_index(std::uint64_t i, std::uint64_t k) {
    std::uint64_t t = i + k;
    return t * (t + 1) / 2 + k;
}

/// Inverse of pair_index.
inline std::pair<std::uint64_t, std::uint64_t> pair_split(std::uint64_t n) {
    std::uint64_t t = 0;
    while ((t + 1) * (t + 2) / 2 <= n) ++t;
    std::uint64_t k = n - t * (t + 1) / 2;
    return {t - k, k};
}

/// A point of the Cantor space 2^N, queried bit by bit. Bit answers are
/// memoized so repeated prefix queries during tree descent stay cheap;
/// the underlying generator must be pure.
class CantorPoint {
public:
    explicit CantorPoint(std::function<int(std::size_t)> bit)
        : impl_(std::make_shared<Impl>(std::move(bit))) {}

    static CantorPoint zeros() {
        return CantorPoint([](std::size_t) { return 0; });
    }
    static CantorPoint ones() {
        return CantorPoint([](std::size_t) { return 1; });
    }
    /// Bits of `head` followed by constant `tail_bit`.
    static CantorPoint eventually(BitString head, int tail_bit) {
        validate_bits(head);
        return CantorPoint([head, tail_bit](std::size_t i) {
            return i < head.size() ? head[i] - '0' : tail_bit;
        });
    }

    int bit(std::size_t i) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        while (impl_->memo.size() <= i) {
            int b = impl_->gen(impl_->memo.size());
            if (b != 0 && b != 1) throw std::logic_error("CantorPoint: generator produced a non-bit");
            impl_->memo.push_back(static_cast<std::int8_t>(b));
        }
        return impl_->memo[i];
    }

    BitString prefix(std::size_t n) const {
        BitString s;
        s.reserve(n);
        for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + bit(i)));
        return s;
    }

private:
    struct Impl {
        explicit Impl(std::function<int(std::size_t)> g) : gen(std::move(g)) {}
        std::function<int(std::size_t)> gen;
        std::mutex mu;
        std::vector<std::int8_t> memo;
    };
    std::shared_ptr<Impl> impl_;
};

}  // namespace ascoli
