#pragma once

/// @file rng.hpp
/// Deterministic random source. One instance per party session; a fixed seed
/// reproduces labels, exponents, and shuffles bit for bit, which is what makes
/// transcript-replay tests possible.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "ppm/bytes.hpp"

namespace ppm {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    void fill(std::span<std::uint8_t> out);

    Bytes bytes(std::size_t len) {
        Bytes b(len);
        fill(b);
        return b;
    }

    /// Uniform value in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    /// Fisher-Yates shuffle of the index range [0, n).
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed for a named role from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::string_view role);

}  // namespace ppm
