#pragma once

/// @file shake.hpp
/// SHAKE-256 with caller-chosen output length. Group elements can be
/// arbitrarily wide, so every keyed construction in this project derives its
/// keystream from an extendable-output hash.

#include <cstdint>
#include <initializer_list>

#include "ppm/bytes.hpp"

namespace ppm {

/// SHAKE-256 over the concatenation of `parts`, producing `out_len` bytes.
Bytes shake256(std::initializer_list<ByteView> parts, std::size_t out_len);

inline Bytes shake256(ByteView in, std::size_t out_len) {
    return shake256({in}, out_len);
}

/// Number of SHAKE-256 invocations made by the calling thread so far.
/// Sessions snapshot this around their round work to report hash counts.
std::uint64_t shake256_invocations();

}  // namespace ppm
