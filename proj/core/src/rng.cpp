#include "ppm/rng.hpp"

#include "ppm/shake.hpp"

namespace ppm {

void Rng::fill(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t v = engine_();
        for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
            out[i] = static_cast<std::uint8_t>(v & 0xFF);
            v >>= 8;
        }
    }
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // rejection keeps the draw exactly uniform
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view role) {
    Bytes in;
    put_u64(in, base);
    in.insert(in.end(), role.begin(), role.end());
    Bytes digest = shake256(in, 8);
    std::uint64_t out = 0;
    for (std::uint8_t b : digest) out = (out << 8) | b;
    return out;
}

}  // namespace ppm
