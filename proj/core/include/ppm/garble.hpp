#pragma once

/// @file garble.hpp
/// The double-key symmetric scheme shared by both protocols and the garbled
/// gate built from it. A ciphertext is
///   SHAKE-256(L || R) xor (S || 0xFF * 13)
/// truncated to |S| + 13 bytes; decryption accepts only when the 13 padding
/// bytes survive, so a wrong key pair slips through with probability 2^-104.

#include <array>
#include <cstdint>
#include <optional>

#include "ppm/bytes.hpp"
#include "ppm/rng.hpp"

namespace ppm {

/// Trailing all-ones padding appended to every payload before masking.
inline constexpr std::size_t kPadBytes = 13;

/// Truth vector of a two-bit gate; bit index is (left << 1) | right.
using GateTruth = std::uint8_t;
inline constexpr GateTruth kNand = 0b0111;

/// A per-wire key: opaque random bytes in the open protocol, the fixed-width
/// encoding of a group element in the hidden one. Length is uniform within a
/// session.
class WireLabel {
  public:
    WireLabel() = default;
    explicit WireLabel(Bytes b) : bytes_(std::move(b)) {}
    static WireLabel random(Rng& rng, std::size_t len) { return WireLabel(rng.bytes(len)); }

    const Bytes& bytes() const { return bytes_; }
    std::size_t size() const { return bytes_.size(); }
    bool operator==(const WireLabel&) const = default;

  private:
    Bytes bytes_;
};

struct LabelPair {
    WireLabel for0, for1;
    const WireLabel& operator[](int bit) const { return bit ? for1 : for0; }
};

/// Four equal-length ciphertexts in uniformly random order.
class GarbledGate {
  public:
    static constexpr std::size_t kRows = 4;

    GarbledGate() = default;
    explicit GarbledGate(std::array<Bytes, kRows> rows) : rows_(std::move(rows)) {}

    const std::array<Bytes, kRows>& rows() const { return rows_; }

    std::size_t serialized_size() const { return rows_[0].size() * kRows; }
    void append_to(Bytes& out) const;
    /// Reads 4 ciphertexts of label_len + kPadBytes each.
    static GarbledGate parse(ByteView in, std::size_t& off, std::size_t label_len);

  private:
    std::array<Bytes, kRows> rows_;
};

/// Encrypts `payload` under the key pair. All three labels must share one
/// length; the ciphertext is payload-length + 13 bytes.
Bytes enc(const WireLabel& key_left, const WireLabel& key_right, const WireLabel& payload);

/// Inverts enc. Returns the payload when the padding check passes, nullopt
/// when it does not (wrong key pair). Throws GarbleError on a bad length.
std::optional<Bytes> dec(const WireLabel& key_left, const WireLabel& key_right,
                         ByteView ciphertext);

/// Builds the garbled gate: the four encryptions of the output label selected
/// by the gate on each input combination, shuffled uniformly.
GarbledGate enc_yao(GateTruth gate, const LabelPair& left, const LabelPair& right,
                    const LabelPair& out, Rng& rng);

/// Opens the single decryptable row. Throws GarbleError{ZeroAccept} when no
/// row opens and GarbleError{DoubleAccept} when more than one does.
WireLabel ungarble(const GarbledGate& gate, const WireLabel& key_left,
                   const WireLabel& key_right);

}  // namespace ppm
