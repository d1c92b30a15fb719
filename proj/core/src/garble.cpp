#include "ppm/garble.hpp"

#include <algorithm>

#include "ppm/shake.hpp"

namespace ppm {

void GarbledGate::append_to(Bytes& out) const {
    for (const Bytes& row : rows_) out.insert(out.end(), row.begin(), row.end());
}

GarbledGate GarbledGate::parse(ByteView in, std::size_t& off, std::size_t label_len) {
    const std::size_t row_len = label_len + kPadBytes;
    std::array<Bytes, kRows> rows;
    for (Bytes& row : rows) row = get_bytes(in, off, row_len);
    return GarbledGate(std::move(rows));
}

Bytes enc(const WireLabel& key_left, const WireLabel& key_right, const WireLabel& payload) {
    if (key_left.size() != key_right.size() || key_left.size() != payload.size())
        throw GarbleError(GarbleError::Kind::Length, "label lengths differ");

    Bytes ct = shake256({key_left.bytes(), key_right.bytes()},
                        payload.size() + kPadBytes);
    for (std::size_t i = 0; i < payload.size(); ++i) ct[i] ^= payload.bytes()[i];
    for (std::size_t i = payload.size(); i < ct.size(); ++i) ct[i] ^= 0xFF;
    return ct;
}

std::optional<Bytes> dec(const WireLabel& key_left, const WireLabel& key_right,
                         ByteView ciphertext) {
    if (key_left.size() != key_right.size())
        throw GarbleError(GarbleError::Kind::Length, "key lengths differ");
    if (ciphertext.size() != key_left.size() + kPadBytes)
        throw GarbleError(GarbleError::Kind::Length, "ciphertext length mismatch");

    Bytes stream = shake256({key_left.bytes(), key_right.bytes()}, ciphertext.size());
    const std::size_t payload_len = ciphertext.size() - kPadBytes;
    for (std::size_t i = payload_len; i < ciphertext.size(); ++i)
        if (static_cast<std::uint8_t>(ciphertext[i] ^ stream[i]) != 0xFF)
            return std::nullopt;

    Bytes payload(payload_len);
    for (std::size_t i = 0; i < payload_len; ++i) payload[i] = ciphertext[i] ^ stream[i];
    return payload;
}

GarbledGate enc_yao(GateTruth gate, const LabelPair& left, const LabelPair& right,
                    const LabelPair& out, Rng& rng) {
    std::array<Bytes, GarbledGate::kRows> rows;
    std::size_t k = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            rows[k++] = enc(left[a], right[b], out[(gate >> ((a << 1) | b)) & 1]);
    rng.shuffle(std::span<Bytes>(rows));
    return GarbledGate(std::move(rows));
}

WireLabel ungarble(const GarbledGate& gate, const WireLabel& key_left,
                   const WireLabel& key_right) {
    std::optional<Bytes> opened;
    for (const Bytes& row : gate.rows()) {
        if (auto payload = dec(key_left, key_right, row)) {
            if (opened)
                throw GarbleError(GarbleError::Kind::DoubleAccept,
                                  "two ciphertexts opened under one key pair");
            opened = std::move(payload);
        }
    }
    if (!opened)
        throw GarbleError(GarbleError::Kind::ZeroAccept, "no ciphertext opened");
    return WireLabel(std::move(*opened));
}

}  // namespace ppm
