#pragma once

/// @file round_message.hpp
/// The per-round System-to-Monitor payload, identical for both protocols:
/// c garbled gates, then the s observation labels (wires w_{m+1}..w_{m+s}),
/// then the ordered flag pair (label-for-0, label-for-1). No internal
/// framing; c, s, and the label width are agreed at setup, so the payload
/// size is exactly 4c(len+13) + (s+2)len.

#include <vector>

#include "ppm/garble.hpp"

namespace ppm {

struct RoundMessage {
    std::vector<GarbledGate> gates;
    std::vector<WireLabel> input_labels;
    LabelPair flag;
};

std::size_t round_payload_size(std::uint32_t gate_count, std::uint32_t input_bits,
                               std::size_t label_len);

Bytes encode_round_message(const RoundMessage& msg);

/// Throws ProtocolError when the payload does not parse to exactly c gates
/// plus s + 2 labels.
RoundMessage parse_round_message(ByteView payload, std::uint32_t gate_count,
                                 std::uint32_t input_bits, std::size_t label_len);

}  // namespace ppm
