#include "ppm/round_message.hpp"

namespace ppm {

std::size_t round_payload_size(std::uint32_t gate_count, std::uint32_t input_bits,
                               std::size_t label_len) {
    return static_cast<std::size_t>(4) * gate_count * (label_len + kPadBytes) +
           (static_cast<std::size_t>(input_bits) + 2) * label_len;
}

Bytes encode_round_message(const RoundMessage& msg) {
    Bytes out;
    for (const GarbledGate& gate : msg.gates) gate.append_to(out);
    for (const WireLabel& label : msg.input_labels)
        out.insert(out.end(), label.bytes().begin(), label.bytes().end());
    out.insert(out.end(), msg.flag.for0.bytes().begin(), msg.flag.for0.bytes().end());
    out.insert(out.end(), msg.flag.for1.bytes().begin(), msg.flag.for1.bytes().end());
    return out;
}

RoundMessage parse_round_message(ByteView payload, std::uint32_t gate_count,
                                 std::uint32_t input_bits, std::size_t label_len) {
    if (payload.size() != round_payload_size(gate_count, input_bits, label_len))
        throw ProtocolError("round payload has wrong size for the agreed circuit");

    RoundMessage msg;
    std::size_t off = 0;
    msg.gates.reserve(gate_count);
    for (std::uint32_t j = 0; j < gate_count; ++j)
        msg.gates.push_back(GarbledGate::parse(payload, off, label_len));
    msg.input_labels.reserve(input_bits);
    for (std::uint32_t i = 0; i < input_bits; ++i)
        msg.input_labels.emplace_back(get_bytes(payload, off, label_len));
    msg.flag.for0 = WireLabel(get_bytes(payload, off, label_len));
    msg.flag.for1 = WireLabel(get_bytes(payload, off, label_len));
    return msg;
}

}  // namespace ppm
