#include "ppm/transport.hpp"

#include <cstring>

namespace ppm {

bool kind_legal(ProtoId proto, MsgKind kind) {
    switch (proto) {
        case ProtoId::Control:
            return kind == MsgKind::Ack || kind == MsgKind::Abort;
        case ProtoId::Open:
            return kind == MsgKind::Ot1 || kind == MsgKind::Ot2 || kind == MsgKind::Ot3 ||
                   kind == MsgKind::Round || kind == MsgKind::Ack || kind == MsgKind::Abort;
        case ProtoId::Hidden:
            return kind >= MsgKind::SetupG && kind <= MsgKind::Abort;
    }
    return false;
}

Bytes encode_frame(const Frame& frame) {
    if (frame.payload.size() > kMaxPayload)
        throw TransportError(TransportError::Kind::Oversize, "payload exceeds 2^32 bytes");
    if (!kind_legal(frame.proto, frame.kind))
        throw TransportError(TransportError::Kind::IllegalKind,
                             "message kind not legal for protocol id");
    Bytes out;
    out.reserve(frame.wire_size());
    out.insert(out.end(), kFrameMagic, kFrameMagic + 4);
    out.push_back(static_cast<std::uint8_t>(frame.proto));
    out.push_back(static_cast<std::uint8_t>(frame.kind));
    put_u64(out, frame.round);
    put_u64(out, frame.payload.size());
    out.insert(out.end(), frame.payload.begin(), frame.payload.end());
    return out;
}

Frame decode_frame(ByteView in) {
    if (in.size() < kFrameHeaderSize)
        throw TransportError(TransportError::Kind::Truncated, "frame shorter than header");
    if (std::memcmp(in.data(), kFrameMagic, 4) != 0)
        throw TransportError(TransportError::Kind::BadMagic, "bad frame magic");

    Frame frame;
    std::uint8_t proto = in[4], kind = in[5];
    if (proto > static_cast<std::uint8_t>(ProtoId::Hidden))
        throw TransportError(TransportError::Kind::IllegalKind, "unknown protocol id");
    frame.proto = static_cast<ProtoId>(proto);
    if (kind < static_cast<std::uint8_t>(MsgKind::SetupG) ||
        kind > static_cast<std::uint8_t>(MsgKind::Abort) ||
        !kind_legal(frame.proto, static_cast<MsgKind>(kind)))
        throw TransportError(TransportError::Kind::IllegalKind,
                             "message kind not legal for protocol id");
    frame.kind = static_cast<MsgKind>(kind);

    std::size_t off = 6;
    frame.round = get_u64(in, off);
    std::uint64_t len = get_u64(in, off);
    if (len > kMaxPayload)
        throw TransportError(TransportError::Kind::Oversize, "payload exceeds 2^32 bytes");
    if (in.size() != kFrameHeaderSize + len)
        throw TransportError(TransportError::Kind::Truncated,
                             "payload length does not match frame size");
    frame.payload.assign(in.begin() + kFrameHeaderSize, in.end());
    return frame;
}

}  // namespace ppm
