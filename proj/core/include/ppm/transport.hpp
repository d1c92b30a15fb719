#pragma once

/// @file transport.hpp
/// The framed wire format. Every message between the parties is one frame:
///
///   magic   "PPM1"                      4 bytes
///   proto   0x00 control / 0x01 open / 0x02 hidden
///   kind    message kind                1 byte
///   round   big-endian u64              8 bytes
///   length  big-endian u64 payload len  8 bytes
///   payload
///
/// The 22-byte header plus payload is the unit every byte count in the
/// project refers to. Lists inside payloads are a 4-byte big-endian count
/// followed by fixed-width items.

#include <cstdint>

#include "ppm/bytes.hpp"

namespace ppm {

inline constexpr std::size_t kFrameHeaderSize = 22;
inline constexpr std::uint64_t kMaxPayload = 1ull << 32;
inline constexpr char kFrameMagic[4] = {'P', 'P', 'M', '1'};

enum class ProtoId : std::uint8_t { Control = 0x00, Open = 0x01, Hidden = 0x02 };

enum class MsgKind : std::uint8_t {
    SetupG = 0x01,
    SetupL = 0x02,
    Ot1 = 0x03,
    Ot2 = 0x04,
    Ot3 = 0x05,
    Round = 0x06,
    Ack = 0x07,
    Abort = 0x08,
};

/// Ack payload bytes.
inline constexpr std::uint8_t kAckProceed = 0x00;
inline constexpr std::uint8_t kAckTerminate = 0x01;

/// Abort payload bytes, mirroring the error that stopped the round.
inline constexpr std::uint8_t kAbortZeroAccept = 0x01;
inline constexpr std::uint8_t kAbortDoubleAccept = 0x02;
inline constexpr std::uint8_t kAbortFraming = 0x03;
inline constexpr std::uint8_t kAbortBadLabel = 0x04;

struct Frame {
    ProtoId proto = ProtoId::Control;
    MsgKind kind = MsgKind::Ack;
    std::uint64_t round = 0;
    Bytes payload;

    std::size_t wire_size() const { return kFrameHeaderSize + payload.size(); }
};

bool kind_legal(ProtoId proto, MsgKind kind);

Bytes encode_frame(const Frame& frame);

/// Decodes a complete frame buffer. Throws TransportError with kinds
/// BadMagic, Truncated, IllegalKind or Oversize.
Frame decode_frame(ByteView in);

}  // namespace ppm
