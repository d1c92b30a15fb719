#pragma once

/// @file ot.hpp
/// Batched 1-out-of-2 oblivious transfer of wire labels, the Bellare-Micali
/// construction over the DDH group, realized with hashed ElGamal. A batch of
/// m parallel instances always takes exactly three flights:
///
///   1. sender -> receiver   common element C = gen^z, z discarded
///   2. receiver -> sender   PK_0 per instance; PK_choice = gen^k and
///                           PK_{1-choice} = C / PK_choice, so PK_0 alone
///                           reveals nothing about the choice bit
///   3. sender -> receiver   per instance and branch b: (gen^r,
///                           SHAKE-256(encode(PK_b^r)) xor payload_b),
///                           branch 0 first
///
/// The receiver recovers exactly the chosen payload per instance.

#include <cstdint>
#include <vector>

#include "ppm/garble.hpp"
#include "ppm/group.hpp"

namespace ppm {

struct OtSenderState {
    const Group* group = nullptr;
    std::uint32_t count = 0;
    GroupElement common;
};

struct OtReceiverState {
    const Group* group = nullptr;
    std::uint32_t count = 0;
    std::vector<std::uint8_t> choices;
    std::vector<Exponent> secrets;
};

/// Flight 1 payload. `count` must be at least 1.
Bytes ot_msg1_sender(const Group& group, std::uint32_t count, Rng& rng,
                     OtSenderState& state);

/// Flight 2 payload from the flight-1 bytes and the receiver's choice bits.
Bytes ot_msg2_receiver(const Group& group, ByteView msg1,
                       const std::vector<std::uint8_t>& choice_bits, Rng& rng,
                       OtReceiverState& state);

/// Flight 3 payload. `payloads[i]` holds the two transferable labels of
/// instance i; label length must equal the group's element size.
Bytes ot_msg3_sender(const OtSenderState& state, ByteView msg2,
                     const std::vector<LabelPair>& payloads, Rng& rng);

/// Recovers the chosen label of every instance from the flight-3 bytes.
std::vector<WireLabel> ot_recover(const OtReceiverState& state, ByteView msg3);

}  // namespace ppm
