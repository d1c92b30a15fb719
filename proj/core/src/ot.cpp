#include "ppm/ot.hpp"

#include "ppm/shake.hpp"

namespace ppm {

namespace {

void append_element(Bytes& out, const Group& g, const GroupElement& e) {
    Bytes enc = g.encode(e);
    out.insert(out.end(), enc.begin(), enc.end());
}

GroupElement read_element(const Group& g, ByteView in, std::size_t& off) {
    return g.decode(get_bytes(in, off, g.element_size()));
}

}  // namespace

Bytes ot_msg1_sender(const Group& group, std::uint32_t count, Rng& rng,
                     OtSenderState& state) {
    if (count < 1) throw Error("OT batch must have at least one instance");
    // z never leaves this scope
    GroupElement common = group.pow(group.generator(), group.sample_exponent(rng));
    state = OtSenderState{&group, count, common};

    Bytes out;
    put_u32(out, count);
    append_element(out, group, common);
    return out;
}

Bytes ot_msg2_receiver(const Group& group, ByteView msg1,
                       const std::vector<std::uint8_t>& choice_bits, Rng& rng,
                       OtReceiverState& state) {
    std::size_t off = 0;
    std::uint32_t count = get_u32(msg1, off);
    GroupElement common = read_element(group, msg1, off);
    if (off != msg1.size()) throw Error("trailing bytes in OT flight 1");
    if (count != choice_bits.size())
        throw Error("OT instance count does not match choice bits");

    state = OtReceiverState{&group, count, choice_bits, {}};
    state.secrets.reserve(count);

    Bytes out;
    put_u32(out, count);
    for (std::uint32_t i = 0; i < count; ++i) {
        Exponent k = group.sample_exponent(rng);
        GroupElement pk_choice = group.pow(group.generator(), k);
        GroupElement pk_other = group.mul(common, group.inv(pk_choice));
        state.secrets.push_back(k);
        append_element(out, group, choice_bits[i] ? pk_other : pk_choice);
    }
    return out;
}

Bytes ot_msg3_sender(const OtSenderState& state, ByteView msg2,
                     const std::vector<LabelPair>& payloads, Rng& rng) {
    const Group& group = *state.group;
    const std::size_t width = group.element_size();

    std::size_t off = 0;
    std::uint32_t count = get_u32(msg2, off);
    if (count != state.count || count != payloads.size())
        throw Error("OT instance count mismatch in flight 2");

    Bytes out;
    put_u32(out, count);
    for (std::uint32_t i = 0; i < count; ++i) {
        GroupElement pk0 = read_element(group, msg2, off);
        GroupElement pk1 = group.mul(state.common, group.inv(pk0));
        const GroupElement* pk[2] = {&pk0, &pk1};
        for (int b = 0; b < 2; ++b) {
            const Bytes& payload = payloads[i][b].bytes();
            if (payload.size() != width)
                throw Error("OT payload length must equal the element size");
            Exponent r = group.sample_exponent(rng);
            GroupElement ephemeral = group.pow(group.generator(), r);
            Bytes mask = shake256(group.encode(group.pow(*pk[b], r)), width);
            for (std::size_t k = 0; k < width; ++k) mask[k] ^= payload[k];
            append_element(out, group, ephemeral);
            out.insert(out.end(), mask.begin(), mask.end());
        }
    }
    if (off != msg2.size()) throw Error("trailing bytes in OT flight 2");
    return out;
}

std::vector<WireLabel> ot_recover(const OtReceiverState& state, ByteView msg3) {
    const Group& group = *state.group;
    const std::size_t width = group.element_size();

    std::size_t off = 0;
    std::uint32_t count = get_u32(msg3, off);
    if (count != state.count) throw Error("OT instance count mismatch in flight 3");

    std::vector<WireLabel> labels;
    labels.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        Bytes branch[2];
        GroupElement ephemeral[2];
        for (int b = 0; b < 2; ++b) {
            ephemeral[b] = read_element(group, msg3, off);
            branch[b] = get_bytes(msg3, off, width);
        }
        int choice = state.choices[i] & 1;
        Bytes key = shake256(
            group.encode(group.pow(ephemeral[choice], state.secrets[i])), width);
        for (std::size_t k = 0; k < width; ++k) key[k] ^= branch[choice][k];
        labels.emplace_back(std::move(key));
    }
    if (off != msg3.size()) throw Error("trailing bytes in OT flight 3");
    return labels;
}

}  // namespace ppm
