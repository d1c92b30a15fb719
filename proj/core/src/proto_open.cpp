#include "ppm/proto_open.hpp"

#include "ppm/ot.hpp"
#include "ppm/shake.hpp"

namespace ppm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Frame expect_frame(Channel& channel, ProtoId proto, MsgKind kind, std::uint64_t round,
                   std::chrono::milliseconds timeout) {
    Frame f = channel.recv(timeout);
    if (f.kind == MsgKind::Abort)
        throw ProtocolError("peer aborted", f.round);
    if (f.proto != proto || f.kind != kind || f.round != round)
        throw ProtocolError("unexpected frame in protocol sequence", f.round);
    return f;
}

void send_abort(Channel& channel, ProtoId proto, std::uint64_t round, std::uint8_t code) {
    try {
        channel.send({proto, MsgKind::Abort, round, {code}});
    } catch (const TransportError&) {
        // the abort is best effort; the local error is what matters
    }
}

}  // namespace

OpenSystem::OpenSystem(Circuit circuit, unsigned n_bits, std::uint64_t seed,
                       SessionOptions options)
    : circuit_(std::move(circuit)),
      n_bits_(n_bits),
      label_len_((n_bits + 7) / 8),
      rng_(seed),
      options_(options),
      labels_(circuit_.feed_out_count() + 1) {
    Group::load(n_bits);  // validates n and caches the primality check
}

const LabelPair& OpenSystem::wire_labels(std::uint32_t feed_out) const {
    return labels_.at(feed_out);
}

void OpenSystem::run_setup(Channel& channel) {
    const std::uint32_t m = circuit_.state_bits();

    // round-1 labels for the monitor-state wires exist before round 1 so the
    // OT can run entirely inside setup
    for (std::uint32_t i = 1; i <= m; ++i)
        labels_[i] = {WireLabel::random(rng_, label_len_),
                      WireLabel::random(rng_, label_len_)};

    if (m > 0) {
        const Group& group = Group::load(n_bits_);
        OtSenderState ot;
        Bytes msg1 = ot_msg1_sender(group, m, rng_, ot);
        channel.send({ProtoId::Open, MsgKind::Ot1, 0, std::move(msg1)});

        Frame f2 = expect_frame(channel, ProtoId::Open, MsgKind::Ot2, 0, options_.timeout);

        std::vector<LabelPair> pairs;
        pairs.reserve(m);
        for (std::uint32_t i = 1; i <= m; ++i) pairs.push_back(labels_[i]);
        Bytes msg3 = ot_msg3_sender(ot, f2.payload, pairs, rng_);
        channel.send({ProtoId::Open, MsgKind::Ot3, 0, std::move(msg3)});
    }

    expect_frame(channel, ProtoId::Open, MsgKind::Ack, 0, options_.timeout);
    setup_done_ = true;
}

void OpenSystem::relabel(std::uint64_t round_no) {
    const std::uint32_t m = circuit_.state_bits();
    const std::uint32_t O = circuit_.internal_feed_outs();

    if (round_no > 1) {
        // feedback: last round's state-output labels become this round's
        // state-input labels
        for (std::uint32_t i = 1; i <= m; ++i) labels_[i] = labels_[O + i];
    }
    for (std::uint32_t w = m + 1; w <= circuit_.feed_out_count(); ++w)
        labels_[w] = {WireLabel::random(rng_, label_len_),
                      WireLabel::random(rng_, label_len_)};
}

RoundStats OpenSystem::round(Channel& channel, const Observation& obs) {
    if (!setup_done_) throw ProtocolError("round before setup");
    if (obs.bits.size() != circuit_.input_bits())
        throw ProtocolError("observation width mismatch", round_ + 1);

    const auto start = Clock::now();
    const std::uint64_t hash0 = shake256_invocations();
    const std::uint64_t r = ++round_;
    const std::uint32_t m = circuit_.state_bits();
    const std::uint32_t s = circuit_.input_bits();
    const std::uint32_t O = circuit_.internal_feed_outs();

    relabel(r);

    RoundMessage msg;
    msg.gates.reserve(circuit_.gate_count());
    for (std::uint32_t j = 1; j <= circuit_.gate_count(); ++j) {
        const LabelPair& left = labels_[circuit_.conn(2 * j - 1)];
        const LabelPair& right = labels_[circuit_.conn(2 * j)];
        msg.gates.push_back(enc_yao(kNand, left, right, labels_[m + s + j], rng_));
    }
    msg.input_labels.reserve(s);
    for (std::uint32_t i = 0; i < s; ++i)
        msg.input_labels.push_back(labels_[m + 1 + i][obs.bits[i] & 1]);
    msg.flag = labels_[O + m + 1];

    Frame frame{ProtoId::Open, MsgKind::Round, r, encode_round_message(msg)};
    const std::size_t frame_bytes = frame.wire_size();
    channel.send(frame);

    RoundStats stats;
    stats.round = r;
    stats.frame_bytes = frame_bytes;
    stats.hash_calls = shake256_invocations() - hash0;
    if (options_.ack_enabled) {
        Frame ack = expect_frame(channel, ProtoId::Open, MsgKind::Ack, r, options_.timeout);
        stats.terminate = !ack.payload.empty() && ack.payload[0] == kAckTerminate;
    }
    stats.millis = ms_since(start);
    return stats;
}

OpenMonitor::OpenMonitor(Circuit circuit, unsigned n_bits, MonitorState initial,
                         std::uint64_t seed, SessionOptions options)
    : circuit_(std::move(circuit)),
      n_bits_(n_bits),
      label_len_((n_bits + 7) / 8),
      initial_(std::move(initial)),
      rng_(seed),
      options_(options) {
    if (initial_.bits.size() != circuit_.state_bits())
        throw ProtocolError("initial state width mismatch");
}

void OpenMonitor::run_setup(Channel& channel) {
    const std::uint32_t m = circuit_.state_bits();

    if (m > 0) {
        const Group& group = Group::load(n_bits_);
        Frame f1 = expect_frame(channel, ProtoId::Open, MsgKind::Ot1, 0, options_.timeout);
        OtReceiverState ot;
        Bytes msg2 = ot_msg2_receiver(group, f1.payload, initial_.bits, rng_, ot);
        channel.send({ProtoId::Open, MsgKind::Ot2, 0, std::move(msg2)});
        Frame f3 = expect_frame(channel, ProtoId::Open, MsgKind::Ot3, 0, options_.timeout);
        state_labels_ = ot_recover(ot, f3.payload);
    }

    channel.send({ProtoId::Open, MsgKind::Ack, 0, {kAckProceed}});
    setup_done_ = true;
}

RoundStats OpenMonitor::round(Channel& channel) {
    if (!setup_done_) throw ProtocolError("round before setup");

    Frame frame = expect_frame(channel, ProtoId::Open, MsgKind::Round, round_ + 1,
                               options_.timeout);
    const auto start = Clock::now();
    const std::uint64_t hash0 = shake256_invocations();
    const std::uint64_t r = ++round_;
    const std::uint32_t m = circuit_.state_bits();
    const std::uint32_t s = circuit_.input_bits();
    const std::uint32_t O = circuit_.internal_feed_outs();

    RoundMessage msg;
    try {
        msg = parse_round_message(frame.payload, circuit_.gate_count(), s, label_len_);
    } catch (const ProtocolError&) {
        send_abort(channel, ProtoId::Open, r, kAbortFraming);
        throw;
    }

    active_.assign(circuit_.feed_out_count() + 1, WireLabel{});
    for (std::uint32_t i = 1; i <= m; ++i) active_[i] = state_labels_[i - 1];
    for (std::uint32_t i = 0; i < s; ++i) active_[m + 1 + i] = msg.input_labels[i];

    for (std::uint32_t j : circuit_.gate_order()) {
        const WireLabel& left = active_[circuit_.conn(2 * j - 1)];
        const WireLabel& right = active_[circuit_.conn(2 * j)];
        try {
            active_[m + s + j] = ungarble(msg.gates[j - 1], left, right);
        } catch (const GarbleError& e) {
            send_abort(channel, ProtoId::Open, r,
                       e.kind == GarbleError::Kind::DoubleAccept ? kAbortDoubleAccept
                                                                 : kAbortZeroAccept);
            throw;
        }
    }

    int flag;
    const WireLabel& flag_label = active_[O + m + 1];
    if (flag_label == msg.flag.for0) {
        flag = 0;
    } else if (flag_label == msg.flag.for1) {
        flag = 1;
    } else {
        send_abort(channel, ProtoId::Open, r, kAbortBadLabel);
        throw ProtocolError("flag label matches neither announced label", r);
    }

    state_labels_.assign(active_.begin() + O + 1, active_.begin() + O + 1 + m);

    RoundStats stats;
    stats.round = r;
    stats.frame_bytes = frame.wire_size();
    stats.flag = flag;
    stats.hash_calls = shake256_invocations() - hash0;
    bool terminate = options_.terminate_on_violation && flag == 1;
    if (options_.ack_enabled)
        channel.send({ProtoId::Open, MsgKind::Ack, r,
                      {terminate ? kAckTerminate : kAckProceed}});
    stats.terminate = terminate;
    stats.millis = ms_since(start);
    return stats;
}

}  // namespace ppm
