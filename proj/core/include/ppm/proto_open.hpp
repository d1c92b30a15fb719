#pragma once

/// @file proto_open.hpp
/// Open specification protocol: both parties hold the circuit. The System
/// garbles it with fresh random labels every round and streams one message
/// per round; monitor-state labels chain across rounds because the feedback
/// output labels of round r become the state input labels of round r+1, so
/// the Monitor can keep evaluating without ever learning the state.
///
/// Setup runs the oblivious transfer of the round-1 state labels (the
/// Monitor's choice bits are its initial state) and ends with the Monitor's
/// setup-complete ack, after which every round is exactly one
/// System-to-Monitor frame plus an optional one-byte ack back.

#include <chrono>

#include "ppm/channel.hpp"
#include "ppm/circuit.hpp"
#include "ppm/round_message.hpp"

namespace ppm {

struct SessionOptions {
    bool ack_enabled = true;
    bool terminate_on_violation = false;
    std::chrono::milliseconds timeout{3'600'000};
};

/// What one party measured while processing a round.
struct RoundStats {
    std::uint64_t round = 0;
    double millis = 0.0;
    std::size_t frame_bytes = 0;   // wire size of the round frame
    std::uint64_t label_exps = 0;  // label-derivation exponentiations (hidden only)
    std::uint64_t hash_calls = 0;
    int flag = -1;          // monitor side
    bool terminate = false;  // system side: peer requested termination
};

class OpenSystem {
  public:
    OpenSystem(Circuit circuit, unsigned n_bits, std::uint64_t seed,
               SessionOptions options = {});

    /// Plays OT sender for the round-1 monitor-state labels, then waits for
    /// the Monitor's setup ack.
    void run_setup(Channel& channel);

    /// Garbles and sends round r. Requires |obs| = s.
    RoundStats round(Channel& channel, const Observation& obs);

    std::uint64_t rounds_done() const { return round_; }
    /// Current label pair of a feed-out wire (1-based); test hook for the
    /// feedback-reuse property.
    const LabelPair& wire_labels(std::uint32_t feed_out) const;

  private:
    void relabel(std::uint64_t round_no);

    Circuit circuit_;
    std::size_t label_len_;
    Rng rng_;
    SessionOptions options_;
    std::vector<LabelPair> labels_;  // by feed-out wire, 1-based
    std::uint64_t round_ = 0;
    bool setup_done_ = false;
};

class OpenMonitor {
  public:
    OpenMonitor(Circuit circuit, unsigned n_bits, MonitorState initial,
                std::uint64_t seed, SessionOptions options = {});

    /// Plays OT receiver with the initial state as choice bits; acks setup.
    void run_setup(Channel& channel);

    /// Receives and evaluates round r; returns the flag. Sends the proceed /
    /// terminate ack when acks are enabled.
    RoundStats round(Channel& channel);

    std::uint64_t rounds_done() const { return round_; }
    /// Labels materialized during the last round, one per feed-out wire
    /// (index 0 unused); test hook for the one-label-per-wire property.
    const std::vector<WireLabel>& last_active_labels() const { return active_; }

  private:
    Circuit circuit_;
    unsigned n_bits_;
    std::size_t label_len_;
    MonitorState initial_;
    Rng rng_;
    SessionOptions options_;
    std::vector<WireLabel> state_labels_;  // held labels for wires w_1..w_m
    std::vector<WireLabel> active_;
    std::uint64_t round_ = 0;
    bool setup_done_ = false;
};

}  // namespace ppm
