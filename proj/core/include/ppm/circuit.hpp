#pragma once

/// @file circuit.hpp
/// NAND-only specification circuits with the wire-indexing convention both
/// protocols rely on.
///
/// A circuit with c gates, s observable-input bits and m state bits has
///   feed-out wires  w_1 .. w_{c+s+m}:
///     w_1 .. w_m            current monitor state (circuit inputs)
///     w_{m+1} .. w_{m+s}    system observation (circuit inputs)
///     w_{m+s+j}             output of gate j
///   feed-in wires   i_1 .. i_{2c}: gate j reads i_{2j-1} (left) and i_{2j}.
///
/// O = c+s-1 feed-outs are internal; the last m+1 gates drive the circuit
/// outputs: w_{O+1} .. w_{O+m} the next state, w_{O+m+1} the flag. The map
/// pi : {1..2c} -> {1..O} wires every feed-in to one internal feed-out, so
/// output wires never feed back within a round.

#include <cstdint>
#include <string>
#include <vector>

#include "ppm/netlist.hpp"

namespace ppm {

using BitVec = std::vector<std::uint8_t>;

struct MonitorState {
    BitVec bits;
};

struct Observation {
    BitVec bits;
};

class Circuit {
  public:
    /// `conn[i-1]` is the 1-based feed-out index wired to feed-in i.
    /// Validates all indexing invariants and computes the gate evaluation
    /// order; throws Error on violation (including dependency cycles).
    Circuit(std::uint32_t gate_count, std::uint32_t input_bits, std::uint32_t state_bits,
            std::vector<std::uint32_t> conn);

    std::uint32_t gate_count() const { return c_; }   // c
    std::uint32_t input_bits() const { return s_; }   // s
    std::uint32_t state_bits() const { return m_; }   // m
    std::uint32_t feed_in_count() const { return 2 * c_; }            // I
    std::uint32_t internal_feed_outs() const { return c_ + s_ - 1; }  // O
    std::uint32_t feed_out_count() const { return c_ + s_ + m_; }

    /// Feed-out index wired to feed-in i (both 1-based).
    std::uint32_t conn(std::uint32_t feed_in) const { return conn_[feed_in - 1]; }
    const std::vector<std::uint32_t>& conn_map() const { return conn_; }

    /// Gate indices (1-based) in a valid evaluation order.
    const std::vector<std::uint32_t>& gate_order() const { return order_; }

    /// Gates whose (left, right) feed-out pair coincides with an earlier
    /// gate's. Such pairs share an encryption keystream; flagged so callers
    /// can warn.
    const std::vector<std::uint32_t>& duplicate_input_pairs() const { return dup_pairs_; }

    /// One cleartext monitoring round: returns the next state (wires
    /// w_{O+1}..w_{O+m}) and the flag (w_{O+m+1}). This is the ideal-setting
    /// reference that every protocol run is checked against.
    struct StepResult {
        MonitorState next_state;
        std::uint8_t flag;
    };
    StepResult step(const MonitorState& state, const Observation& obs) const;

  private:
    std::uint32_t c_, s_, m_;
    std::vector<std::uint32_t> conn_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> dup_pairs_;
};

/// Lowers a validated netlist to a NAND-only circuit using fixed templates
/// (NOT a = NAND(a,a); AND = NOT of NAND; OR a b = NAND(NOT a, NOT b); XOR in
/// four NANDs; BUF in two). Gates are renumbered so the m next-state nets and
/// then the flag net are the feed-outs of the last m+1 gates. Cleartext
/// behaviour is preserved exactly.
Circuit to_nand(const Netlist& netlist);

/// Canonical textual form: header "PPMCKT c s m", then one line per gate
/// "NAND <left> <right>" with 1-based feed-out indices.
std::string to_text(const Circuit& circuit);

}  // namespace ppm
