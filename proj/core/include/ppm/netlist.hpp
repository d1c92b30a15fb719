#pragma once

/// @file netlist.hpp
/// Gate-level netlist used as the ingestion format between BLIF (or the
/// programmatic scenario builders) and the NAND-only protocol circuit.
/// Nets are dense integer ids; cells have at most two inputs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppm/errors.hpp"

namespace ppm {

using NetId = std::uint32_t;

enum class CellKind : std::uint8_t { Nand, And, Or, Not, Xor, Xnor, Buf, Table };

/// A single-output gate. For Table cells `table` holds the truth vector:
/// bit index (a << 1) | b for two inputs, index a for one input, bit 0 for a
/// constant. Named kinds ignore `table`.
struct Cell {
    CellKind kind = CellKind::Table;
    std::vector<NetId> inputs;
    NetId output = 0;
    std::uint8_t table = 0;
};

/// State bit: `state` is the current-state net (a circuit input), `next` the
/// net whose value becomes the state in the following round.
struct Latch {
    NetId next;
    NetId state;
};

class Netlist {
  public:
    NetId add_net(std::string name = {});
    void add_cell(Cell cell);
    void add_latch(NetId next, NetId state);
    void mark_input(NetId net);
    void mark_output(NetId net);

    std::size_t net_count() const { return net_names_.size(); }
    const std::string& net_name(NetId id) const { return net_names_[id]; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<Latch>& latches() const { return latches_; }
    const std::vector<NetId>& inputs() const { return inputs_; }
    const std::vector<NetId>& outputs() const { return outputs_; }

    /// Checks the structural invariants: unique drivers, no dangling nets, a
    /// single flag output, acyclic combinational logic. Fills the cached cell
    /// evaluation order and the flag net. Throws Error on violation.
    void validate();

    bool validated() const { return validated_; }
    NetId flag_net() const;
    const std::vector<std::uint32_t>& cell_order() const;

  private:
    std::vector<std::string> net_names_;
    std::vector<Cell> cells_;
    std::vector<Latch> latches_;
    std::vector<NetId> inputs_;
    std::vector<NetId> outputs_;

    bool validated_ = false;
    NetId flag_net_ = 0;
    std::vector<std::uint32_t> cell_order_;
};

/// Truth vector of a cell as a function of (a, b); 1-input cells ignore b,
/// constants ignore both.
std::uint8_t cell_truth(const Cell& cell);

/// Cleartext interpretation of a validated netlist: one monitoring round.
/// `state` has one bit per latch (declaration order), `input` one bit per
/// primary input. Returns the next state and the flag bit.
struct NetlistEval {
    std::vector<std::uint8_t> next_state;
    std::uint8_t flag;
};
NetlistEval evaluate_netlist(const Netlist& nl, const std::vector<std::uint8_t>& state,
                             const std::vector<std::uint8_t>& input);

/// Convenience layer for building netlists in code. Every emitter returns the
/// freshly driven output net.
class NetBuilder {
  public:
    NetId input(std::string name = {});
    /// Declares a state bit and returns its current-state net. The next-state
    /// net is wired later with set_next().
    NetId state(std::string name = {});
    void set_next(NetId state_net, NetId next_net);
    void set_flag(NetId net);

    NetId nand_gate(NetId a, NetId b);
    NetId and_gate(NetId a, NetId b);
    NetId or_gate(NetId a, NetId b);
    NetId xor_gate(NetId a, NetId b);
    NetId xnor_gate(NetId a, NetId b);
    NetId not_gate(NetId a);

    /// Finalizes latch order (declaration order) and validates.
    Netlist take();

  private:
    NetId emit(CellKind kind, std::vector<NetId> in);

    Netlist nl_;
    std::vector<std::pair<NetId, std::optional<NetId>>> pending_latches_;
    std::optional<NetId> flag_;
};

}  // namespace ppm
