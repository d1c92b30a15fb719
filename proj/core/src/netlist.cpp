#include "ppm/netlist.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ppm {

NetId Netlist::add_net(std::string name) {
    net_names_.push_back(std::move(name));
    validated_ = false;
    return static_cast<NetId>(net_names_.size() - 1);
}

void Netlist::add_cell(Cell cell) {
    cells_.push_back(std::move(cell));
    validated_ = false;
}

void Netlist::add_latch(NetId next, NetId state) {
    latches_.push_back({next, state});
    validated_ = false;
}

void Netlist::mark_input(NetId net) {
    inputs_.push_back(net);
    validated_ = false;
}

void Netlist::mark_output(NetId net) {
    outputs_.push_back(net);
    validated_ = false;
}

NetId Netlist::flag_net() const {
    if (!validated_) throw Error("netlist not validated");
    return flag_net_;
}

const std::vector<std::uint32_t>& Netlist::cell_order() const {
    if (!validated_) throw Error("netlist not validated");
    return cell_order_;
}

void Netlist::validate() {
    const std::size_t nets = net_names_.size();
    auto check_net = [&](NetId id) {
        if (id >= nets) throw Error("netlist references undefined net id");
    };

    // one driver per net
    std::vector<int> driver(nets, -1);  // -2 input, -3 latch state, >=0 cell index
    for (NetId in : inputs_) {
        check_net(in);
        if (driver[in] != -1) throw Error("net '" + net_name(in) + "' multiply driven");
        driver[in] = -2;
    }
    for (const Latch& l : latches_) {
        check_net(l.state);
        check_net(l.next);
        if (driver[l.state] != -1)
            throw Error("net '" + net_name(l.state) + "' multiply driven");
        driver[l.state] = -3;
    }
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        const Cell& c = cells_[ci];
        check_net(c.output);
        if (c.inputs.size() > 2) throw Error("cell with more than two inputs");
        for (NetId in : c.inputs) check_net(in);
        if (driver[c.output] != -1)
            throw Error("net '" + net_name(c.output) + "' multiply driven");
        driver[c.output] = static_cast<int>(ci);
    }

    // every referenced net must have a driver
    auto require_driven = [&](NetId id, const char* what) {
        if (driver[id] == -1)
            throw Error(std::string(what) + " net '" + net_name(id) + "' is undriven");
    };
    for (const Cell& c : cells_)
        for (NetId in : c.inputs) require_driven(in, "cell input");
    for (const Latch& l : latches_) require_driven(l.next, "latch next-state");
    for (NetId out : outputs_) require_driven(out, "output");

    // flag output: the single declared output not driven by a latch
    std::unordered_set<NetId> latch_nets;
    for (const Latch& l : latches_) latch_nets.insert(l.state);
    std::vector<NetId> flag_candidates;
    for (NetId out : outputs_)
        if (!latch_nets.contains(out)) flag_candidates.push_back(out);
    if (flag_candidates.empty()) throw Error("netlist has no flag output");
    if (flag_candidates.size() > 1)
        throw Error("netlist has more than one non-state output");
    flag_net_ = flag_candidates.front();

    // topological order over cells; latch state nets and inputs are sources
    std::vector<std::uint32_t> indegree(cells_.size(), 0);
    std::vector<std::vector<std::uint32_t>> consumers(cells_.size());
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        for (NetId in : cells_[ci].inputs) {
            if (driver[in] >= 0) {
                consumers[static_cast<std::size_t>(driver[in])].push_back(
                    static_cast<std::uint32_t>(ci));
                ++indegree[ci];
            }
        }
    }
    cell_order_.clear();
    std::deque<std::uint32_t> ready;
    for (std::size_t ci = 0; ci < cells_.size(); ++ci)
        if (indegree[ci] == 0) ready.push_back(static_cast<std::uint32_t>(ci));
    while (!ready.empty()) {
        std::uint32_t ci = ready.front();
        ready.pop_front();
        cell_order_.push_back(ci);
        for (std::uint32_t next : consumers[ci])
            if (--indegree[next] == 0) ready.push_back(next);
    }
    if (cell_order_.size() != cells_.size())
        throw Error("cyclic combinational dependency");

    validated_ = true;
}

std::uint8_t cell_truth(const Cell& cell) {
    switch (cell.kind) {
        case CellKind::Nand: return 0b0111;
        case CellKind::And: return 0b1000;
        case CellKind::Or: return 0b1110;
        case CellKind::Xor: return 0b0110;
        case CellKind::Xnor: return 0b1001;
        case CellKind::Not: return 0b01;    // index = a
        case CellKind::Buf: return 0b10;    // index = a
        case CellKind::Table: return cell.table;
    }
    throw Error("unknown cell kind");
}

NetlistEval evaluate_netlist(const Netlist& nl, const std::vector<std::uint8_t>& state,
                             const std::vector<std::uint8_t>& input) {
    if (!nl.validated()) throw Error("netlist not validated");
    if (state.size() != nl.latches().size())
        throw Error("state width mismatch in netlist evaluation");
    if (input.size() != nl.inputs().size())
        throw Error("input width mismatch in netlist evaluation");

    std::vector<std::uint8_t> value(nl.net_count(), 0);
    for (std::size_t i = 0; i < nl.latches().size(); ++i)
        value[nl.latches()[i].state] = state[i] & 1;
    for (std::size_t i = 0; i < nl.inputs().size(); ++i)
        value[nl.inputs()[i]] = input[i] & 1;

    for (std::uint32_t ci : nl.cell_order()) {
        const Cell& c = nl.cells()[ci];
        unsigned idx = 0;
        if (c.inputs.size() == 2)
            idx = static_cast<unsigned>(value[c.inputs[0]] << 1 | value[c.inputs[1]]);
        else if (c.inputs.size() == 1)
            idx = value[c.inputs[0]];
        value[c.output] = (cell_truth(c) >> idx) & 1;
    }

    NetlistEval out;
    out.next_state.reserve(nl.latches().size());
    for (const Latch& l : nl.latches()) out.next_state.push_back(value[l.next]);
    out.flag = value[nl.flag_net()];
    return out;
}

// --- NetBuilder --------------------------------------------------------------

NetId NetBuilder::input(std::string name) {
    NetId id = nl_.add_net(std::move(name));
    nl_.mark_input(id);
    return id;
}

NetId NetBuilder::state(std::string name) {
    NetId id = nl_.add_net(std::move(name));
    pending_latches_.emplace_back(id, std::nullopt);
    return id;
}

void NetBuilder::set_next(NetId state_net, NetId next_net) {
    for (auto& [st, next] : pending_latches_) {
        if (st == state_net) {
            if (next.has_value()) throw Error("state bit already has a next-state net");
            next = next_net;
            return;
        }
    }
    throw Error("set_next on a net that is not a state bit");
}

void NetBuilder::set_flag(NetId net) {
    if (flag_.has_value()) throw Error("flag net already set");
    flag_ = net;
}

NetId NetBuilder::emit(CellKind kind, std::vector<NetId> in) {
    NetId out = nl_.add_net();
    nl_.add_cell({kind, std::move(in), out, 0});
    return out;
}

NetId NetBuilder::nand_gate(NetId a, NetId b) { return emit(CellKind::Nand, {a, b}); }
NetId NetBuilder::and_gate(NetId a, NetId b) { return emit(CellKind::And, {a, b}); }
NetId NetBuilder::or_gate(NetId a, NetId b) { return emit(CellKind::Or, {a, b}); }
NetId NetBuilder::xor_gate(NetId a, NetId b) { return emit(CellKind::Xor, {a, b}); }
NetId NetBuilder::xnor_gate(NetId a, NetId b) { return emit(CellKind::Xnor, {a, b}); }
NetId NetBuilder::not_gate(NetId a) { return emit(CellKind::Not, {a}); }

Netlist NetBuilder::take() {
    if (!flag_.has_value()) throw Error("netlist has no flag output");
    for (const auto& [st, next] : pending_latches_) {
        if (!next.has_value())
            throw Error("state bit with no next-state net");
        nl_.add_latch(*next, st);
    }
    nl_.mark_output(*flag_);
    nl_.validate();
    return std::move(nl_);
}

}  // namespace ppm
