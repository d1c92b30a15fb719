#include "ppm/circuit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ppm {

Circuit::Circuit(std::uint32_t gate_count, std::uint32_t input_bits,
                 std::uint32_t state_bits, std::vector<std::uint32_t> conn)
    : c_(gate_count), s_(input_bits), m_(state_bits), conn_(std::move(conn)) {
    if (c_ < m_ + 1)
        throw Error("circuit needs at least m+1 gates to drive its outputs");
    if (s_ == 0) throw Error("circuit has no observable inputs");
    if (conn_.size() != static_cast<std::size_t>(2) * c_)
        throw Error("connection map must have exactly 2c entries");

    const std::uint32_t O = internal_feed_outs();
    for (std::uint32_t v : conn_)
        if (v < 1 || v > O)
            throw Error("feed-in wired outside the internal feed-out range");

    // gate dependency graph: gate a -> gate b when b reads a's feed-out
    std::vector<std::uint32_t> indegree(c_, 0);
    std::vector<std::vector<std::uint32_t>> consumers(c_);
    for (std::uint32_t j = 1; j <= c_; ++j) {
        for (std::uint32_t side = 0; side < 2; ++side) {
            std::uint32_t src = conn_[2 * (j - 1) + side];
            if (src > m_ + s_) {
                std::uint32_t a = src - m_ - s_;  // driving gate
                consumers[a - 1].push_back(j);
                ++indegree[j - 1];
            }
        }
    }
    std::deque<std::uint32_t> ready;
    for (std::uint32_t j = 1; j <= c_; ++j)
        if (indegree[j - 1] == 0) ready.push_back(j);
    order_.reserve(c_);
    while (!ready.empty()) {
        std::uint32_t j = ready.front();
        ready.pop_front();
        order_.push_back(j);
        for (std::uint32_t b : consumers[j - 1])
            if (--indegree[b - 1] == 0) ready.push_back(b);
    }
    if (order_.size() != c_) throw Error("gate dependency graph has a cycle");

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> seen;
    for (std::uint32_t j = 1; j <= c_; ++j) {
        auto key = std::make_pair(conn_[2 * (j - 1)], conn_[2 * (j - 1) + 1]);
        auto [it, inserted] = seen.emplace(key, j);
        if (!inserted) dup_pairs_.push_back(j);
    }
}

Circuit::StepResult Circuit::step(const MonitorState& state, const Observation& obs) const {
    if (state.bits.size() != m_) throw Error("monitor state width mismatch");
    if (obs.bits.size() != s_) throw Error("observation width mismatch");

    std::vector<std::uint8_t> value(feed_out_count() + 1, 0);  // 1-based
    for (std::uint32_t i = 0; i < m_; ++i) value[i + 1] = state.bits[i] & 1;
    for (std::uint32_t i = 0; i < s_; ++i) value[m_ + i + 1] = obs.bits[i] & 1;

    for (std::uint32_t j : order_) {
        std::uint8_t left = value[conn_[2 * (j - 1)]];
        std::uint8_t right = value[conn_[2 * (j - 1) + 1]];
        value[m_ + s_ + j] = static_cast<std::uint8_t>(!(left && right));
    }

    const std::uint32_t O = internal_feed_outs();
    StepResult out;
    out.next_state.bits.reserve(m_);
    for (std::uint32_t i = 1; i <= m_; ++i) out.next_state.bits.push_back(value[O + i]);
    out.flag = value[O + m_ + 1];
    return out;
}

namespace {

/// During lowering a wire source is either a circuit input (state or
/// observation feed-out) or the feed-out of an emitted NAND gate.
struct Src {
    bool is_gate;
    std::uint32_t index;  // feed-out index for inputs, 0-based gate id otherwise
};

struct Lowering {
    std::vector<std::pair<Src, Src>> gates;  // emitted NANDs
    std::vector<std::uint32_t> consumers;    // per gate: # feed-ins reading it

    Src nand(Src a, Src b) {
        if (a.is_gate) ++consumers[a.index];
        if (b.is_gate) ++consumers[b.index];
        gates.emplace_back(a, b);
        consumers.push_back(0);
        return {true, static_cast<std::uint32_t>(gates.size() - 1)};
    }
    Src not_of(Src a) { return nand(a, a); }
    Src and_of(Src a, Src b) { return not_of(nand(a, b)); }
    Src or_of(Src a, Src b) { return nand(not_of(a), not_of(b)); }
    Src xor_of(Src a, Src b) {
        Src t = nand(a, b);
        return nand(nand(a, t), nand(b, t));
    }
    Src buf_of(Src a) { return not_of(not_of(a)); }

    Src lower_table(std::uint8_t table, const std::vector<Src>& in, Src const0_src,
                    Src const1_src) {
        // bit index of the table is (a << 1) | b
        if (in.size() == 2) {
            switch (table & 0b1111) {
                case 0b0000: return const0_src;
                case 0b1111: return const1_src;
                case 0b1000: return and_of(in[0], in[1]);
                case 0b1110: return or_of(in[0], in[1]);
                case 0b0111: return nand(in[0], in[1]);
                case 0b0001: return not_of(or_of(in[0], in[1]));  // NOR
                case 0b0110: return xor_of(in[0], in[1]);
                case 0b1001: return not_of(xor_of(in[0], in[1]));
                case 0b1100: return buf_of(in[0]);   // f = a
                case 0b0011: return not_of(in[0]);
                case 0b1010: return buf_of(in[1]);   // f = b
                case 0b0101: return not_of(in[1]);
                case 0b0100: return and_of(in[0], not_of(in[1]));  // a AND NOT b
                case 0b0010: return and_of(not_of(in[0]), in[1]);
                case 0b1101: return or_of(in[0], not_of(in[1]));   // a OR NOT b
                case 0b1011: return or_of(not_of(in[0]), in[1]);
            }
        }
        if (in.size() == 1) {
            switch (table & 0b11) {
                case 0b00: return const0_src;
                case 0b11: return const1_src;
                case 0b10: return buf_of(in[0]);
                case 0b01: return not_of(in[0]);
            }
        }
        return (table & 1) ? const1_src : const0_src;
    }
};

}  // namespace

Circuit to_nand(const Netlist& netlist) {
    if (!netlist.validated()) throw Error("netlist not validated");

    const std::uint32_t m = static_cast<std::uint32_t>(netlist.latches().size());
    const std::uint32_t s = static_cast<std::uint32_t>(netlist.inputs().size());
    if (s == 0) throw Error("netlist has no observable inputs");

    // net -> source (input feed-out or lowered gate)
    std::unordered_map<NetId, Src> src_of;
    for (std::uint32_t i = 0; i < m; ++i)
        src_of[netlist.latches()[i].state] = {false, i + 1};
    for (std::uint32_t i = 0; i < s; ++i)
        src_of[netlist.inputs()[i]] = {false, m + i + 1};

    Lowering low;
    bool have_consts = false;
    Src const0{}, const1{};
    auto consts = [&]() {
        if (!have_consts) {
            // derived from an arbitrary input wire: NAND(x, NOT x) = 1
            Src x{false, 1};
            const1 = low.nand(x, low.not_of(x));
            const0 = low.not_of(const1);
            have_consts = true;
        }
    };

    for (std::uint32_t ci : netlist.cell_order()) {
        const Cell& cell = netlist.cells()[ci];
        std::vector<Src> in;
        in.reserve(cell.inputs.size());
        for (NetId id : cell.inputs) in.push_back(src_of.at(id));

        Src out{};
        switch (cell.kind) {
            case CellKind::Nand: out = low.nand(in[0], in[1]); break;
            case CellKind::And: out = low.and_of(in[0], in[1]); break;
            case CellKind::Or: out = low.or_of(in[0], in[1]); break;
            case CellKind::Xor: out = low.xor_of(in[0], in[1]); break;
            case CellKind::Xnor: out = low.not_of(low.xor_of(in[0], in[1])); break;
            case CellKind::Not: out = low.not_of(in[0]); break;
            case CellKind::Buf: out = low.buf_of(in[0]); break;
            case CellKind::Table: {
                std::uint8_t t = cell.table;
                bool needs_const =
                    (in.size() == 0) ||
                    (in.size() == 1 && (t & 0b11) != 0b01 && (t & 0b11) != 0b10) ||
                    (in.size() == 2 && ((t & 0b1111) == 0 || (t & 0b1111) == 0b1111));
                if (needs_const) consts();
                out = low.lower_table(t, in, const0, const1);
                break;
            }
        }
        src_of[cell.output] = out;
    }

    // circuit outputs in order: next-state nets, then the flag net
    std::vector<NetId> out_nets;
    for (const Latch& l : netlist.latches()) out_nets.push_back(l.next);
    out_nets.push_back(netlist.flag_net());

    // an output must be the feed-out of a dedicated gate nothing reads; reuse
    // the driving gate when possible, otherwise append a two-NAND buffer
    std::unordered_map<NetId, std::uint32_t> out_multiplicity;
    for (NetId n : out_nets) ++out_multiplicity[n];

    std::vector<std::uint32_t> output_gate;  // 0-based lowered gate ids
    std::unordered_set<std::uint32_t> claimed;
    for (NetId n : out_nets) {
        Src srcn = src_of.at(n);
        bool can_claim = srcn.is_gate && low.consumers[srcn.index] == 0 &&
                         out_multiplicity[n] == 1 && !claimed.contains(srcn.index);
        if (can_claim) {
            claimed.insert(srcn.index);
            output_gate.push_back(srcn.index);
        } else {
            Src buffered = low.buf_of(srcn);
            claimed.insert(buffered.index);
            output_gate.push_back(buffered.index);
        }
    }

    // renumber: internal gates keep relative order as 1..c-m-1, outputs last
    const std::uint32_t c = static_cast<std::uint32_t>(low.gates.size());
    std::vector<std::uint32_t> new_index(c, 0);  // 1-based
    std::uint32_t next = 1;
    std::vector<bool> is_output(c, false);
    for (std::uint32_t g : output_gate) is_output[g] = true;
    for (std::uint32_t g = 0; g < c; ++g)
        if (!is_output[g]) new_index[g] = next++;
    for (std::size_t k = 0; k < output_gate.size(); ++k)
        new_index[output_gate[k]] = next + static_cast<std::uint32_t>(k);

    auto feed_out_of = [&](Src srcv) -> std::uint32_t {
        return srcv.is_gate ? m + s + new_index[srcv.index] : srcv.index;
    };

    std::vector<std::uint32_t> conn(2 * c, 0);
    for (std::uint32_t g = 0; g < c; ++g) {
        std::uint32_t j = new_index[g];
        conn[2 * (j - 1)] = feed_out_of(low.gates[g].first);
        conn[2 * (j - 1) + 1] = feed_out_of(low.gates[g].second);
    }

    return Circuit(c, s, m, std::move(conn));
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "PPMCKT " << circuit.gate_count() << ' ' << circuit.input_bits() << ' '
        << circuit.state_bits() << '\n';
    for (std::uint32_t j = 1; j <= circuit.gate_count(); ++j)
        out << "NAND " << circuit.conn(2 * j - 1) << ' ' << circuit.conn(2 * j) << '\n';
    return out.str();
}

}  // namespace ppm
