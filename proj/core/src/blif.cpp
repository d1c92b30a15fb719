#include "ppm/blif.hpp"

#include <sstream>
#include <unordered_map>

namespace ppm {

namespace {

struct LogicalLine {
    std::size_t number;  // first physical line
    std::vector<std::string> tokens;
};

std::vector<LogicalLine> tokenize(std::string_view text) {
    std::vector<LogicalLine> lines;
    std::size_t line_no = 0;
    std::string pending;
    std::size_t pending_start = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string line(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();

        bool continued = !line.empty() && line.back() == '\\';
        if (continued) line.pop_back();

        if (pending.empty()) pending_start = line_no;
        pending += line;
        if (continued) {
            pending += ' ';
            continue;
        }

        std::istringstream ss(pending);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({pending_start, std::move(tokens)});
        pending.clear();
    }
    return lines;
}

CellKind classify(std::size_t input_count, std::uint8_t table, std::uint8_t& out_table) {
    out_table = table;
    if (input_count == 2) {
        switch (table) {
            case 0b0111: return CellKind::Nand;
            case 0b1000: return CellKind::And;
            case 0b1110: return CellKind::Or;
            case 0b0110: return CellKind::Xor;
            case 0b1001: return CellKind::Xnor;
            default: return CellKind::Table;
        }
    }
    if (input_count == 1) {
        switch (table & 0b11) {
            case 0b01: return CellKind::Not;
            case 0b10: return CellKind::Buf;
            default: return CellKind::Table;
        }
    }
    return CellKind::Table;
}

struct NamesBlock {
    std::size_t line;
    std::vector<std::string> nets;  // inputs then output
    std::vector<std::pair<std::string, char>> rows;
};

}  // namespace

Netlist parse_blif(std::string_view text) {
    Netlist nl;
    std::unordered_map<std::string, NetId> by_name;
    auto net = [&](const std::string& name) {
        auto it = by_name.find(name);
        if (it != by_name.end()) return it->second;
        NetId id = nl.add_net(name);
        by_name.emplace(name, id);
        return id;
    };

    std::optional<NamesBlock> open;
    bool ended = false;

    auto finish_names = [&]() {
        if (!open) return;
        NamesBlock blk = std::move(*open);
        open.reset();

        const std::size_t k = blk.nets.size() - 1;
        if (k > 2)
            throw ParseError(".names with more than two inputs is not supported", blk.line);

        // single-output cover: all rows share an output value; 1-rows list the
        // on-set, 0-rows the off-set
        std::uint8_t table = 0;
        if (!blk.rows.empty()) {
            char out_val = blk.rows.front().second;
            const std::uint8_t full =
                k == 0 ? 0b1 : (k == 1 ? 0b11 : 0b1111);
            table = out_val == '1' ? 0 : full;
            for (const auto& [pattern, val] : blk.rows) {
                if (val != out_val)
                    throw ParseError(".names cover mixes 0-rows and 1-rows", blk.line);
                if (pattern.size() != k)
                    throw ParseError(".names row width does not match input count",
                                     blk.line);
                // expand don't-cares
                std::vector<unsigned> minterms{0};
                for (char c : pattern) {
                    std::vector<unsigned> next;
                    for (unsigned m : minterms) {
                        if (c == '0' || c == '-') next.push_back(m << 1);
                        if (c == '1' || c == '-') next.push_back((m << 1) | 1);
                        if (c != '0' && c != '1' && c != '-')
                            throw ParseError(".names row has invalid character", blk.line);
                    }
                    minterms = std::move(next);
                }
                if (k == 0) minterms = {0};
                for (unsigned m : minterms) {
                    if (out_val == '1')
                        table |= static_cast<std::uint8_t>(1u << m);
                    else
                        table &= static_cast<std::uint8_t>(~(1u << m));
                }
            }
        }

        Cell cell;
        std::uint8_t norm = 0;
        cell.kind = classify(k, table, norm);
        cell.table = norm;
        for (std::size_t i = 0; i < k; ++i) cell.inputs.push_back(net(blk.nets[i]));
        cell.output = net(blk.nets.back());
        nl.add_cell(std::move(cell));
    };

    for (const LogicalLine& line : tokenize(text)) {
        if (ended) break;
        const std::string& head = line.tokens.front();

        if (head[0] != '.') {
            if (!open)
                throw ParseError("table row outside a .names block", line.number);
            if (open->nets.size() == 1) {
                // constant: the row is the output value alone
                if (line.tokens.size() != 1 ||
                    (line.tokens[0] != "0" && line.tokens[0] != "1"))
                    throw ParseError("invalid constant .names row", line.number);
                open->rows.emplace_back("", line.tokens[0][0]);
            } else {
                if (line.tokens.size() != 2 || line.tokens[1].size() != 1)
                    throw ParseError("invalid .names row", line.number);
                open->rows.emplace_back(line.tokens[0], line.tokens[1][0]);
            }
            continue;
        }

        finish_names();

        if (head == ".model") {
            continue;  // name is informational
        } else if (head == ".inputs") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                nl.mark_input(net(line.tokens[i]));
        } else if (head == ".outputs") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                nl.mark_output(net(line.tokens[i]));
        } else if (head == ".names") {
            if (line.tokens.size() < 2)
                throw ParseError(".names needs at least an output net", line.number);
            open = NamesBlock{line.number,
                              {line.tokens.begin() + 1, line.tokens.end()},
                              {}};
        } else if (head == ".latch") {
            // .latch <next> <state> [type control] [init]; extra fields ignored
            if (line.tokens.size() < 3)
                throw ParseError(".latch needs input and output nets", line.number);
            nl.add_latch(net(line.tokens[1]), net(line.tokens[2]));
        } else if (head == ".end") {
            ended = true;
        } else {
            throw ParseError("unsupported construct: " + head, line.number);
        }
    }
    finish_names();

    nl.validate();
    return nl;
}

}  // namespace ppm
