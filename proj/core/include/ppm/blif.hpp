#pragma once

/// @file blif.hpp
/// Parser for the BLIF subset produced by gate-level synthesis: .model,
/// .inputs, .outputs, .names with single-output covers of at most two inputs,
/// .latch, .end, '#' comments and '\' line continuations.

#include <string_view>

#include "ppm/netlist.hpp"

namespace ppm {

/// Parses BLIF text into a validated netlist. Latches become state bits in
/// declaration order; the flag output is the single .outputs net not driven
/// by a latch. Throws ParseError (with line number) on syntax problems and
/// Error on structural ones.
Netlist parse_blif(std::string_view text);

}  // namespace ppm
