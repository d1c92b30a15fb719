#pragma once

/// @file scenarios.hpp
/// Programmatic builders for the benchmark specifications. Each returns a
/// NAND circuit via the shared netlist lowering, so the protocol only ever
/// sees plain circuits.
///
/// Observation and state bit layouts (used by trace generators and the
/// reference models in the tests):
///
/// ACS(N, N', W): observation has one quadruple per door, external doors
/// first: entered_A, exited_A, entered_B, exited_B, each a W-bit unsigned
/// count, least significant bit first. s = 4(N+N')W. State is cnt_A then
/// cnt_B, W bits each LSB-first; m = 2W. Counters update modulo 2^W from the
/// N external doors only; flag = post-update cnt_A < cnt_B (unsigned).
///
/// Locks(N): observation has two bits per lock, (hi, lo): LOCK = 01,
/// UNLOCK = 10, SKIP = 00; the undefined pattern 11 acts as SKIP and never
/// raises the flag. s = 2N. State bit i is lock i, LOCKED = 1; m = N. Flag
/// when a lock request hits a locked lock or an unlock request an unlocked
/// one; state follows the request, SKIP leaves it unchanged.
///
/// Mod(M): observation is a single bit; the state is a ceil(log2 M)-bit
/// counter of observed ones modulo M. With flag_on_zero (the default) the
/// flag raises exactly when the post-update counter is zero, otherwise when
/// it is nonzero.

#include <cstdint>

#include "ppm/circuit.hpp"

namespace ppm {

Circuit build_acs(std::uint32_t doors, std::uint32_t internal_doors, std::uint32_t width);

Circuit build_locks(std::uint32_t locks);

Circuit build_mod_counter(std::uint32_t modulus, bool flag_on_zero = true);

}  // namespace ppm
