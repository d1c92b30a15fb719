#pragma once

/// @file group.hpp
/// Safe-prime quadratic-residue groups. The modulus p is a fixed MODP prime
/// (RFC 2409 for 768/1024 bits, RFC 3526 for 1536..4096), the group is the
/// order-q subgroup of squares with q = (p-1)/2, and the generator is 4.
/// DDH is assumed to hold here; everything the hidden protocol does with
/// labels reduces to pow/mul/encode on this type.

#include <gmpxx.h>

#include <cstdint>

#include "ppm/bytes.hpp"
#include "ppm/rng.hpp"

namespace ppm {

class Group;

/// A quadratic residue mod p. Only Group can mint one, so a constructed
/// element is always a member.
class GroupElement {
  public:
    GroupElement() = default;  // identity
    const mpz_class& value() const { return v_; }
    bool operator==(const GroupElement& o) const { return v_ == o.v_; }

  private:
    friend class Group;
    explicit GroupElement(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_{1};
};

/// A value in [0, q).
class Exponent {
  public:
    Exponent() = default;
    const mpz_class& value() const { return v_; }
    bool operator==(const Exponent& o) const { return v_ == o.v_; }
    bool operator<(const Exponent& o) const { return v_ < o.v_; }

  private:
    friend class Group;
    explicit Exponent(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_{0};
};

/// How much validation decode() applies to an incoming encoding.
/// Full runs the x^q == 1 membership exponentiation; Range only checks
/// 1 <= x < p. Range is for bulk setup lists from a semi-honest peer where a
/// per-element exponentiation would dwarf the protocol itself.
enum class MembershipCheck { Full, Range };

class Group {
  public:
    /// Returns the fixed group of the given modulus bit length, one of
    /// {768, 1024, 1536, 2048, 3072, 4096}. Primality of p and (p-1)/2 is
    /// verified on first load (64-round probabilistic test) and cached.
    static const Group& load(unsigned n_bits);

    static bool supported(unsigned n_bits);

    unsigned n_bits() const { return n_bits_; }
    /// Fixed element encoding width, ceil(n/8) bytes.
    std::size_t element_size() const { return (n_bits_ + 7) / 8; }
    const mpz_class& modulus() const { return p_; }
    const mpz_class& order() const { return q_; }
    GroupElement generator() const { return GroupElement(gen_); }

    GroupElement pow(const GroupElement& base, const Exponent& e) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;

    bool is_member(const mpz_class& v) const;

    /// Uniform in [0, q) by rejection sampling.
    Exponent sample_exponent(Rng& rng) const;
    /// Uniform over the group: generator raised to a uniform exponent.
    GroupElement sample_element(Rng& rng) const;

    Exponent exponent_from(const mpz_class& v) const;
    GroupElement element_from(const mpz_class& v,
                              MembershipCheck check = MembershipCheck::Full) const;

    /// Fixed-width big-endian encoding of the element value.
    Bytes encode(const GroupElement& x) const;
    /// Inverse of encode. Throws on wrong length, value outside [1, p), or
    /// (with Full) a non-residue.
    GroupElement decode(ByteView in, MembershipCheck check = MembershipCheck::Full) const;

  private:
    Group(unsigned n_bits, const char* p_hex);
    void verify() const;

    unsigned n_bits_;
    mpz_class p_;
    mpz_class q_;
    mpz_class gen_;
};

}  // namespace ppm
