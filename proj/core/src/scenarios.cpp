#include "ppm/scenarios.hpp"

#include "ppm/netlist.hpp"

namespace ppm {

namespace {

using Word = std::vector<NetId>;  // LSB first

// acc <- acc + addend (mod 2^W), ripple carry
Word add_word(NetBuilder& b, const Word& acc, const Word& addend) {
    Word sum;
    NetId carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (i == 0) {
            sum.push_back(b.xor_gate(acc[0], addend[0]));
            carry = b.and_gate(acc[0], addend[0]);
        } else {
            NetId axb = b.xor_gate(acc[i], addend[i]);
            sum.push_back(b.xor_gate(axb, carry));
            carry = b.or_gate(b.and_gate(acc[i], addend[i]), b.and_gate(axb, carry));
        }
    }
    return sum;
}

// acc <- acc - subtrahend (mod 2^W): acc + ~subtrahend + 1
Word sub_word(NetBuilder& b, const Word& acc, const Word& subtrahend) {
    Word diff;
    NetId carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        NetId nb = b.not_gate(subtrahend[i]);
        if (i == 0) {
            // carry-in fixed to 1
            diff.push_back(b.xnor_gate(acc[0], nb));
            carry = b.or_gate(acc[0], nb);
        } else {
            NetId axb = b.xor_gate(acc[i], nb);
            diff.push_back(b.xor_gate(axb, carry));
            carry = b.or_gate(b.and_gate(acc[i], nb), b.and_gate(axb, carry));
        }
    }
    return diff;
}

// unsigned a < b via the borrow chain of a - b
NetId less_than(NetBuilder& b, const Word& a, const Word& bw) {
    NetId borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        NetId lt_here = b.and_gate(b.not_gate(a[i]), bw[i]);
        if (i == 0) {
            borrow = lt_here;
        } else {
            NetId eq_here = b.xnor_gate(a[i], bw[i]);
            borrow = b.or_gate(lt_here, b.and_gate(eq_here, borrow));
        }
    }
    return borrow;
}

NetId or_tree(NetBuilder& b, const std::vector<NetId>& nets) {
    std::vector<NetId> level = nets;
    while (level.size() > 1) {
        std::vector<NetId> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(b.or_gate(level[i], level[i + 1]));
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level.front();
}

NetId and_tree(NetBuilder& b, const std::vector<NetId>& nets) {
    std::vector<NetId> level = nets;
    while (level.size() > 1) {
        std::vector<NetId> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(b.and_gate(level[i], level[i + 1]));
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level.front();
}

}  // namespace

Circuit build_acs(std::uint32_t doors, std::uint32_t internal_doors, std::uint32_t width) {
    if (doors < 1) throw Error("ACS needs at least one external door");
    if (width < 1) throw Error("ACS counter width must be positive");

    NetBuilder b;
    Word cnt_a, cnt_b;
    for (std::uint32_t i = 0; i < width; ++i) cnt_a.push_back(b.state());
    for (std::uint32_t i = 0; i < width; ++i) cnt_b.push_back(b.state());

    struct Quad {
        Word entered_a, exited_a, entered_b, exited_b;
    };
    std::vector<Quad> door_inputs;
    for (std::uint32_t d = 0; d < doors + internal_doors; ++d) {
        Quad q;
        for (std::uint32_t i = 0; i < width; ++i) q.entered_a.push_back(b.input());
        for (std::uint32_t i = 0; i < width; ++i) q.exited_a.push_back(b.input());
        for (std::uint32_t i = 0; i < width; ++i) q.entered_b.push_back(b.input());
        for (std::uint32_t i = 0; i < width; ++i) q.exited_b.push_back(b.input());
        door_inputs.push_back(std::move(q));
    }

    // only external doors update the counters
    Word next_a = cnt_a, next_b = cnt_b;
    for (std::uint32_t d = 0; d < doors; ++d) {
        next_a = add_word(b, next_a, door_inputs[d].entered_a);
        next_a = sub_word(b, next_a, door_inputs[d].exited_a);
        next_b = add_word(b, next_b, door_inputs[d].entered_b);
        next_b = sub_word(b, next_b, door_inputs[d].exited_b);
    }

    for (std::uint32_t i = 0; i < width; ++i) {
        b.set_next(cnt_a[i], next_a[i]);
        b.set_next(cnt_b[i], next_b[i]);
    }
    b.set_flag(less_than(b, next_a, next_b));
    return to_nand(b.take());
}

Circuit build_locks(std::uint32_t locks) {
    if (locks < 1) throw Error("Locks scenario needs at least one lock");

    NetBuilder b;
    std::vector<NetId> lock_state;
    for (std::uint32_t i = 0; i < locks; ++i) lock_state.push_back(b.state());

    std::vector<NetId> violations;
    for (std::uint32_t i = 0; i < locks; ++i) {
        NetId hi = b.input();
        NetId lo = b.input();
        NetId is_lock = b.and_gate(b.not_gate(hi), lo);     // 01
        NetId is_unlock = b.and_gate(hi, b.not_gate(lo));   // 10

        NetId locked = lock_state[i];
        violations.push_back(b.or_gate(b.and_gate(is_lock, locked),
                                       b.and_gate(is_unlock, b.not_gate(locked))));

        NetId hold = b.and_gate(locked, b.not_gate(is_unlock));
        b.set_next(lock_state[i], b.or_gate(is_lock, hold));
    }
    b.set_flag(or_tree(b, violations));
    return to_nand(b.take());
}

Circuit build_mod_counter(std::uint32_t modulus, bool flag_on_zero) {
    if (modulus < 2) throw Error("modulus must be at least 2");

    std::uint32_t bits = 0;
    while ((1ull << bits) < modulus) ++bits;  // ceil(log2)

    NetBuilder b;
    Word counter;
    for (std::uint32_t i = 0; i < bits; ++i) counter.push_back(b.state());
    NetId in = b.input();

    // counter + in with the carry kept: an m+1 bit value
    Word inc;
    NetId carry = in;
    for (std::uint32_t i = 0; i < bits; ++i) {
        inc.push_back(b.xor_gate(counter[i], carry));
        carry = b.and_gate(counter[i], carry);
    }

    // wrap exactly when (carry, inc) equals the modulus
    const std::uint64_t mod = modulus;
    std::vector<NetId> match;
    for (std::uint32_t i = 0; i < bits; ++i)
        match.push_back((mod >> i) & 1 ? inc[i] : b.not_gate(inc[i]));
    match.push_back((mod >> bits) & 1 ? carry : b.not_gate(carry));
    NetId wrap = and_tree(b, match);

    Word next;
    std::vector<NetId> nonzero;
    NetId keep = b.not_gate(wrap);
    for (std::uint32_t i = 0; i < bits; ++i) {
        next.push_back(b.and_gate(inc[i], keep));
        nonzero.push_back(next[i]);
        b.set_next(counter[i], next[i]);
    }

    NetId any = or_tree(b, nonzero);
    b.set_flag(flag_on_zero ? b.not_gate(any) : any);
    return to_nand(b.take());
}

}  // namespace ppm
