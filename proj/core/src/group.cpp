#include "ppm/group.hpp"

#include <map>
#include <mutex>

namespace ppm {

namespace {

// MODP primes from RFC 2409 section 6 (768, 1024) and RFC 3526 sections 2-5
// (1536, 2048, 3072, 4096). Each p is a safe prime: (p-1)/2 is prime too.

constexpr const char* kPrime768 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A63A3620FFFFFFFFFFFFFFFF";

constexpr const char* kPrime1024 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE65381FFFFFFFFFFFFFFFF";

constexpr const char* kPrime1536 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA237327FFFFFFFFFFFFFFFF";

constexpr const char* kPrime2048 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF";

constexpr const char* kPrime3072 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AAAC42DAD33170D04507A33"
    "A85521ABDF1CBA64ECFB850458DBEF0A8AEA71575D060C7DB3970F85A6E1E4C7"
    "ABF5AE8CDB0933D71E8C94E04A25619DCEE3D2261AD2EE6BF12FFA06D98A0864"
    "D87602733EC86A64521F2B18177B200CBBE117577A615D6C770988C0BAD946E2"
    "08E24FA074E5AB3143DB5BFCE0FD108E4B82D120A93AD2CAFFFFFFFFFFFFFFFF";

constexpr const char* kPrime4096 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AAAC42DAD33170D04507A33"
    "A85521ABDF1CBA64ECFB850458DBEF0A8AEA71575D060C7DB3970F85A6E1E4C7"
    "ABF5AE8CDB0933D71E8C94E04A25619DCEE3D2261AD2EE6BF12FFA06D98A0864"
    "D87602733EC86A64521F2B18177B200CBBE117577A615D6C770988C0BAD946E2"
    "08E24FA074E5AB3143DB5BFCE0FD108E4B82D120A92108011A723C12A787E6D7"
    "88719A10BDBA5B2699C327186AF4E23C1A946834B6150BDA2583E9CA2AD44CE8"
    "DBBBC2DB04DE8EF92E8EFC141FBECAA6287C59474E6BC05D99B2964FA090C3A2"
    "233BA186515BE7ED1F612970CEE2D7AFB81BDD762170481CD0069127D5B05AA9"
    "93B4EA988D8FDDC186FFB7DC90A6C08F4DF435C934063199FFFFFFFFFFFFFFFF";

const char* prime_hex(unsigned n_bits) {
    switch (n_bits) {
        case 768: return kPrime768;
        case 1024: return kPrime1024;
        case 1536: return kPrime1536;
        case 2048: return kPrime2048;
        case 3072: return kPrime3072;
        case 4096: return kPrime4096;
        default: return nullptr;
    }
}

constexpr int kPrimalityRounds = 64;

}  // namespace

bool Group::supported(unsigned n_bits) { return prime_hex(n_bits) != nullptr; }

const Group& Group::load(unsigned n_bits) {
    static std::mutex mtx;
    static std::map<unsigned, Group> cache;

    const char* hex = prime_hex(n_bits);
    if (!hex)
        throw Error("unsupported group size n=" + std::to_string(n_bits) +
                    " (supported: 768, 1024, 1536, 2048, 3072, 4096)");

    std::lock_guard lock(mtx);
    auto it = cache.find(n_bits);
    if (it == cache.end()) {
        Group g(n_bits, hex);
        g.verify();
        it = cache.emplace(n_bits, std::move(g)).first;
    }
    return it->second;
}

Group::Group(unsigned n_bits, const char* p_hex) : n_bits_(n_bits), gen_(4) {
    p_ = mpz_class(p_hex, 16);
    q_ = (p_ - 1) / 2;
}

void Group::verify() const {
    if (mpz_sizeinbase(p_.get_mpz_t(), 2) != n_bits_)
        throw Error("group modulus has unexpected bit length");
    if (mpz_probab_prime_p(p_.get_mpz_t(), kPrimalityRounds) == 0)
        throw Error("group modulus failed primality test");
    if (mpz_probab_prime_p(q_.get_mpz_t(), kPrimalityRounds) == 0)
        throw Error("group order failed primality test");
    mpz_class check;
    mpz_powm(check.get_mpz_t(), gen_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    if (check != 1 || gen_ == 1)
        throw Error("generator does not generate the quadratic residue group");
}

GroupElement Group::pow(const GroupElement& base, const Exponent& e) const {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.value().get_mpz_t(), e.value().get_mpz_t(),
             p_.get_mpz_t());
    return GroupElement(std::move(out));
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    mpz_class out = a.value() * b.value();
    out %= p_;
    return GroupElement(std::move(out));
}

GroupElement Group::inv(const GroupElement& a) const {
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), a.value().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw Error("element is not invertible");
    return GroupElement(std::move(out));
}

bool Group::is_member(const mpz_class& v) const {
    if (v < 1 || v >= p_) return false;
    mpz_class check;
    mpz_powm(check.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    return check == 1;
}

Exponent Group::sample_exponent(Rng& rng) const {
    const std::size_t bits = mpz_sizeinbase(q_.get_mpz_t(), 2);
    const std::size_t nbytes = (bits + 7) / 8;
    const unsigned top_mask =
        bits % 8 == 0 ? 0xFF : static_cast<unsigned>((1u << (bits % 8)) - 1);
    mpz_class v;
    Bytes buf(nbytes);
    do {
        rng.fill(buf);
        buf[0] &= static_cast<std::uint8_t>(top_mask);
        mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    } while (v >= q_);
    return Exponent(std::move(v));
}

GroupElement Group::sample_element(Rng& rng) const {
    return pow(generator(), sample_exponent(rng));
}

Exponent Group::exponent_from(const mpz_class& v) const {
    if (v < 0 || v >= q_) throw Error("exponent out of range");
    return Exponent(v);
}

GroupElement Group::element_from(const mpz_class& v, MembershipCheck check) const {
    if (v < 1 || v >= p_) throw Error("value outside [1, p)");
    if (check == MembershipCheck::Full && !is_member(v))
        throw Error("value is not a quadratic residue");
    return GroupElement(v);
}

Bytes Group::encode(const GroupElement& x) const {
    Bytes out(element_size(), 0);
    std::size_t count = 0;
    Bytes tmp(element_size());
    mpz_export(tmp.data(), &count, 1, 1, 1, 0, x.value().get_mpz_t());
    // right-align: fixed width big-endian with leading zeros
    std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(count),
              out.end() - static_cast<std::ptrdiff_t>(count));
    return out;
}

GroupElement Group::decode(ByteView in, MembershipCheck check) const {
    if (in.size() != element_size())
        throw Error("element encoding has wrong length: got " +
                    std::to_string(in.size()) + ", want " +
                    std::to_string(element_size()));
    mpz_class v;
    mpz_import(v.get_mpz_t(), in.size(), 1, 1, 1, 0, in.data());
    return element_from(v, check);
}

}  // namespace ppm
