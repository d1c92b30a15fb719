#include "ppm/shake.hpp"

#include <openssl/evp.h>

#include <memory>

namespace ppm {

namespace {

thread_local std::uint64_t t_invocations = 0;

struct CtxDeleter {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

EVP_MD_CTX* thread_ctx() {
    thread_local std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx{EVP_MD_CTX_new()};
    return ctx.get();
}

}  // namespace

Bytes shake256(std::initializer_list<ByteView> parts, std::size_t out_len) {
    EVP_MD_CTX* ctx = thread_ctx();
    if (EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr) != 1)
        throw Error("SHAKE-256 init failed");
    for (ByteView part : parts) {
        if (!part.empty() && EVP_DigestUpdate(ctx, part.data(), part.size()) != 1)
            throw Error("SHAKE-256 update failed");
    }
    Bytes out(out_len);
    if (EVP_DigestFinalXOF(ctx, out.data(), out.size()) != 1)
        throw Error("SHAKE-256 squeeze failed");
    ++t_invocations;
    return out;
}

std::uint64_t shake256_invocations() { return t_invocations; }

}  // namespace ppm
