#include "lockstep/digest.hpp"

#include <openssl/evp.h>

namespace lockstep {

std::string sha256_hex(std::span<const u8> data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    EVP_Digest(data.data(), data.size(), md, &md_len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

std::string sha256_hex(const std::string& data) {
    return sha256_hex(std::span<const u8>(reinterpret_cast<const u8*>(data.data()),
                                          data.size()));
}

} // namespace lockstep
