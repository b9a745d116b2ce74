#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "etb/common/errors.hpp"

namespace etb {

namespace detail {
inline const char* b64_alphabet() {
    return "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

inline int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}
}  // namespace detail

inline std::string base64_encode(const std::uint8_t* data, std::size_t n) {
    const char* tbl = detail::b64_alphabet();
    std::string out;
    out.reserve((n + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= n; i += 3) {
        std::uint32_t v = (std::uint32_t(data[i]) << 16) | (std::uint32_t(data[i + 1]) << 8) |
                          std::uint32_t(data[i + 2]);
        out.push_back(tbl[(v >> 18) & 63]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back(tbl[(v >> 6) & 63]);
        out.push_back(tbl[v & 63]);
    }
    if (i + 1 == n) {
        std::uint32_t v = std::uint32_t(data[i]) << 16;
        out.push_back(tbl[(v >> 18) & 63]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back('=');
        out.push_back('=');
    } else if (i + 2 == n) {
        std::uint32_t v = (std::uint32_t(data[i]) << 16) | (std::uint32_t(data[i + 1]) << 8);
        out.push_back(tbl[(v >> 18) & 63]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back(tbl[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

inline std::vector<std::uint8_t> base64_decode(const std::string& s) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size() / 4 * 3);
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : s) {
        if (c == '=' || c == '\n' || c == '\r') continue;
        const int v = detail::b64_value(c);
        if (v < 0) throw ConfigError("base64: invalid character");
        acc = (acc << 6) | std::uint32_t(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
        }
    }
    return out;
}

// Little-endian IEEE-754 doubles <-> base64, as stored in model files.
inline std::string doubles_to_base64(const std::vector<double>& v) {
    std::vector<std::uint8_t> bytes(v.size() * 8);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t u;
        static_assert(sizeof(double) == 8);
        std::memcpy(&u, &v[i], 8);
        for (int b = 0; b < 8; ++b) bytes[i * 8 + b] = static_cast<std::uint8_t>((u >> (8 * b)) & 0xff);
    }
    return base64_encode(bytes.data(), bytes.size());
}

inline std::vector<double> base64_to_doubles(const std::string& s) {
    const std::vector<std::uint8_t> bytes = base64_decode(s);
    if (bytes.size() % 8 != 0) throw ConfigError("base64: payload is not a whole number of doubles");
    std::vector<double> v(bytes.size() / 8);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t u = 0;
        for (int b = 0; b < 8; ++b) u |= std::uint64_t(bytes[i * 8 + b]) << (8 * b);
        std::memcpy(&v[i], &u, 8);
    }
    return v;
}

}  // namespace etb
