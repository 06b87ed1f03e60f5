#pragma once

#include <doctest.h>

#include "zerocodec/codec.hpp"

namespace zc::testing {

inline Bits bits_of(std::uint64_t v, std::size_t len) {
    Bits x(len);
    for (std::size_t i = 0; i < len; ++i) x[i] = static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1);
    return x;
}

// All words at d0di distance <= r from x, with their distance. A received
// word keeps the weight of x, so it is fixed by its zero runs; each run moves
// independently.
inline std::vector<std::pair<Bits, std::uint64_t>> ball(const Bits& x, std::uint64_t r) {
    const Nat v = v_map(x);
    std::vector<std::pair<Bits, std::uint64_t>> out;
    Nat cur = v;
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> void {
        if (i == v.size()) {
            out.emplace_back(v_inverse(cur), used);
            return;
        }
        const std::uint64_t left = r - used;
        const std::uint64_t down = v[i] < left ? v[i] : left;
        for (std::uint64_t d = 0; d <= down; ++d) {
            cur[i] = v[i] - d;
            self(self, i + 1, used + d);
        }
        for (std::uint64_t u = 1; u <= left; ++u) {
            cur[i] = v[i] + u;
            self(self, i + 1, used + u);
        }
        cur[i] = v[i];
    };
    rec(rec, 0, 0);
    return out;
}

// Decoding behaviour on every received word within distance t+1 of a
// sample of codewords.
inline void check_ball_behaviour(const Codec& c, std::size_t max_words = 64) {
    const std::size_t k = c.k(), t = c.t();
    const std::uint64_t total = std::uint64_t{1} << k;
    const std::uint64_t step = total > max_words ? total / max_words : 1;
    for (std::uint64_t m = 0; m < total; m += step) {
        const Bits x = bits_of(m, k);
        const Bits e = c.encode(x);
        REQUIRE(e.size() == c.n());
        for (const auto& [y, d] : ball(e, t + 1)) {
            auto r = c.decode(y);
            CAPTURE(to_string(x));
            CAPTURE(to_string(y));
            if (d <= t) {
                CHECK(r.cor);
                CHECK(r.info == x);
                CHECK(r.codeword == e);
            } else if (r.cor) {
                CHECK(r.info == x);
            }
        }
    }
}

} // namespace zc::testing
