#pragma once

#include <cstddef>

#include "zerocodec/words.hpp"

namespace zc {

struct Extracted {
    Bits head; // Z with the marker zeros removed
    Bits tail; // everything after the delimiting 1
};

// Splits y at the first 1 at or after (1-indexed) position i. The prefix
// W 0^v loses min(v, s) trailing zeros.
Extracted extract(const Bits& y, std::size_t s, std::size_t i);

// floor((t - delta) / 2) for signed delta, |delta| <= t
std::size_t tau_minus_of(long t, long delta);

} // namespace zc
