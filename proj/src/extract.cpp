#include "zerocodec/extract.hpp"

namespace zc {

Extracted extract(const Bits& y, std::size_t s, std::size_t i) {
    // the i-th bit itself is the first candidate
    std::size_t p = i > 0 ? i - 1 : 0;
    while (p < y.size() && y[p] == 0) ++p;
    const bool found = p < y.size();
    const std::size_t end = found ? p : y.size();
    std::size_t v = 0;
    while (v < end && y[end - 1 - v] == 0) ++v;
    const std::size_t drop = v < s ? v : s;
    Extracted out;
    out.head.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(end - drop));
    if (found) out.tail.assign(y.begin() + static_cast<std::ptrdiff_t>(p + 1), y.end());
    return out;
}

std::size_t tau_minus_of(long t, long delta) {
    const long num = t - delta;
    return static_cast<std::size_t>(num >= 0 ? num / 2 : -((-num + 1) / 2));
}

} // namespace zc
