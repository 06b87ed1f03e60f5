#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zc {

using BigInt = boost::multiprecision::cpp_int;

// Binary word over {0,1}; one byte per bit.
using Bits = std::vector<std::uint8_t>;
// Word over the naturals, e.g. the bucket image V(X).
using Nat = std::vector<std::uint64_t>;

// d0di value. Infinity is absorbing under +.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint64_t v) : v_(v), inf_(false) {}
    static constexpr Distance infinite() { Distance d; d.inf_ = true; return d; }

    constexpr bool finite() const { return !inf_; }
    std::uint64_t value() const;

    friend constexpr bool operator==(const Distance& a, const Distance& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend constexpr bool operator<(const Distance& a, const Distance& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(const Distance& a, const Distance& b) { return !(b < a); }
    friend constexpr Distance operator+(const Distance& a, const Distance& b) {
        if (a.inf_ || b.inf_) return infinite();
        return Distance(a.v_ + b.v_);
    }
    // true iff finite and <= t
    constexpr bool within(std::uint64_t t) const { return !inf_ && v_ <= t; }

    std::string str() const;

private:
    std::uint64_t v_ = 0;
    bool inf_ = false;
};

Bits parse_bits(std::string_view s);
std::string to_string(const Bits& x);
Nat parse_nat(std::string_view s);
std::string to_string(const Nat& x);

std::size_t hamming_weight(const Bits& x);
std::uint64_t l1_weight(const Nat& x);

// X = 0^{v1} 1 0^{v2} 1 ... 1 0^{v_{w+1}}  ->  (v1, ..., v_{w+1})
Nat v_map(const Bits& x);
// V without its last component
Nat v_hat_map(const Bits& x);
Nat v_hat_map(const Bits& x, std::size_t pad_to);
Bits v_inverse(const Nat& v);

Distance d0di(const Bits& x, const Bits& y);

struct L1Distances {
    std::uint64_t sym = 0;
    std::uint64_t asym = 0;
    std::uint64_t hamming = 0;
    std::uint64_t dmax = 0;
};
L1Distances l1_distances(const Nat& x, const Nat& y);
std::uint64_t l1_sym(const Nat& x, const Nat& y);

struct MultisetOps {
    Nat cap, cup, sum, xsuby, ysubx;
};
MultisetOps multiset_ops(const Nat& x, const Nat& y);
Nat monus(const Nat& x, const Nat& y);
Nat support_of(const Nat& x);

// alphabet size marker for Z_infinity = N
inline constexpr std::uint64_t kUnbounded = 0;

BigInt binomial(std::uint64_t n, std::uint64_t k);
// |S(Z_m, n, w)|: words of length n over {0..m-1} with digit sum w
BigInt mnomial(std::uint64_t n, std::uint64_t w, std::uint64_t m);

struct BfsLimits {
    std::size_t max_len = 12;
    std::size_t max_states = std::size_t{1} << 16;
};
// shortest path over single 0-deletion / 0-insertion edges
Distance d0di_bfs_oracle(const Bits& x, const Bits& y, BfsLimits lim = {});
// every word reachable from x without exceeding max_len, keyed by its text form
std::unordered_map<std::string, std::uint64_t> d0di_bfs_ball(const Bits& x, std::size_t max_len,
                                                            std::size_t max_states = std::size_t{1} << 16);

// Q(X1,X2,Y1,Y2); requires w(X1) = w(Y1)
std::uint64_t concat_q(const Bits& x1, const Bits& x2, const Bits& y1, const Bits& y2);

Bits concat(const Bits& a, const Bits& b);
Bits concat(std::initializer_list<Bits> parts);

// 0^s 1
Bits marker(std::size_t s);

} // namespace zc
