#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zerocodec/algebra.hpp"
#include "zerocodec/words.hpp"

namespace zc {

// A_{z^{t+1}, sigma~}(Z_m, n, w): words of length n and L1 weight w whose
// first n-1 digits have sigma polynomial sigma~ mod z^{t+1}. The last digit
// is the parity digit w - |X^|.
struct CwSigmaCode {
    Alg alg = Alg::group(1);
    Support support; // n - 1 elements
    std::size_t t = 0;
    Poly sigma_tilde = Poly::one();
    std::size_t n = 1;
    std::uint64_t w = 0;
    std::uint64_t m = kUnbounded;

    bool contains(const Nat& x) const;
    // sigma of the punctured part, mod z^{t+1}
    Poly sigma_of(const Nat& x_hat) const;
};

// Codewords of a pigeonhole class of S(Z_2, n, w), stored as binary words in
// lexicographic order.
struct ConstructedCode {
    CwSigmaCode code;
    std::vector<Bits> words;
    BigInt bound; // ceil(C(n,w) / |F_w|^t)
};

BigInt pigeonhole_bound(std::uint64_t n, std::uint64_t w, std::uint64_t t);
ConstructedCode construct_cw_code(std::size_t n, std::size_t w, std::size_t t, std::size_t max_n = 20);
// C_t(n) = C(Z_2, n, ceil(n/2), t-1)
ConstructedCode construct_balanced_code(std::size_t n, std::size_t t, std::size_t max_n = 20);

// Punctured-code decoder: solves the key equation with degree bounds
// (tau_plus for insertions, tau_minus for deletions).
std::optional<Nat> decode_asymmetric(const CwSigmaCode& code, const Nat& y_hat, std::size_t tau_minus,
                                     std::size_t tau_plus);

struct CwDecodeResult {
    Nat x;
    bool cor = false;
};
// t-SyEC/(t+1)-SyED/AUED decoder for constant weight sigma codes
CwDecodeResult decode_cw(const CwSigmaCode& code, const Nat& y);

} // namespace zc
