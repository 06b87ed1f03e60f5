#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zerocodec/algebra.hpp"
#include "zerocodec/codec.hpp"
#include "zerocodec/sigma.hpp"

namespace zc {

// t = 0: the information word itself
class IdentityCode final : public Codec {
public:
    explicit IdentityCode(std::size_t k);
    std::size_t k() const override { return k_; }
    std::size_t n() const override { return k_; }
    std::size_t t() const override { return 0; }
    BaseKind kind() const override { return BaseKind::Identity; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

private:
    std::size_t k_;
};

// every bit repeated t+1 times
class RepetitionCode final : public Codec {
public:
    RepetitionCode(std::size_t k, std::size_t t);
    std::size_t k() const override { return k_; }
    std::size_t n() const override { return k_ * (t_ + 1); }
    std::size_t t() const override { return t_; }
    BaseKind kind() const override { return BaseKind::Repetition; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

private:
    std::size_t k_, t_;
};

std::uint64_t repetition_length(std::uint64_t k, std::uint64_t t);

// X 0^a 1^b with Hamming weight equal to the integer value of X; n = 2^k - 1
class DistinctWeightCode final : public Codec {
public:
    static constexpr std::size_t kMaxK = 24;
    DistinctWeightCode(std::size_t k, std::size_t t);
    std::size_t k() const override { return k_; }
    std::size_t n() const override { return (std::size_t{1} << k_) - 1; }
    std::size_t t() const override { return t_; }
    BaseKind kind() const override { return BaseKind::DistinctWeight; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

private:
    std::size_t k_, t_;
};

// 2^k - 1, saturating
std::uint64_t distinct_weight_length(std::uint64_t k);

// Binary words whose first w zero runs are multiples of D = t+1 (the last run
// is free), indexed in lexicographic order.
class LimitedMagnitudeChunk {
public:
    LimitedMagnitudeChunk(std::size_t s, std::size_t t);
    std::size_t s() const { return s_; }
    std::size_t n() const { return n_; }
    Bits unrank(const BigInt& v) const;
    std::optional<BigInt> rank(const Bits& x) const;
    bool contains(const Bits& x) const;
    // bucket-rounding decoder; nullopt when no information word fits
    std::optional<BigInt> decode(const Bits& y) const;

    // number of codewords of length n
    static BigInt cardinality(std::size_t n, std::size_t t);
    // minimal length carrying s bits
    static std::size_t length_for(std::size_t s, std::size_t t);

private:
    std::size_t s_, t_, n_;
    // f_[L][r]: completions of length L from residue r
    std::vector<std::vector<BigInt>> f_;
};

inline constexpr std::size_t kChunkBits = 32;

class LimitedMagnitudeCode final : public Codec {
public:
    LimitedMagnitudeCode(std::size_t k, std::size_t t);
    std::size_t k() const override { return k_; }
    std::size_t n() const override { return n_; }
    std::size_t t() const override { return t_; }
    BaseKind kind() const override { return BaseKind::LimitedMagnitude; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

private:
    std::size_t k_, t_, n_;
    std::vector<LimitedMagnitudeChunk> chunks_;
};

std::uint64_t limited_magnitude_length(std::uint64_t k, std::uint64_t t);

// Smallest n~ with ceil(C(n~, floor(n~/2)) / |F_w|^{tau-1}) >= size.
std::uint64_t balanced_length(std::uint64_t size, std::size_t tau);

struct RsParams {
    std::size_t b = 0;   // bits per information byte
    std::size_t tau = 0; // byte-level strength
    std::size_t k_rs = 0;
    std::size_t checks = 0;
    std::uint64_t q = 0; // RS field order
    std::uint64_t n = 0; // binary length
};

// nullopt when the parameters are out of range
std::optional<RsParams> rs_balanced_params(std::uint64_t k, std::uint64_t t, std::size_t b, std::size_t tau,
                                          Mode mode);

// RS code over GF(q) whose symbols are written with balanced byte codes
class RsBalancedCode final : public Codec {
public:
    RsBalancedCode(std::size_t k, std::size_t t, std::size_t b, std::size_t tau, Mode mode);
    std::size_t k() const override { return k_; }
    std::size_t n() const override { return static_cast<std::size_t>(p_.n); }
    std::size_t t() const override { return t_; }
    BaseKind kind() const override { return BaseKind::RsBalanced; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

    const RsParams& params() const { return p_; }
    const Alg& field() const { return F_; }

    struct ByteCode {
        ConstructedCode cc;
        std::size_t size = 0; // |I|
        std::size_t nbits = 0;
        std::map<Bits, std::size_t> index;
    };

    // Reed-Solomon layer: evaluation code on the elements with index 0..n_RS-1
    std::vector<Alg::Elem> rs_encode(const std::vector<Alg::Elem>& info) const;
    std::optional<std::vector<Alg::Elem>> rs_decode(const std::vector<std::optional<Alg::Elem>>& r) const;

private:
    std::size_t k_, t_;
    Mode mode_;
    RsParams p_;
    Alg F_;
    bool info_field_rank_ = false;
    std::size_t tail_bits_ = 0;
    ByteCode info_, tail_, check_;

    const ByteCode& byte_code(std::size_t j) const;
    std::size_t elem_rank(Alg::Elem a) const;
    Alg::Elem rank_elem(std::size_t r) const;
};

} // namespace zc
