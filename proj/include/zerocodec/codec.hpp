#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "zerocodec/words.hpp"

namespace zc {

enum class BaseKind { Identity, Repetition, DistinctWeight, LimitedMagnitude, RsBalanced, Recursive };
enum class Mode { Guaranteed, Conjecture };

char base_letter(BaseKind k);

struct DecodeResult {
    Bits codeword; // estimate of the sent codeword
    Bits info;     // estimate of the information word
    bool cor = false;
};

// Fixed-length systematic-or-not binary code with a t-Sy0EC/(t+1)-Sy0ED/AU0ED decoder.
class Codec {
public:
    virtual ~Codec() = default;
    virtual std::size_t k() const = 0;
    virtual std::size_t n() const = 0;
    virtual std::size_t t() const = 0;
    virtual BaseKind kind() const = 0;
    virtual Bits encode(const Bits& x) const = 0;
    virtual DecodeResult decode(const Bits& y) const = 0;
    // JSON object describing the construction
    virtual std::string describe() const = 0;

protected:
    void check_info(const Bits& x) const;
    // re-encode the candidate and accept it iff it lies within t of y
    DecodeResult finish(const Bits& y, const Bits* candidate) const;
    DecodeResult reject() const;
};

} // namespace zc
