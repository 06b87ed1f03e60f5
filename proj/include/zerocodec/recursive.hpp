#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "zerocodec/algebra.hpp"
#include "zerocodec/codec.hpp"

namespace zc {

// Which base code family a user asked for. Auto picks the shortest design.
enum class BaseSel { Auto, Identity, Repetition, DistinctWeight, LimitedMagnitude, RsBalanced };

struct BaseSpec {
    BaseKind kind = BaseKind::Identity;
    std::size_t t = 0, k = 0;
    std::uint64_t n = 0;
    std::size_t b = 0, tau = 0; // S: byte length and strength; M: floor(k/32), k mod 32
};

struct LevelSpec {
    std::size_t t = 0, k = 0;
    std::uint64_t q = 0; // field (or group) order for the check part
    std::size_t l = 0;   // ceil(t log2 q)
    bool self_copy() const { return l >= k; }
    std::size_t next_k() const { return l < k ? l : k; }
};

struct Plan {
    std::size_t t = 0, k = 0;
    std::uint64_t n = 0;
    std::vector<LevelSpec> levels;
    BaseSpec base;
};

struct PlannerOptions {
    Mode mode = Mode::Guaranteed;
    // only consider designs the codec can actually build
    bool buildable = false;
    std::size_t max_b = 20;
};

// Exact code lengths of every design, memoized.
class Planner {
public:
    explicit Planner(PlannerOptions opt = {});

    std::uint64_t length_r(std::size_t t, std::uint64_t k) const;
    std::uint64_t length_w(std::size_t t, std::uint64_t k) const;
    std::optional<std::uint64_t> length_m(std::size_t t, std::uint64_t k) const;
    std::optional<BaseSpec> best_s(std::size_t t, std::uint64_t k);
    // n_t(k) of the recursive design
    std::uint64_t length_recursive(std::size_t t, std::uint64_t k);

    static LevelSpec level(std::size_t t, std::uint64_t k);

    // min{n_t(k), R, W} with R, W preferred on ties
    Plan best(std::size_t t, std::uint64_t k);
    Plan plan(std::size_t t, std::uint64_t k, BaseSel sel);

    const PlannerOptions& options() const { return opt_; }

private:
    struct Node {
        std::uint64_t n = 0;
        std::optional<BaseSpec> child; // nullopt: recurse once more
    };
    PlannerOptions opt_;
    std::map<std::pair<std::size_t, std::uint64_t>, Node> rec_;
    std::map<std::pair<std::size_t, std::uint64_t>, std::optional<BaseSpec>> s_;

    const Node& node(std::size_t t, std::uint64_t k);
    void follow(Plan& p, std::size_t t, std::uint64_t k, bool down_to_identity);
};

// E_t(X) = X 0^t 1 E_{t-1}(gamma2(X)), ending in a base code.
class RecursiveCodec final : public Codec {
public:
    RecursiveCodec(const Plan& plan, Mode mode);
    std::size_t k() const override { return plan_.k; }
    std::size_t n() const override { return static_cast<std::size_t>(plan_.n); }
    std::size_t t() const override { return plan_.t; }
    BaseKind kind() const override { return BaseKind::Recursive; }
    Bits encode(const Bits& x) const override;
    DecodeResult decode(const Bits& y) const override;
    std::string describe() const override;

    const Plan& plan() const { return plan_; }
    // check part of level j for information word x
    Bits check_part(std::size_t j, const Bits& x) const;

private:
    struct Level {
        LevelSpec spec;
        Alg alg;
        Support support;
        std::size_t n = 0; // length from this level down
    };
    Plan plan_;
    std::vector<Level> levels_;
    std::unique_ptr<Codec> base_;

    Poly sigma_of(const Level& lv, const Bits& x) const;
    Bits encode_from(std::size_t j, const Bits& x) const;
    DecodeResult decode_from(std::size_t j, const Bits& y) const;
};

std::unique_ptr<Codec> make_base_codec(const BaseSpec& spec, Mode mode);
std::unique_ptr<Codec> make_codec(std::size_t k, std::size_t t, BaseSel sel, Mode mode);

std::optional<BaseSel> parse_base_sel(const std::string& s);
std::optional<Mode> parse_mode(const std::string& s);

} // namespace zc
