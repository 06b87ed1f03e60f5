#include "zerocodec/words.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace zc {

std::uint64_t Distance::value() const {
    if (inf_) throw std::logic_error("infinite distance has no value");
    return v_;
}

std::string Distance::str() const { return inf_ ? "inf" : std::to_string(v_); }

Bits parse_bits(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0') out.push_back(0);
        else if (c == '1') out.push_back(1);
        else if (c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == ',') continue;
        else throw std::invalid_argument(std::string("not a bit: '") + c + "'");
    }
    return out;
}

std::string to_string(const Bits& x) {
    std::string s;
    s.reserve(x.size());
    for (auto b : x) s.push_back(b ? '1' : '0');
    return s;
}

Nat parse_nat(std::string_view s) {
    Nat out;
    std::uint64_t cur = 0;
    bool have = false;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
            have = true;
        } else if (c == ',' || c == ')' ) {
            if (have) out.push_back(cur);
            cur = 0;
            have = false;
        } else if (c == '(' || c == ' ') {
            continue;
        } else {
            throw std::invalid_argument(std::string("bad NatWord character '") + c + "'");
        }
    }
    if (have) out.push_back(cur);
    return out;
}

std::string to_string(const Nat& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

std::size_t hamming_weight(const Bits& x) {
    return static_cast<std::size_t>(std::count(x.begin(), x.end(), std::uint8_t{1}));
}

std::uint64_t l1_weight(const Nat& x) {
    std::uint64_t s = 0;
    for (auto v : x) s += v;
    return s;
}

Nat v_map(const Bits& x) {
    Nat v;
    v.reserve(hamming_weight(x) + 1);
    std::uint64_t run = 0;
    for (auto b : x) {
        if (b) {
            v.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    v.push_back(run);
    return v;
}

Nat v_hat_map(const Bits& x) {
    Nat v = v_map(x);
    v.pop_back();
    return v;
}

Nat v_hat_map(const Bits& x, std::size_t pad_to) {
    Nat v = v_hat_map(x);
    if (v.size() < pad_to) v.resize(pad_to, 0);
    return v;
}

Bits v_inverse(const Nat& v) {
    Bits x;
    x.reserve(static_cast<std::size_t>(l1_weight(v)) + v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        x.insert(x.end(), static_cast<std::size_t>(v[i]), 0);
        if (i + 1 < v.size()) x.push_back(1);
    }
    return x;
}

std::uint64_t l1_sym(const Nat& x, const Nat& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
    return s;
}

Distance d0di(const Bits& x, const Bits& y) {
    if (hamming_weight(x) != hamming_weight(y)) return Distance::infinite();
    return Distance(l1_sym(v_map(x), v_map(y)));
}

L1Distances l1_distances(const Nat& x, const Nat& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    std::uint64_t xy = 0, yx = 0, h = 0, dm = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) { xy += x[i] - y[i]; ++h; dm = std::max(dm, x[i] - y[i]); }
        else if (y[i] > x[i]) { yx += y[i] - x[i]; ++h; dm = std::max(dm, y[i] - x[i]); }
    }
    return {xy + yx, std::max(xy, yx), h, dm};
}

Nat monus(const Nat& x, const Nat& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    Nat r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] > y[i] ? x[i] - y[i] : 0;
    return r;
}

MultisetOps multiset_ops(const Nat& x, const Nat& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    MultisetOps m;
    m.cap.resize(x.size());
    m.cup.resize(x.size());
    m.sum.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        m.cap[i] = std::min(x[i], y[i]);
        m.cup[i] = std::max(x[i], y[i]);
        m.sum[i] = x[i] + y[i];
    }
    m.xsuby = monus(x, y);
    m.ysubx = monus(y, x);
    return m;
}

Nat support_of(const Nat& x) {
    Nat r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] ? 1 : 0;
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt mnomial(std::uint64_t n, std::uint64_t w, std::uint64_t m) {
    if (m == kUnbounded) {
        if (n == 0) return w == 0 ? 1 : 0;
        return binomial(n + w - 1, w);
    }
    if (m == 0) return 0;
    // inclusion-exclusion over digits forced >= m
    BigInt total = 0;
    for (std::uint64_t j = 0; j <= n && j * m <= w; ++j) {
        BigInt term = binomial(n, j) * mnomial(n, w - j * m, kUnbounded);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

namespace {

std::string key_of(const Bits& x) { return to_string(x); }

// BFS from x over words of length <= cap; stops early when target is reached
std::unordered_map<std::string, std::uint64_t> bfs(const Bits& x, std::size_t cap, std::size_t max_states,
                                                   const std::string* target) {
    std::unordered_map<std::string, std::uint64_t> seen;
    std::deque<std::pair<Bits, std::uint64_t>> q;
    seen.emplace(key_of(x), 0);
    q.emplace_back(x, 0);
    while (!q.empty()) {
        auto [cur, d] = std::move(q.front());
        q.pop_front();
        if (target && key_of(cur) == *target) break;
        auto visit = [&](Bits nb) {
            auto [it, fresh] = seen.emplace(key_of(nb), d + 1);
            if (!fresh) return;
            if (seen.size() > max_states) throw std::length_error("BFS oracle: state budget exceeded");
            q.emplace_back(std::move(nb), d + 1);
        };
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == 0 && (i == 0 || cur[i - 1] != 0)) {
                Bits nb = cur;
                nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(i));
                visit(std::move(nb));
            }
        }
        if (cur.size() < cap) {
            for (std::size_t i = 0; i <= cur.size(); ++i) {
                if (i > 0 && cur[i - 1] == 0) continue;
                Bits nb = cur;
                nb.insert(nb.begin() + static_cast<std::ptrdiff_t>(i), 0);
                visit(std::move(nb));
            }
        }
    }
    return seen;
}

} // namespace

Distance d0di_bfs_oracle(const Bits& x, const Bits& y, BfsLimits lim) {
    if (x.size() > lim.max_len || y.size() > lim.max_len)
        throw std::length_error("BFS oracle: word longer than the configured bound");
    const std::string target = key_of(y);
    auto seen = bfs(x, std::max(x.size(), y.size()), lim.max_states, &target);
    auto it = seen.find(target);
    return it == seen.end() ? Distance::infinite() : Distance(it->second);
}

std::unordered_map<std::string, std::uint64_t> d0di_bfs_ball(const Bits& x, std::size_t max_len,
                                                            std::size_t max_states) {
    if (x.size() > max_len) throw std::length_error("BFS oracle: word longer than the configured bound");
    return bfs(x, max_len, max_states, nullptr);
}

std::uint64_t concat_q(const Bits& x1, const Bits& x2, const Bits& y1, const Bits& y2) {
    if (hamming_weight(x1) != hamming_weight(y1))
        throw std::invalid_argument("concat_q: first parts must have equal weight");
    auto absdiff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
    const std::uint64_t a = v_map(x1).back(), b = v_map(y1).back();
    const std::uint64_t c = v_map(x2).front(), d = v_map(y2).front();
    return absdiff(a, b) + absdiff(c, d) - absdiff(a + c, b + d);
}

Bits concat(const Bits& a, const Bits& b) {
    Bits r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Bits concat(std::initializer_list<Bits> parts) {
    Bits r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

Bits marker(std::size_t s) {
    Bits m(s, 0);
    m.push_back(1);
    return m;
}

} // namespace zc
