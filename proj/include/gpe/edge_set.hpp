#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gpe/errors.hpp"

namespace gpe {

/// Subset of the edges of a fixed graph, stored as a bitset over edge
/// indices. One 64-bit word up to 64 edges, more words beyond that.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe)
        : universe_(universe),
          words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) throw precondition_error("EdgeSet: negative universe");
    }

    int universe() const { return universe_; }

    bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1u; }
    void set(int i) { words_[word(i)] |= std::uint64_t{1} << bit(i); }
    void reset(int i) { words_[word(i)] &= ~(std::uint64_t{1} << bit(i)); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeSet& subtract(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const EdgeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool contains(const EdgeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return next(0); }

    /// Smallest member >= i, or -1.
    int next(int i) const {
        if (i >= universe_) return -1;
        std::size_t w = word(i);
        std::uint64_t cur = words_[w] >> bit(i);
        if (cur) return i + std::countr_zero(cur);
        for (++w; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for (int e = first(); e >= 0; e = next(e + 1)) v.push_back(e);
        return v;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Orders equal-sized sets by their sorted index sequences: the set
    /// owning the smallest differing edge index comes first.
    static bool canonical_less(const EdgeSet& a, const EdgeSet& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                int p = std::countr_zero(diff);
                return (a.words_[i] >> p) & 1u;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(universe_);
        for (auto w : words_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
    static int bit(int i) { return i % 64; }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

} // namespace gpe
