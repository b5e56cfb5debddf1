#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "lincolor/common.hpp"

namespace lincolor {

// Subset of {0, ..., n-1} with bitset semantics. The universe size is part of
// the value; operations on mismatched universes throw.
class VertexSet {
  public:
    explicit VertexSet(int universe = 0)
        : n_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool contains(int v) const {
        check_range(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_range(v);
        words_[v >> 6] |= 1ull << (v & 63);
    }

    void erase(int v) {
        check_range(v);
        words_[v >> 6] &= ~(1ull << (v & 63));
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    void check_range(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex id out of range");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw PreconditionError("vertex sets over different universes");
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace lincolor
