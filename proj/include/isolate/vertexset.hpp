#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "isolate/errors.hpp"

namespace isolate {

// Set of vertices 0..n-1 backed by 64-bit words.  Width is fixed at
// construction; all binary operations require equal widths.  Graphs up to 64
// vertices live in a single word, which the exact solvers exploit separately.
class VertexSet {
  public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(check_width(n)), words_((n + 63) / 64, 0) {}
    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) add(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto &w : s.words_) w = ~std::uint64_t(0);
        s.trim();
        return s;
    }
    static VertexSet from_word(int n, std::uint64_t w) {
        VertexSet s(n);
        if (!s.words_.empty()) s.words_[0] = w;
        s.trim();
        return s;
    }

    int width() const { return n_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void add(int v) {
        if (v < 0 || v >= n_) throw parameter_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
        words_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void remove(int v) {
        if (v < 0 || v >= n_) throw parameter_error("vertex " + std::to_string(v) + " out of range");
        words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    VertexSet &operator|=(const VertexSet &o) { for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i]; return *this; }
    VertexSet &operator&=(const VertexSet &o) { for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i]; return *this; }
    VertexSet &operator^=(const VertexSet &o) { for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i]; return *this; }
    // set difference
    VertexSet &operator-=(const VertexSet &o) { for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i]; return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet &b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto &w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet &o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet &o) const { return !(*this == o); }

    bool intersects(const VertexSet &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Smallest element, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    // Smallest element > v, or -1.
    int next_after(int v) const {
        ++v;
        if (v >= n_) return -1;
        std::size_t i = v >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t(0) << (v & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    struct Iter {
        const VertexSet *s;
        int v;
        int operator*() const { return v; }
        Iter &operator++() { v = s->next_after(v); return *this; }
        bool operator!=(const Iter &o) const { return v != o.v; }
    };
    Iter begin() const { return {this, first()}; }
    Iter end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Value as an integer, most significant word first: total order used to
    // break ties between witnesses of equal size.
    bool less_as_integer(const VertexSet &o) const {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    // Single-word view; only valid when width() <= 64.
    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

    // "{0,2,5}" with ascending vertices.
    std::string str() const {
        std::string out = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) out += ",";
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

  private:
    static int check_width(int n) {
        if (n < 0) throw parameter_error("negative vertex-set width");
        return n;
    }
    void trim() {
        if (n_ % 64 && !words_.empty())
            words_.back() &= (~std::uint64_t(0)) >> (64 - n_ % 64);
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace isolate
