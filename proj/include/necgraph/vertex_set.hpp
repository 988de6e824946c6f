#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace necgraph {

// Fixed-width bitset over vertex indices 0..capacity-1. Binary operations
// require matching capacities; mixing sets from graphs of different orders
// is an error, not a silent resize.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity) {
        if (capacity < 0) throw std::invalid_argument("VertexSet: negative capacity");
        capacity_ = capacity;
        words_.assign((static_cast<std::size_t>(capacity) + 63) / 64, 0);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> members) {
        VertexSet s(capacity);
        for (int v : members) s.set(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool test(int v) const {
        check_index(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    }

    void reset(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // |this & o| without materializing the intersection
    int intersection_count(const VertexSet& o) const {
        check_same(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // this <- this \ o
    VertexSet& and_not(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // least member, -1 if empty
    int first() const { return next(-1); }

    // least member strictly greater than `after`, -1 if none
    int next(int after) const {
        int start = after + 1;
        if (start >= capacity_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~0ull << (start & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    void trim() {
        int r = capacity_ & 63;
        if (r != 0 && !words_.empty()) words_.back() &= (~0ull >> (64 - r));
    }
    void check_index(int v) const {
        if (v < 0 || v >= capacity_) throw std::out_of_range("VertexSet: vertex index out of range");
    }
    void check_same(const VertexSet& o) const {
        if (capacity_ != o.capacity_) throw std::invalid_argument("VertexSet: capacity mismatch");
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) {
    a &= b;
    return a;
}

inline VertexSet operator|(VertexSet a, const VertexSet& b) {
    a |= b;
    return a;
}

}  // namespace necgraph
