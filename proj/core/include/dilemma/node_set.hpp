#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dilemma {

// Fixed-width bitset over node indices of a poset. Width is chosen at
// construction; all binary operations require equal widths.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const NodeSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const NodeSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    NodeSet& operator|=(const NodeSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    NodeSet& operator&=(const NodeSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // Set difference.
    NodeSet& operator-=(const NodeSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

    // Calls f(i) for every member in ascending index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(k * 64 + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Orders sets as 0/1 strings read in ascending index order; at the first
    // index where they differ, the set lacking that index is smaller.
    friend bool lexicographic_less(const NodeSet& a, const NodeSet& b) {
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            const std::uint64_t diff = a.words_[k] ^ b.words_[k];
            if (diff) {
                const auto bit = std::countr_zero(diff);
                return ((b.words_[k] >> bit) & 1u) != 0;
            }
        }
        return false;
    }

private:
    void trim() {
        if (width_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dilemma
