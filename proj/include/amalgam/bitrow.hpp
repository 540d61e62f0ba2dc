#pragma once

// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
// All bulk operations route through the dispatched word kernels.

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "amalgam/kernels.hpp"

namespace amalgam {

class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= (1ull << (i & 63)); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        return static_cast<int>(kern::ops().popcount(words_.data(), words_.size()));
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    BitRow& operator&=(const BitRow& o) {
        assert(nbits_ == o.nbits_);
        kern::ops().bit_and(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    BitRow& operator|=(const BitRow& o) {
        assert(nbits_ == o.nbits_);
        kern::ops().bit_or(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // this &= ~o
    BitRow& and_not(const BitRow& o) {
        assert(nbits_ == o.nbits_);
        kern::ops().bit_andnot(words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
    friend BitRow operator|(BitRow a, const BitRow& b) { return a |= b; }

    int count_and(const BitRow& o) const {
        assert(nbits_ == o.nbits_);
        return static_cast<int>(kern::ops().popcount_and(words_.data(), o.words_.data(), words_.size()));
    }
    bool intersects(const BitRow& o) const {
        assert(nbits_ == o.nbits_);
        return kern::ops().intersects(words_.data(), o.words_.data(), words_.size());
    }
    bool is_subset_of(const BitRow& o) const {
        assert(nbits_ == o.nbits_);
        return kern::ops().is_subset(words_.data(), o.words_.data(), words_.size());
    }

    bool operator==(const BitRow& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const BitRow& o) const { return !(*this == o); }
    // Lexicographic by lowest vertex index first; used for deterministic tie-breaks.
    bool lex_less(const BitRow& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] == o.words_[i]) continue;
            std::uint64_t diff = words_[i] ^ o.words_[i];
            std::uint64_t low = diff & (~diff + 1);
            return words_[i] & low;  // the row owning the lowest differing bit is smaller
        }
        return false;
    }

    // First set bit at index >= from, or -1.
    int next_bit(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        std::uint64_t cur = words_[w] & (~0ull << (from & 63));
        while (true) {
            if (cur) {
                int bit = static_cast<int>(w * 64) + std::countr_zero(cur);
                return bit < nbits_ ? bit : -1;
            }
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next_bit(0); v >= 0; v = next_bit(v + 1)) out.push_back(v);
        return out;
    }

    static BitRow from_vector(int nbits, const std::vector<int>& vs) {
        BitRow r(nbits);
        for (int v : vs) r.set(v);
        return r;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace amalgam
