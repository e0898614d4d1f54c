#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polymin/simd/kernels.hpp"

namespace polymin {

/// Fixed-universe dense bitset over element indices [0, size()).
/// Bits past size() in the last word are kept zero.
class Bitset {
public:
    using Word = simd::Word;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
        clear_tail();
    }

    static Bitset full(std::size_t size) { return Bitset(size, true); }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    std::size_t count() const { return simd::active().popcount(words_.data(), words_.size()); }
    bool any() const { return simd::active().any(words_.data(), words_.size()); }
    bool none() const { return !any(); }

    bool is_subset_of(const Bitset& other) const {
        return simd::active().subset(words_.data(), other.words_.data(), words_.size());
    }

    Bitset& operator&=(const Bitset& o) {
        simd::active().and_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        simd::active().or_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    /// this := this \ o
    Bitset& subtract(const Bitset& o) {
        simd::active().andnot_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    Bitset& flip() {
        simd::active().invert(words_.data(), words_.size());
        clear_tail();
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator~(Bitset a) { return a.flip(); }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.size_ == b.size_ && simd::active().equal(a.words_.data(), b.words_.data(), a.words_.size());
    }

    /// Indices of set bits in increasing order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int tz = __builtin_ctzll(bits);
                out.push_back(w * kWordBits + static_cast<std::size_t>(tz));
                bits &= bits - 1;
            }
        }
        return out;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

private:
    void clear_tail() {
        if (const std::size_t rem = size_ % kWordBits; rem != 0 && !words_.empty())
            words_.back() &= (Word{1} << rem) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace polymin
