#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fanfree {

// Fixed-width bit vector sized at construction.  Tail bits past size()
// are kept zero so count()/comparison can work word-wise.
class bitset {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bitset() = default;
    explicit bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // popcount(*this & other) without allocating
    std::size_t intersect_count(const bitset& other) const {
        assert(nbits_ == other.nbits_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bitset operator&(const bitset& other) const {
        assert(nbits_ == other.nbits_);
        bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & other.words_[i];
        return r;
    }
    bitset operator|(const bitset& other) const {
        assert(nbits_ == other.nbits_);
        bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] | other.words_[i];
        return r;
    }
    // set difference: bits of *this not in other
    bitset minus(const bitset& other) const {
        assert(nbits_ == other.nbits_);
        bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & ~other.words_[i];
        return r;
    }

    std::size_t find_first() const { return find_next_word(0, 0); }
    // first set bit strictly after i
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= nbits_) return npos;
        return find_next_word(i >> 6, i & 63);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    bool operator==(const bitset&) const = default;

  private:
    std::size_t find_next_word(std::size_t wi, std::size_t bit) const {
        if (wi >= words_.size()) return npos;
        std::uint64_t w = words_[wi] >> bit << bit;
        while (true) {
            if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace fanfree
