#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace pglab {

// Fixed-size bitset sized at runtime. Graph adjacency rows and subgroup
// membership masks both live on this, so the word layout is kept simple:
// little-endian within a uint64_t, words packed low to high.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // First set bit at position >= from, or -1.
    int next(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int bit = (wi << 6) + std::countr_zero(w);
                return bit < nbits_ ? bit : -1;
            }
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator-=(const DynBitset& o) {  // set difference
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const DynBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    static DynBitset from_vector(int nbits, const std::vector<int>& xs) {
        DynBitset b(nbits);
        for (int x : xs) b.set(x);
        return b;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    struct Hash {
        size_t operator()(const DynBitset& b) const {
            uint64_t h = 1469598103934665603ull;
            for (auto w : b.words()) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<size_t>(h);
        }
    };

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace pglab
