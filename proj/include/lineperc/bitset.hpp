#ifndef LINEPERC_BITSET_HPP
#define LINEPERC_BITSET_HPP

#include <cstdint>
#include <vector>
#include <cassert>

namespace lineperc {

// Dense bitset over indices 0..size-1. Used for both point sets and line
// sets of a plane; all set algebra is word-parallel over 64-bit words.
class IndexSet {
public:
    static constexpr int npos = -1;

    IndexSet() = default;
    explicit IndexSet(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static IndexSet full(int nbits) {
        IndexSet s(nbits);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    IndexSet& operator|=(const IndexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // set difference
    IndexSet& operator-=(const IndexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { a |= b; return a; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { a &= b; return a; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { a -= b; return a; }

    bool operator==(const IndexSet& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    bool is_subset_of(const IndexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const IndexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersect_count(const IndexSet& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    // Compare the restrictions of two sets to indices < limit.
    bool equal_below(const IndexSet& o, int limit) const {
        int full_words = limit >> 6;
        for (int i = 0; i < full_words; ++i)
            if (w_[i] != o.w_[i]) return false;
        int rem = limit & 63;
        if (rem) {
            uint64_t mask = (uint64_t{1} << rem) - 1;
            if ((w_[full_words] & mask) != (o.w_[full_words] & mask)) return false;
        }
        return true;
    }

    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return npos;
    }

    int next(int i) const {
        ++i;
        if (i >= nbits_) return npos;
        size_t wi = size_t(i) >> 6;
        uint64_t w = w_[wi] >> (i & 63);
        if (w) return i + __builtin_ctzll(w);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return int(wi * 64) + __builtin_ctzll(w_[wi]);
        return npos;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for (int i = first(); i != npos; i = next(i)) v.push_back(i);
        return v;
    }

    static IndexSet from_indices(int nbits, const std::vector<int>& idx) {
        IndexSet s(nbits);
        for (int i : idx) {
            assert(i >= 0 && i < nbits);
            s.set(i);
        }
        return s;
    }

    // strict weak order so sets can be sorted / deduplicated
    bool operator<(const IndexSet& o) const { return w_ < o.w_; }

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

using PointSet = IndexSet;
using LineSet = IndexSet;

} // namespace lineperc

#endif
