#pragma once

#include <cstdint>
#include <vector>

namespace sgps {

/// Subset of the elements {0, ..., n-1} of a finite ring, stored as a
/// bitmask. Comparison is lexicographic on the sorted element lists so that
/// ideal listings are reproducible ({0,2,4} sorts before {0,3}).
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static ElemSet single(int universe, int e) {
        ElemSet s(universe);
        s.set(e);
        return s;
    }
    static ElemSet full(int universe) {
        ElemSet s(universe);
        for (int e = 0; e < universe; ++e) s.set(e);
        return s;
    }

    int universe() const { return n_; }
    bool test(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    void set(int e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void reset(int e) { bits_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    int count() const {
        int c = 0;
        for (auto b : bits_) c += __builtin_popcountll(b);
        return c;
    }
    bool empty() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }

    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    /// True when this set contains every element of `o`.
    bool contains(const ElemSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (o.bits_[i] & ~bits_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int e = 0; e < n_; ++e)
            if (test(e)) v.push_back(e);
        return v;
    }

    /// Orders sets by their sorted element lists.
    bool operator<(const ElemSet& o) const {
        int a = first_from(0), b = o.first_from(0);
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = first_from(a + 1);
            b = o.first_from(b + 1);
        }
        return b >= 0;  // proper prefix sorts first
    }

private:
    int first_from(int e) const {
        for (; e < n_; ++e)
            if (test(e)) return e;
        return -1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace sgps
