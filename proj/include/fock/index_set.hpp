#pragma once

/// Finite subsets of {0,...,63} as 64-bit masks, the weight function
/// lambda_sigma = prod_{k in sigma} (k+1), and ordered subset enumeration.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace fock {

/// A finite subset of {0,...,63}. Bit k set <=> k is an element.
/// Comparison order is plain bitmask order.
class IndexSet {
public:
    static constexpr int max_index = 63;

    constexpr IndexSet() = default;

    static constexpr IndexSet from_bits(std::uint64_t bits) { return IndexSet(bits); }

    static IndexSet from_elements(std::initializer_list<int> elems) {
        IndexSet s;
        for (int k : elems) s = s.with(k);
        return s;
    }

    static IndexSet from_elements(const std::vector<int>& elems) {
        IndexSet s;
        for (int k : elems) s = s.with(k);
        return s;
    }

    /// {0,...,n-1}; n in [0,64].
    static constexpr IndexSet ground_set(int n) {
        if (n < 0 || n > 64) throw std::invalid_argument("IndexSet: ground set size out of range");
        return IndexSet(n == 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int cardinality() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int k) const {
        return k >= 0 && k <= max_index && (bits_ >> k) & 1u;
    }

    IndexSet with(int k) const {
        if (k < 0 || k > max_index) throw std::invalid_argument("IndexSet: index out of range");
        return IndexSet(bits_ | (1ull << k));
    }

    constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint_from(IndexSet o) const { return (bits_ & o.bits_) == 0; }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
    /// Set difference a \ b.
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

    /// Elements in ascending order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

private:
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// lambda_sigma = prod_{k in sigma} (k+1), lambda_empty = 1.
/// Exact while the integer product fits in 64 bits; correctly-rounded double beyond.
inline double weight(IndexSet sigma) {
    std::uint64_t acc = 1;
    for (std::uint64_t m = sigma.bits(); m != 0; m &= m - 1) {
        const std::uint64_t factor = static_cast<std::uint64_t>(std::countr_zero(m)) + 1;
        if (__builtin_mul_overflow(acc, factor, &acc)) {
            double w = 1.0;
            for (std::uint64_t mm = sigma.bits(); mm != 0; mm &= mm - 1)
                w *= static_cast<double>(std::countr_zero(mm) + 1);
            return w;
        }
    }
    return static_cast<double>(acc);
}

/// log(lambda_sigma), exact to rounding; useful when lambda^p would overflow.
double log_weight(IndexSet sigma);

/// Ordered stream of every sigma subset of {0,...,n-1} with cardinality <= max_card,
/// ascending bitmask order, each exactly once. max_card < 0 means unbounded.
class SubsetRange {
public:
    SubsetRange(int n, int max_card = -1);

    class iterator {
    public:
        using value_type = IndexSet;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        IndexSet operator*() const { return IndexSet::from_bits(current_); }
        iterator& operator++();
        iterator operator++(int) { iterator t = *this; ++(*this); return t; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class SubsetRange;
        iterator() : done_(true) {}
        iterator(int n, int max_card);
        void select_min();

        int n_ = 0;
        int max_card_ = 0;
        bool counting_ = false;   // fast path: no cardinality bound, plain increment
        bool done_ = false;
        std::uint64_t current_ = 0;
        std::uint64_t limit_ = 0;                 // 2^n (or full-mask end marker when n = 63)
        std::array<std::uint64_t, 65> heads_{};   // per-cardinality Gosper streams; ~0 = exhausted
    };

    iterator begin() const { return iterator(n_, max_card_); }
    iterator end() const { return iterator(); }

    /// Number of subsets the range yields: sum_{c<=max_card} C(n, c).
    std::uint64_t count() const;

    int truncation_level() const { return n_; }

private:
    int n_;
    int max_card_;
};

inline SubsetRange enumerate_subsets(int n, int max_card = -1) { return SubsetRange(n, max_card); }

}  // namespace fock
