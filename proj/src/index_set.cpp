#include "fock/index_set.hpp"

#include <cmath>
#include <limits>

namespace fock {

namespace {

constexpr std::uint64_t kExhausted = ~0ull;

// Next mask with the same popcount (Gosper). Caller checks the n-bit limit.
std::uint64_t next_same_popcount(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return r | (((x ^ r) >> 2) / c);
}

}  // namespace

double log_weight(IndexSet sigma) {
    double acc = 0.0;
    for (std::uint64_t m = sigma.bits(); m != 0; m &= m - 1)
        acc += std::log(static_cast<double>(std::countr_zero(m) + 1));
    return acc;
}

SubsetRange::SubsetRange(int n, int max_card) : n_(n), max_card_(max_card) {
    if (n < 0 || n > 63) throw std::invalid_argument("enumerate_subsets: n must be in [0,63]");
    if (max_card_ < 0 || max_card_ > n) max_card_ = n;
}

SubsetRange::iterator::iterator(int n, int max_card)
    : n_(n), max_card_(max_card), counting_(max_card >= n) {
    limit_ = 1ull << n;
    if (counting_) {
        current_ = 0;
        done_ = false;
        return;
    }
    // One ascending Gosper stream per cardinality; the merge of sorted streams
    // yields ascending bitmask order without scanning skipped masks.
    heads_.fill(kExhausted);
    for (int c = 0; c <= max_card_; ++c)
        heads_[static_cast<std::size_t>(c)] = (c == 0) ? 0 : (1ull << c) - 1;
    select_min();
}

void SubsetRange::iterator::select_min() {
    std::uint64_t best = kExhausted;
    for (int c = 0; c <= max_card_; ++c)
        best = std::min(best, heads_[static_cast<std::size_t>(c)]);
    if (best == kExhausted) {
        done_ = true;
    } else {
        current_ = best;
    }
}

SubsetRange::iterator& SubsetRange::iterator::operator++() {
    if (done_) return *this;
    if (counting_) {
        ++current_;
        if (current_ >= limit_) done_ = true;
        return *this;
    }
    const int c = std::popcount(current_);
    if (c == 0) {
        heads_[0] = kExhausted;
    } else {
        std::uint64_t next = next_same_popcount(current_);
        heads_[static_cast<std::size_t>(c)] = (next < limit_) ? next : kExhausted;
    }
    select_min();
    return *this;
}

std::uint64_t SubsetRange::count() const {
    std::uint64_t total = 0;
    for (int c = 0; c <= max_card_; ++c) {
        unsigned __int128 binom = 1;
        for (int i = 1; i <= c; ++i)
            binom = binom * static_cast<unsigned>(n_ - c + i) / static_cast<unsigned>(i);
        total += static_cast<std::uint64_t>(binom);
    }
    return total;
}

}  // namespace fock
