#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppbase {

// Fixed-width bitset sized at run time; element sets over a GroupTable.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : w_((n + 63) / 64, 0), n_(n) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    void or_with(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }
    void and_with(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }

    bool operator==(const Bitset& o) const = default;

    // Orders sets by their ascending element sequence: the set containing the
    // smaller first-differing element comes first.
    static bool canon_less(const Bitset& a, const Bitset& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            std::uint64_t d = a.w_[k] ^ b.w_[k];
            if (d) return a.w_[k] & (d & -d);
        }
        return false;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(k * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> w_;
    std::size_t n_ = 0;
};

}  // namespace ppbase
