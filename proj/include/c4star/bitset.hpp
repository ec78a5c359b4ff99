#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace c4star {

/**
 * Fixed-size bitset whose width is chosen at run time. Used for incidence
 * rows of a projective plane and for graph adjacency.
 */
class DynamicBitset
{
public:
    DynamicBitset() = default;

    explicit DynamicBitset(std::size_t bits) :
        bits_(bits), words_((bits + 63) / 64, 0)
    {
    }

    auto size() const -> std::size_t { return bits_; }

    auto set(std::size_t i) -> void { words_[i / 64] |= word_bit(i); }
    auto reset(std::size_t i) -> void { words_[i / 64] &= ~word_bit(i); }
    auto flip(std::size_t i) -> void { words_[i / 64] ^= word_bit(i); }
    auto test(std::size_t i) const -> bool { return (words_[i / 64] & word_bit(i)) != 0; }

    auto count() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto any() const -> bool
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    /// popcount of (*this & other) without materialising the intersection.
    auto intersection_count(const DynamicBitset & other) const -> std::size_t
    {
        std::size_t total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        return total;
    }

    auto intersect_with(const DynamicBitset & other) -> void
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= other.words_[w];
    }

    /// Calls f(i) for every set bit, in increasing order.
    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word) {
                auto bit = static_cast<std::size_t>(std::countr_zero(word));
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    auto operator==(const DynamicBitset &) const -> bool = default;

private:
    static auto word_bit(std::size_t i) -> std::uint64_t { return std::uint64_t{1} << (i % 64); }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace c4star
