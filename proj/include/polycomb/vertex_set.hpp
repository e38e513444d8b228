/**
 * Fixed-capacity bitset of vertex (or point) indices. Facets, faces and
 * neighbourhoods are all VertexSets, so intersection and containment are a
 * couple of word operations.
 */
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycomb {

class VertexSet
{
    public:
        static constexpr std::size_t kWords    = 2;
        static constexpr std::size_t kCapacity = 64 * kWords;

        class iterator
        {
            public:
                using value_type        = std::size_t;
                using difference_type   = std::ptrdiff_t;
                using iterator_category = std::forward_iterator_tag;

                iterator() = default;
                iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) { advance(); }

                std::size_t operator*() const { return pos_; }
                iterator& operator++()
                {
                    ++pos_;
                    advance();
                    return *this;
                }
                iterator operator++(int)
                {
                    auto t = *this;
                    ++*this;
                    return t;
                }
                bool operator==(const iterator& o) const { return pos_ == o.pos_; }

            private:
                void advance()
                {
                    while (pos_ < kCapacity) {
                        const std::uint64_t w = set_->words_[pos_ / 64] >> (pos_ % 64);
                        if (w != 0) {
                            pos_ += static_cast<std::size_t>(std::countr_zero(w));
                            return;
                        }
                        pos_ = (pos_ / 64 + 1) * 64;
                    }
                    pos_ = kCapacity;
                }

                const VertexSet* set_ = nullptr;
                std::size_t      pos_ = kCapacity;
        };

        VertexSet() = default;
        VertexSet(std::initializer_list<std::size_t> elems)
        {
            for (auto i : elems)
                insert(i);
        }
        template <typename Range>
        static VertexSet from(const Range& elems)
        {
            VertexSet s;
            for (auto i : elems)
                s.insert(static_cast<std::size_t>(i));
            return s;
        }
        /// {0, ..., n-1}
        static VertexSet range(std::size_t n)
        {
            VertexSet s;
            for (std::size_t i = 0; i < n; ++i)
                s.insert(i);
            return s;
        }

        void insert(std::size_t i)
        {
            check(i);
            words_[i / 64] |= bit(i);
        }
        void erase(std::size_t i)
        {
            check(i);
            words_[i / 64] &= ~bit(i);
        }
        bool contains(std::size_t i) const { return i < kCapacity && (words_[i / 64] & bit(i)) != 0; }

        std::size_t size() const noexcept
        {
            std::size_t n = 0;
            for (auto w : words_)
                n += static_cast<std::size_t>(std::popcount(w));
            return n;
        }
        bool empty() const noexcept
        {
            for (auto w : words_)
                if (w)
                    return false;
            return true;
        }
        bool subset_of(const VertexSet& o) const noexcept
        {
            for (std::size_t k = 0; k < kWords; ++k)
                if (words_[k] & ~o.words_[k])
                    return false;
            return true;
        }
        bool intersects(const VertexSet& o) const noexcept { return !(*this & o).empty(); }

        std::size_t front() const { return *begin(); }

        iterator begin() const { return iterator(this, 0); }
        iterator end() const { return iterator(this, kCapacity); }

        std::vector<std::size_t> elements() const { return {begin(), end()}; }

        VertexSet& operator&=(const VertexSet& o) noexcept
        {
            for (std::size_t k = 0; k < kWords; ++k)
                words_[k] &= o.words_[k];
            return *this;
        }
        VertexSet& operator|=(const VertexSet& o) noexcept
        {
            for (std::size_t k = 0; k < kWords; ++k)
                words_[k] |= o.words_[k];
            return *this;
        }
        VertexSet& operator-=(const VertexSet& o) noexcept
        {
            for (std::size_t k = 0; k < kWords; ++k)
                words_[k] &= ~o.words_[k];
            return *this;
        }
        friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
        friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
        friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

        friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept = default;
        /// Total order: the set owning the smallest differing element sorts first.
        friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept
        {
            for (std::size_t k = 0; k < kWords; ++k) {
                if (a.words_[k] == b.words_[k])
                    continue;
                const std::uint64_t diff = a.words_[k] ^ b.words_[k];
                const std::uint64_t low  = diff & (~diff + 1);
                return (a.words_[k] & low) != 0;
            }
            return false;
        }

        std::size_t hash() const noexcept
        {
            std::size_t h = 0;
            for (auto w : words_)
                h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
            return h;
        }

        /// Relabels members through map (old index -> new index).
        VertexSet mapped(const std::vector<std::size_t>& map) const
        {
            VertexSet out;
            for (auto i : *this)
                out.insert(map.at(i));
            return out;
        }

    private:
        static std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i % 64); }
        static void check(std::size_t i)
        {
            if (i >= kCapacity)
                throw std::out_of_range("vertex index " + std::to_string(i) + " exceeds VertexSet capacity");
        }

        std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash
{
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
    os << '{';
    bool first = true;
    for (auto i : s) {
        os << (first ? "" : " ") << i;
        first = false;
    }
    return os << '}';
}

} // namespace polycomb
