#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace scc {

using Vertex = std::uint32_t;

/// Immutable set of vertices over a fixed universe [0, universe()).
/// Updates return fresh values; the word array is shared until changed.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet empty_set(std::uint32_t universe) { return VertexSet(universe, 0, nullptr); }

    static VertexSet full_set(std::uint32_t universe) {
        if (universe == 0)
            return empty_set(0);
        auto words = std::make_shared<std::vector<std::uint64_t>>(word_count(universe), ~0ull);
        std::uint32_t rem = universe % 64;
        if (rem != 0)
            words->back() = (1ull << rem) - 1;
        return VertexSet(universe, universe, std::move(words));
    }

    static VertexSet of(std::span<const Vertex> members, std::uint32_t universe) {
        VertexSet s = empty_set(universe);
        if (members.empty())
            return s;
        auto words = std::make_shared<std::vector<std::uint64_t>>(word_count(universe), 0);
        std::uint32_t n = 0;
        for (Vertex v : members) {
            s.check_range(v);
            std::uint64_t& w = (*words)[v >> 6];
            std::uint64_t bit = 1ull << (v & 63);
            if (!(w & bit)) {
                w |= bit;
                ++n;
            }
        }
        return VertexSet(universe, n, std::move(words));
    }

    [[nodiscard]] std::uint32_t universe() const { return universe_; }
    [[nodiscard]] std::uint32_t size() const { return count_; }
    [[nodiscard]] bool empty() const { return count_ == 0; }

    [[nodiscard]] bool contains(Vertex v) const {
        if (v >= universe_ || !words_)
            return false;
        return ((*words_)[v >> 6] >> (v & 63)) & 1;
    }

    [[nodiscard]] VertexSet with(Vertex v) const {
        check_range(v);
        if (contains(v))
            return *this;
        auto words = clone_words();
        (*words)[v >> 6] |= 1ull << (v & 63);
        return VertexSet(universe_, count_ + 1, std::move(words));
    }

    [[nodiscard]] VertexSet without(Vertex v) const {
        check_range(v);
        if (!contains(v))
            return *this;
        auto words = clone_words();
        (*words)[v >> 6] &= ~(1ull << (v & 63));
        return VertexSet(universe_, count_ - 1, std::move(words));
    }

    [[nodiscard]] bool subset_of(const VertexSet& other) const {
        check_universe(other);
        if (count_ > other.count_)
            return false;
        if (!words_)
            return true;
        for (std::size_t i = 0; i < words_->size(); ++i) {
            std::uint64_t w = (*words_)[i];
            std::uint64_t o = other.words_ ? (*other.words_)[i] : 0;
            if (w & ~o)
                return false;
        }
        return true;
    }

    [[nodiscard]] bool intersects(const VertexSet& other) const {
        check_universe(other);
        if (!words_ || !other.words_)
            return false;
        for (std::size_t i = 0; i < words_->size(); ++i)
            if ((*words_)[i] & (*other.words_)[i])
                return true;
        return false;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        if (a.universe_ != b.universe_ || a.count_ != b.count_)
            return false;
        if (a.words_ == b.words_)
            return true;
        for (std::size_t i = 0; i < word_count(a.universe_); ++i) {
            std::uint64_t wa = a.words_ ? (*a.words_)[i] : 0;
            std::uint64_t wb = b.words_ ? (*b.words_)[i] : 0;
            if (wa != wb)
                return false;
        }
        return true;
    }

    /// Smallest member. Pre: !empty().
    [[nodiscard]] Vertex first() const {
        for (std::size_t i = 0; i < words_->size(); ++i)
            if ((*words_)[i])
                return static_cast<Vertex>(i * 64 + std::countr_zero((*words_)[i]));
        throw std::logic_error("VertexSet::first on empty set");
    }

    /// Visits members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        if (!words_)
            return;
        for (std::size_t i = 0; i < words_->size(); ++i) {
            std::uint64_t w = (*words_)[i];
            while (w) {
                std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(w));
                f(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count_);
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

private:
    VertexSet(std::uint32_t universe, std::uint32_t count,
              std::shared_ptr<const std::vector<std::uint64_t>> words)
        : universe_(universe), count_(count), words_(std::move(words)) {}

    static std::size_t word_count(std::uint32_t universe) { return (universe + 63) / 64; }

    void check_range(Vertex v) const {
        if (v >= universe_)
            throw std::out_of_range("vertex outside set universe");
    }

    void check_universe(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw std::logic_error("VertexSet universe mismatch");
    }

    std::shared_ptr<std::vector<std::uint64_t>> clone_words() const {
        if (words_)
            return std::make_shared<std::vector<std::uint64_t>>(*words_);
        return std::make_shared<std::vector<std::uint64_t>>(word_count(universe_), 0);
    }

    std::uint32_t universe_ = 0;
    std::uint32_t count_ = 0;
    std::shared_ptr<const std::vector<std::uint64_t>> words_;
};

} // namespace scc
