#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scc/vertex_set.hpp"

namespace scc {

/// Visit mark of a vertex: not yet visited, a serial number, or infinity
/// (assigned once the vertex's component has been emitted). This replaces
/// the -1 / "infty" integer sentinels of the usual presentations.
///
/// Order is total on visited marks: serial(a) < serial(b) iff a < b, and
/// every serial is below infinity. Unvisited takes part in equality only;
/// ordering against it is a logic error.
class NumMark {
public:
    constexpr NumMark() : raw_(kUnvisited) {}

    static constexpr NumMark unvisited() { return NumMark(kUnvisited); }
    static constexpr NumMark infinity() { return NumMark(kInfinity); }
    static constexpr NumMark serial(std::uint32_t k) {
        if (k >= kInfinity)
            throw std::out_of_range("serial number too large");
        return NumMark(k);
    }

    [[nodiscard]] constexpr bool is_unvisited() const { return raw_ == kUnvisited; }
    [[nodiscard]] constexpr bool is_infinity() const { return raw_ == kInfinity; }
    [[nodiscard]] constexpr bool is_serial() const { return raw_ < kInfinity; }

    /// Pre: is_serial().
    [[nodiscard]] constexpr std::uint32_t serial_value() const {
        if (!is_serial())
            throw std::logic_error("NumMark has no serial value");
        return raw_;
    }

    friend constexpr bool operator==(NumMark a, NumMark b) = default;

    /// "-" unvisited, decimal serials, "inf".
    [[nodiscard]] std::string to_string() const {
        if (is_unvisited())
            return "-";
        if (is_infinity())
            return "inf";
        return std::to_string(raw_);
    }

    static NumMark from_string(const std::string& s);

    friend bool num_lt(NumMark a, NumMark b);
    friend bool num_le(NumMark a, NumMark b);

private:
    constexpr explicit NumMark(std::uint32_t raw) : raw_(raw) {}

    static constexpr std::uint32_t kInfinity = 0xFFFFFFFEu;
    static constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;

    std::uint32_t raw_;
};

inline bool num_lt(NumMark a, NumMark b) {
    if (a.is_unvisited() || b.is_unvisited())
        throw std::logic_error("NumMark order undefined for unvisited marks");
    return a.raw_ < b.raw_;
}

inline bool num_le(NumMark a, NumMark b) { return !num_lt(b, a); }

/// Min of two visited marks; infinity is the identity.
inline NumMark num_min(NumMark a, NumMark b) { return num_lt(a, b) ? a : b; }

/// Ordering helper for invariant evaluation: false instead of throwing when
/// either side is unvisited, so clause checks stay total on broken states.
inline bool visited_le(NumMark a, NumMark b) {
    if (a.is_unvisited() || b.is_unvisited())
        return false;
    return num_le(a, b);
}

inline NumMark NumMark::from_string(const std::string& s) {
    if (s == "-")
        return unvisited();
    if (s == "inf")
        return infinity();
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("bad mark: " + s);
    return serial(static_cast<std::uint32_t>(v));
}

/// Immutable total map Vertex -> NumMark. Updates copy only the touched
/// chunk plus the chunk spine, so threading it through the functional
/// search stays cheap at 10^5 vertices.
class NumMap {
    static constexpr std::uint32_t kChunkSize = 1024;
    using Chunk = std::array<NumMark, kChunkSize>;

public:
    NumMap() = default;

    explicit NumMap(std::uint32_t n)
        : size_(n), chunks_((n + kChunkSize - 1) / kChunkSize) {}

    [[nodiscard]] std::uint32_t size() const { return size_; }

    [[nodiscard]] NumMark at(Vertex v) const {
        check_range(v);
        const auto& chunk = chunks_[v / kChunkSize];
        return chunk ? (*chunk)[v % kChunkSize] : NumMark::unvisited();
    }

    [[nodiscard]] NumMap with(Vertex v, NumMark m) const {
        check_range(v);
        NumMap out = *this;
        out.mutable_chunk(v / kChunkSize)[v % kChunkSize] = m;
        return out;
    }

    [[nodiscard]] NumMap with_all_infinity(std::span<const Vertex> vs) const {
        NumMap out = *this;
        std::vector<char> owned(chunks_.size(), 0);
        for (Vertex v : vs) {
            check_range(v);
            std::size_t c = v / kChunkSize;
            if (!owned[c]) {
                out.mutable_chunk(c);
                owned[c] = 1;
            }
            const_cast<Chunk&>(*out.chunks_[c])[v % kChunkSize] = NumMark::infinity();
        }
        return out;
    }

    friend bool operator==(const NumMap& a, const NumMap& b) {
        if (a.size_ != b.size_)
            return false;
        for (std::size_t c = 0; c < a.chunks_.size(); ++c) {
            if (a.chunks_[c] == b.chunks_[c])
                continue;
            for (std::uint32_t i = 0; i < kChunkSize; ++i) {
                std::uint32_t v = static_cast<std::uint32_t>(c) * kChunkSize + i;
                if (v >= a.size_)
                    break;
                NumMark ma = a.chunks_[c] ? (*a.chunks_[c])[i] : NumMark::unvisited();
                NumMark mb = b.chunks_[c] ? (*b.chunks_[c])[i] : NumMark::unvisited();
                if (ma != mb)
                    return false;
            }
        }
        return true;
    }

private:
    void check_range(Vertex v) const {
        if (v >= size_)
            throw std::out_of_range("vertex outside num map");
    }

    Chunk& mutable_chunk(std::size_t c) {
        auto fresh = chunks_[c] ? std::make_shared<Chunk>(*chunks_[c]) : std::make_shared<Chunk>();
        Chunk& ref = *fresh;
        chunks_[c] = std::move(fresh);
        return ref;
    }

    std::uint32_t size_ = 0;
    std::vector<std::shared_ptr<const Chunk>> chunks_;
};

} // namespace scc
