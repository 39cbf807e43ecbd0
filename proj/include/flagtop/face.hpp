#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagtop {

/// Vertex ids are contiguous 0..n-1 within a complex.
using Vertex = std::uint32_t;

/// Hard limit of the bitset representation.
inline constexpr std::size_t kMaxVertices = 64;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A set of vertex ids stored as a 64-bit mask.
///
/// Ordering is lexicographic on the ascending vertex lists, so {0,1} < {0,3} < {1}
/// and a proper prefix sorts first ({0} < {0,1}). Equality is set equality.
class Face {
public:
    constexpr Face() = default;

    Face(std::initializer_list<Vertex> vertices) : Face(from_vertices(vertices)) {}

    static constexpr Face from_mask(std::uint64_t mask) noexcept
    {
        Face f;
        f.mask_ = mask;
        return f;
    }

    /// Duplicate ids and ids >= 64 are rejected.
    static Face from_vertices(std::span<const Vertex> vertices)
    {
        std::uint64_t m = 0;
        for (Vertex v : vertices) {
            if (v >= kMaxVertices)
                throw Error("vertex id " + std::to_string(v) + " exceeds the 64-vertex limit");
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (m & bit)
                throw Error("duplicate vertex " + std::to_string(v) + " in face");
            m |= bit;
        }
        return from_mask(m);
    }
    static Face from_vertices(std::initializer_list<Vertex> vertices)
    {
        return from_vertices(std::span<const Vertex>(vertices.begin(), vertices.size()));
    }

    /// {0, 1, ..., count-1}
    static constexpr Face prefix(std::size_t count) noexcept
    {
        return from_mask(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr int dim() const noexcept { return size() - 1; }
    constexpr bool empty() const noexcept { return mask_ == 0; }

    constexpr bool contains(Vertex v) const noexcept
    {
        return v < kMaxVertices && ((mask_ >> v) & 1U);
    }
    constexpr bool is_subset_of(Face other) const noexcept
    {
        return (mask_ & ~other.mask_) == 0;
    }
    constexpr bool intersects(Face other) const noexcept { return (mask_ & other.mask_) != 0; }

    /// Smallest vertex; undefined for the empty face.
    constexpr Vertex front() const noexcept { return static_cast<Vertex>(std::countr_zero(mask_)); }
    /// Largest vertex; undefined for the empty face.
    constexpr Vertex back() const noexcept
    {
        return static_cast<Vertex>(63 - std::countl_zero(mask_));
    }

    constexpr Face with(Vertex v) const noexcept { return from_mask(mask_ | (std::uint64_t{1} << v)); }
    constexpr Face without(Vertex v) const noexcept
    {
        return from_mask(mask_ & ~(std::uint64_t{1} << v));
    }

    friend constexpr Face operator|(Face a, Face b) noexcept { return from_mask(a.mask_ | b.mask_); }
    friend constexpr Face operator&(Face a, Face b) noexcept { return from_mask(a.mask_ & b.mask_); }
    /// Set difference.
    friend constexpr Face operator-(Face a, Face b) noexcept { return from_mask(a.mask_ & ~b.mask_); }

    template <class Fn>
    constexpr void for_each_vertex(Fn&& fn) const
    {
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            fn(static_cast<Vertex>(std::countr_zero(m)));
    }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each_vertex([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Calls fn on every subset of this face, the empty face and the face itself included.
    template <class Fn>
    constexpr void for_each_subset(Fn&& fn) const
    {
        std::uint64_t sub = mask_;
        while (true) {
            fn(from_mask(sub));
            if (sub == 0)
                break;
            sub = (sub - 1) & mask_;
        }
    }

    friend constexpr bool operator==(Face a, Face b) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(Face a, Face b) noexcept
    {
        const std::uint64_t diff = a.mask_ ^ b.mask_;
        if (diff == 0)
            return std::strong_ordering::equal;
        const int e = std::countr_zero(diff);
        // The lists agree below e. The side holding e continues with e; the other side
        // continues with something larger, or ends (and is then a prefix).
        const bool a_has = (a.mask_ >> e) & 1U;
        const std::uint64_t other = a_has ? b.mask_ : a.mask_;
        const bool other_ended = e == 63 || (other >> (e + 1)) == 0;
        if (a_has)
            return other_ended ? std::strong_ordering::greater : std::strong_ordering::less;
        return other_ended ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for_each_vertex([&](Vertex v) {
            if (!first)
                s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    std::uint64_t mask_ = 0;
};

/// Total order by cardinality, then lexicographically.
struct BySizeThenLex {
    constexpr bool operator()(Face a, Face b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

} // namespace flagtop
