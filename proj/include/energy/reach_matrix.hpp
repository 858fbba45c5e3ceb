#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "energy/graph.hpp"

namespace energy {

/// Square boolean relation over vertices, bit-packed by rows.
///
/// Diagonal entries follow the module-wide convention: (u,u) is set only for
/// a witness walk with at least one edge.
class ReachMatrix {
public:
    ReachMatrix() = default;
    explicit ReachMatrix(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(Vertex u, Vertex v) const noexcept
    {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    void set(Vertex u, Vertex v, bool value = true) noexcept
    {
        auto& word = bits_[u * words_ + v / 64];
        const std::uint64_t mask = std::uint64_t{1} << (v % 64);
        word = value ? (word | mask) : (word & ~mask);
    }

    std::span<std::uint64_t> row(Vertex u) noexcept { return {bits_.data() + u * words_, words_}; }
    std::span<const std::uint64_t> row(Vertex u) const noexcept
    {
        return {bits_.data() + u * words_, words_};
    }

    std::size_t count() const noexcept;

    friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace energy
