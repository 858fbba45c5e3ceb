#include "energy/reach_matrix.hpp"

#include <bit>

namespace energy {

ReachMatrix::ReachMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

std::size_t ReachMatrix::count() const noexcept
{
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

}  // namespace energy
