#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schreier/combinatorics.hpp"

namespace schreier {

/// A finite prefix (a_0, ..., a_{m-1}) of an integer sequence. Every operator
/// here maps a prefix of length m to a prefix of length m.
using Seq = std::vector<Int>;

/// (b, b + a_0, b + a_0 + a_1, ...), truncated to the input length.
Seq partial_sum_op(const Int& seed, std::span<const Int> a);

/// Applies partial_sum_op with seeds[0] first, then seeds[1], and so on.
/// An empty seed list returns a unchanged.
Seq iterated_seeded(std::span<const Int> seeds, std::span<const Int> a);

/// The k-fold zero-seeded iterate.
Seq k_partial_sum(std::span<const Int> a, std::size_t k);

/// (F_offset, F_{offset+1}, ..., F_{offset+length-1}).
Seq fibonacci_prefix(std::size_t length, std::size_t offset = 0);

/// sum_{j=0}^{l-1} C(j, l-1-j+k): the k-fold partial sum of (F_n) at l.
Count fib_partial_sum_closed(std::size_t k, std::size_t l);

}  // namespace schreier
