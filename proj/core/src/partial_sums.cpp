#include "schreier/partial_sums.hpp"

namespace schreier {

Seq partial_sum_op(const Int& seed, std::span<const Int> a) {
    Seq out;
    out.reserve(a.size());
    Int running = seed;
    for (const Int& term : a) {
        out.push_back(running);
        running += term;
    }
    return out;
}

Seq iterated_seeded(std::span<const Int> seeds, std::span<const Int> a) {
    Seq current(a.begin(), a.end());
    for (const Int& seed : seeds) current = partial_sum_op(seed, current);
    return current;
}

Seq k_partial_sum(std::span<const Int> a, std::size_t k) {
    const Seq zeros(k, Int(0));
    return iterated_seeded(zeros, a);
}

Seq fibonacci_prefix(std::size_t length, std::size_t offset) {
    Seq out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(fib(offset + i));
    return out;
}

Count fib_partial_sum_closed(std::size_t k, std::size_t l) {
    Count sum = 0;
    const auto lk = static_cast<std::int64_t>(k);
    const auto ll = static_cast<std::int64_t>(l);
    for (std::int64_t j = 0; j <= ll - 1; ++j) sum += binom(j, ll - 1 - j + lk);
    return sum;
}

}  // namespace schreier
