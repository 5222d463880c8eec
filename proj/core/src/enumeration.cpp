#include "schreier/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

using Mask = std::uint64_t;

void require_positive(int value, const char* what) {
    if (value < 1) {
        throw ParameterError(std::string(what) + " must be >= 1, got " + std::to_string(value));
    }
}

void require_within(int n, int cap, const char* what) {
    const int limit = std::min(cap, kMaskMaxN);
    if (n > limit) {
        throw SizeLimitError(std::string(what) + ": n=" + std::to_string(n) +
                             " exceeds the enumeration limit of " + std::to_string(limit));
    }
}

unsigned worker_count(unsigned requested, Mask work) {
    const unsigned threads = std::max(1u, requested);
    return static_cast<unsigned>(std::min<Mask>(threads, std::max<Mask>(work, 1)));
}

// Splits [begin, end) into contiguous chunks, one per worker, and runs
// body(chunk_index, lo, hi). Chunk order is the mask order.
template <class Body>
void for_each_chunk(Mask begin, Mask end, unsigned workers, Body body) {
    const Mask total = end - begin;
    const Mask step = (total + workers - 1) / workers;
    if (workers == 1) {
        body(0u, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const Mask lo = std::min(end, begin + step * w);
        const Mask hi = std::min(end, lo + step);
        pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

template <class Pred>
std::vector<FiniteSet> collect(Mask begin, Mask end, unsigned threads, Pred member) {
    const unsigned workers = worker_count(threads, end - begin);
    std::vector<std::vector<Mask>> parts(workers);
    for_each_chunk(begin, end, workers, [&](unsigned w, Mask lo, Mask hi) {
        for (Mask m = lo; m < hi; ++m) {
            if (member(m)) parts[w].push_back(m);
        }
    });
    std::vector<FiniteSet> out;
    for (const auto& part : parts) {
        for (Mask m : part) out.push_back(FiniteSet::from_mask(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Pred>
Count tally(Mask begin, Mask end, unsigned threads, Pred member) {
    const unsigned workers = worker_count(threads, end - begin);
    std::vector<std::uint64_t> parts(workers, 0);
    for_each_chunk(begin, end, workers, [&](unsigned w, Mask lo, Mask hi) {
        std::uint64_t local = 0;
        for (Mask m = lo; m < hi; ++m) local += member(m) ? 1 : 0;
        parts[w] = local;
    });
    Count total = 0;
    for (auto p : parts) total += p;
    return total;
}

Mask bit_of(int element) { return Mask{1} << (element - 1); }

// Mask-level transcription of "E empty, or min E > |E \ {k}|".
struct InA {
    Mask k_bit;
    bool operator()(Mask m) const {
        if (m == 0) return true;
        const int min = std::countr_zero(m) + 1;
        const int weight = std::popcount(m) - ((m & k_bit) ? 1 : 0);
        return min > weight;
    }
};

struct InK {
    bool operator()(Mask m) const {
        const int size = std::popcount(m);
        if (size == 2) return false;
        const int min = std::countr_zero(m) + 1;
        const int weight = std::popcount(m & ~(bit_of(2) | bit_of(3)));
        return min > weight;
    }
};

struct InMpq {
    std::int64_t p;
    std::int64_t q;
    bool operator()(Mask m) const {
        const std::int64_t min = std::countr_zero(m) + 1;
        return q * min >= p * std::popcount(m);
    }
};

// Sum_{j=0}^{bound} C(pool, j).
Count bounded_subsets(int pool, int bound) {
    Count total = 0;
    for (int j = 0; j <= std::min(bound, pool); ++j) total += binom(pool, j);
    return total;
}

Count count_A_by_min(int k, int n) {
    Count total = 1;  // the empty set
    for (int m = 1; m <= n; ++m) {
        // Elements above the minimum whose membership changes the bound on |E|:
        // k (it carries no weight) and n (split for symmetry with the proofs).
        std::vector<int> marked;
        if (k > m && k <= n) marked.push_back(k);
        if (n > m && n != k) marked.push_back(n);
        const int free_pool = (n - m) - static_cast<int>(marked.size());
        const int min_is_k = (k == m) ? 1 : 0;

        for (unsigned choice = 0; choice < (1u << marked.size()); ++choice) {
            int chosen = 0;
            int discount = min_is_k;
            for (std::size_t i = 0; i < marked.size(); ++i) {
                if (choice & (1u << i)) {
                    ++chosen;
                    if (marked[i] == k) discount = 1;
                }
            }
            // |E| = 1 + chosen + j must satisfy |E| - discount < m.
            const int bound = m - 2 - chosen + discount;
            if (bound >= 0) total += bounded_subsets(free_pool, bound);
        }
    }
    return total;
}

// Members of A_{k,n} with minimum m: {m} plus at most m-1 larger elements.
void generate_with_min(int k, int n, int m, std::vector<FiniteSet>& out) {
    std::vector<int> current{m};
    const auto admits = [&] {
        const int weight = static_cast<int>(current.size()) -
                           (std::find(current.begin(), current.end(), k) != current.end() ? 1 : 0);
        return m > weight;
    };
    const std::size_t cap = static_cast<std::size_t>(m);  // |E| <= m
    auto dfs = [&](auto&& self, int next) -> void {
        if (admits()) out.push_back(FiniteSet::from_sorted(current));
        if (current.size() >= cap) return;
        for (int x = next; x <= n; ++x) {
            current.push_back(x);
            self(self, x + 1);
            current.pop_back();
        }
    };
    dfs(dfs, m + 1);
}

std::vector<FiniteSet> enumerate_A_structured(int k, int n, unsigned threads) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<std::vector<FiniteSet>> parts(workers);
    auto work = [&](unsigned w) {
        for (int m = 1 + static_cast<int>(w); m <= n; m += static_cast<int>(workers)) {
            generate_with_min(k, n, m, parts[w]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<FiniteSet> out{FiniteSet{}};
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

EnumOptions EnumOptions::from_environment() {
    EnumOptions options;
    if (const char* raw = std::getenv("SCHREIER_MAX_ORACLE_N")) {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (end == raw || *end != '\0' || value < 1) {
            throw ParameterError(std::string("SCHREIER_MAX_ORACLE_N must be a positive integer, got '") + raw + "'");
        }
        const int cap = static_cast<int>(std::min<long>(value, kMaskMaxN));
        options.naive_max_n = std::max(options.naive_max_n, cap);
        options.structured_max_n = std::max(options.structured_max_n, cap);
    }
    return options;
}

std::vector<FiniteSet> enumerate_A(int k, int n, Strategy strategy, const EnumOptions& options) {
    require_positive(k, "k");
    require_positive(n, "n");
    if (strategy == Strategy::by_min) {
        require_within(n, options.structured_max_n, "enumerate_A(by_min)");
        return enumerate_A_structured(k, n, options.threads);
    }
    require_within(n, options.naive_max_n, "enumerate_A");
    return collect(0, Mask{1} << n, options.threads, InA{k <= n ? bit_of(k) : 0});
}

Count count_A(int k, int n, Strategy strategy, const EnumOptions& options) {
    require_positive(k, "k");
    require_positive(n, "n");
    if (strategy == Strategy::by_min) {
        if (n > kByMinCountMaxN) {
            throw SizeLimitError("count_A(by_min): n=" + std::to_string(n) + " exceeds the limit of " +
                                 std::to_string(kByMinCountMaxN));
        }
        return count_A_by_min(k, n);
    }
    require_within(n, options.naive_max_n, "count_A");
    return tally(0, Mask{1} << n, options.threads, InA{k <= n ? bit_of(k) : 0});
}

std::vector<FiniteSet> enumerate_K(int n, const EnumOptions& options) {
    require_positive(n, "n");
    require_within(n, options.naive_max_n, "enumerate_K");
    // Every member has max n: scan exactly the masks whose top bit is n.
    return collect(bit_of(n), bit_of(n) << 1, options.threads, InK{});
}

std::vector<FiniteSet> enumerate_mpq(int p, int q, int n, const EnumOptions& options) {
    require_positive(p, "p");
    require_positive(q, "q");
    require_positive(n, "n");
    require_within(n, options.naive_max_n, "enumerate_mpq");
    return collect(bit_of(n), bit_of(n) << 1, options.threads, InMpq{p, q});
}

Count count_mpq(int p, int q, int n, const EnumOptions& options) {
    require_positive(p, "p");
    require_positive(q, "q");
    require_positive(n, "n");
    require_within(n, options.naive_max_n, "count_mpq");
    return tally(bit_of(n), bit_of(n) << 1, options.threads, InMpq{p, q});
}

}  // namespace schreier
