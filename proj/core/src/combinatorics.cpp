#include "schreier/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

class FibonacciCache {
public:
    Count get(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size()) return values_[n];
        }
        std::unique_lock lock(mutex_);
        extend_to(n);
        return values_[n];
    }

    void overwrite(std::size_t n, const Count& value) {
        std::unique_lock lock(mutex_);
        extend_to(n);
        values_[n] = value;
    }

    void reset() {
        std::unique_lock lock(mutex_);
        values_ = {0, 1};
    }

private:
    // Caller holds the unique lock.
    void extend_to(std::size_t n) {
        values_.reserve(n + 1);
        while (values_.size() <= n) {
            const std::size_t i = values_.size();
            values_.push_back(values_[i - 1] + values_[i - 2]);
        }
    }

    std::shared_mutex mutex_;
    std::vector<Count> values_{0, 1};
};

FibonacciCache& fib_cache() {
    static FibonacciCache cache;
    return cache;
}

}  // namespace

Count to_count(const Int& value) {
    if (value < 0) {
        throw std::logic_error("negative value where a count was expected: " + value.str());
    }
    return value;
}

Count fib(std::size_t n) { return fib_cache().get(n); }

Count binom(std::int64_t n, std::int64_t k) {
    if (n < 0) throw ParameterError("binom: n must be non-negative, got " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Count fib_binom_convolution(std::int64_t k, std::int64_t l) {
    if (l < 0 || k < l) {
        throw ParameterError("fib_binom_convolution: need k >= l >= 0, got k=" + std::to_string(k) +
                             ", l=" + std::to_string(l));
    }
    Count sum = 0;
    Count coefficient = 1;  // C(l, i), advanced along the row
    for (std::int64_t i = 0; i <= l; ++i) {
        sum += coefficient * fib(static_cast<std::size_t>(k - i));
        coefficient *= l - i;
        coefficient /= i + 1;
    }
    return sum;
}

namespace testing {

void corrupt_fib_cache(std::size_t n, const Count& value) { fib_cache().overwrite(n, value); }

void reset_fib_cache() { fib_cache().reset(); }

}  // namespace testing

}  // namespace schreier
