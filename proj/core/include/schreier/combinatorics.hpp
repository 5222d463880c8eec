#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

/// Exact signed integer of unbounded width.
using Int = boost::multiprecision::cpp_int;

/// Exact cardinality. Shares the representation of Int; every function
/// returning a Count guarantees a non-negative value.
using Count = boost::multiprecision::cpp_int;

/// Converts a signed intermediate into a Count, throwing std::logic_error
/// if it is negative.
Count to_count(const Int& value);

/// F_n with F_0 = 0, F_1 = 1. Values are cached in a process-wide table
/// that is safe for concurrent readers and writers.
Count fib(std::size_t n);

/// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.
Count binom(std::int64_t n, std::int64_t k);

/// sum_{i=0}^{l} C(l, i) F_{k-i}, evaluated term by term. Requires k >= l.
Count fib_binom_convolution(std::int64_t k, std::int64_t l);

namespace testing {

/// Overwrites one cached Fibonacci value. Exists so that the failure paths of
/// the verification suites can be exercised; never call it in production.
void corrupt_fib_cache(std::size_t n, const Count& value);

/// Drops every cached Fibonacci value, including corrupted ones.
void reset_fib_cache();

}  // namespace testing

}  // namespace schreier
