#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

/// A finite set of positive integers, stored as a strictly increasing list.
///
/// Sets compare in canonical enumeration order: ascending cardinality, then
/// lexicographic on the element list. The empty set is the least element.
/// The canonical text form is "{}" or "{a,b,c}" with no spaces.
class FiniteSet {
public:
    FiniteSet() = default;

    /// Elements must be strictly increasing and >= 1.
    FiniteSet(std::initializer_list<int> elements);

    /// Elements must be strictly increasing and >= 1.
    static FiniteSet from_sorted(std::vector<int> elements);

    /// Sorts and deduplicates; every element must be >= 1.
    static FiniteSet from_unsorted(std::vector<int> elements);

    /// Bit i of the mask stands for the element i + 1.
    static FiniteSet from_mask(std::uint64_t mask);

    /// Parses the canonical text form. Whitespace around tokens is tolerated.
    static FiniteSet parse(std::string_view text);

    std::span<const int> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    // min and max throw std::logic_error on the empty set.
    int min() const;
    int max() const;

    bool contains(int x) const noexcept;

    /// Every element moved by delta; throws DomainError if an element would
    /// drop below 1.
    FiniteSet shifted(int delta) const;
    FiniteSet with(int x) const;
    FiniteSet without(int x) const;

    std::string to_string() const;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
    friend std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) noexcept;

private:
    explicit FiniteSet(std::vector<int> elements, bool validate);

    std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const FiniteSet& set);

/// |E \ excluded|. excluded = {k} gives the weight that ignores k, {2,3}
/// ignores both 2 and 3, and the empty set gives the plain cardinality.
std::size_t omega(const FiniteSet& set, const FiniteSet& excluded);

enum class SchreierKind {
    Empty,
    NonSchreier,         // min E < |E|
    NonmaximalSchreier,  // min E > |E|
    MaximalSchreier,     // min E = |E|
};

std::string_view to_string(SchreierKind kind);

SchreierKind classify(const FiniteSet& set);

/// E is empty or min E > |E \ {k}|. Throws ParameterError for k < 1.
bool in_S_k(const FiniteSet& set, int k);

/// E is empty, or E satisfies in_S_k and max E <= n.
bool in_A(const FiniteSet& set, int k, int n);

/// E is nonempty, max E = n, min E > |E \ {2,3}| and |E| != 2.
bool in_K(const FiniteSet& set, int n);

/// E is nonempty, max E = n and q * min E >= p * |E|.
bool in_mpq(const FiniteSet& set, int p, int q, int n);

}  // namespace schreier
