#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schreier/enumeration.hpp"
#include "schreier/finite_set.hpp"

namespace schreier {

// Constructive maps. Each one checks that its argument lies in the stated
// domain and throws DomainError otherwise.

/// (F + 1) u {n + 1}, from A_{n-1,n-1} into A_{n+1,n+1}. Requires n >= 2.
FiniteSet psi1(const FiniteSet& set, int n);

/// From A_{n,n} into A_{n+1,n+1}: the identity on nonmaximal Schreier sets
/// (including the empty set), otherwise n is replaced by n + 1.
FiniteSet psi2(const FiniteSet& set, int n);

/// (F + 1) u {n}, from A_{k-1,n-2} onto A_{k,n} \ A_{k,n-1}.
/// Requires k >= 2 and n > max{k, 2}.
FiniteSet psi_rec(const FiniteSet& set, int k, int n);

/// F + 1 on nonempty sets; sends K_n into K_{n+1}.
FiniteSet f_map(const FiniteSet& set);

/// From K_{n-1} onto K_{n+1} \ f(K_n). Requires n >= 3.
///   F = {n-1}:              {2, 3, n+1}
///   |F| > 1, min F = 2:     {3, 5, n+1}
///   |F| > 1, min F = 3:     ((F \ {3}) + 2) u {3}
///   |F| > 1, min F >= 4:    (F + 2) u {|F| + 2}
FiniteSet g_map(const FiniteSet& set, int n);

struct Violation {
    FiniteSet set;
    std::string description;
};

/// Outcome of checking that a codomain is the disjoint union of the images of
/// two injective maps.
struct BijectionReport {
    std::string map_name;
    int n = 0;
    std::optional<int> k;
    bool well_defined = true;  // every image exists and lies in the codomain
    bool injective = true;     // each map separately
    bool disjointness = true;  // the two images do not meet
    bool surjective = true;    // the images cover the codomain
    std::optional<Violation> first_violation;
    std::size_t first_domain_size = 0;
    std::size_t second_domain_size = 0;
    std::size_t codomain_size = 0;

    bool passed() const { return well_defined && injective && disjointness && surjective; }
};

struct MapPart {
    std::string name;
    std::vector<FiniteSet> domain;
    std::function<FiniteSet(const FiniteSet&)> apply;
};

/// Checks codomain = first(domain) disjoint-union second(domain). Images may be
/// computed on several threads; the reported violation is always the first one
/// in canonical order (well-definedness, then injectivity, disjointness and
/// coverage).
BijectionReport certify_partition(std::string map_name, int n, std::vector<FiniteSet> codomain,
                                  const MapPart& first, const MapPart& second, unsigned threads = 1);

enum class PartitionKind {
    diagonal,    // A_{n+1,n+1} = psi1(A_{n-1,n-1}) u psi2(A_{n,n}),        n >= 2
    recurrence,  // A_{k,n} = A_{k,n-1} u psi_rec(A_{k-1,n-2}),            n > max{k,2}
    k_sets,      // K_{n+1} = f(K_n) u g(K_{n-1}),                            n >= 3
};

/// Domains and codomain come from the enumeration oracle. k is required for
/// PartitionKind::recurrence and ignored otherwise.
BijectionReport verify_partition(PartitionKind kind, int n, std::optional<int> k = std::nullopt,
                                 const EnumOptions& options = {});

}  // namespace schreier
