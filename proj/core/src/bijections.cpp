#include "schreier/bijections.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

void require_domain(bool ok, const char* map, const FiniteSet& set, const std::string& domain) {
    if (!ok) throw DomainError(std::string(map) + ": " + set.to_string() + " is not in " + domain);
}

std::string family(const char* name, int a, int b) {
    return std::string(name) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

struct Image {
    std::optional<FiniteSet> value;
    std::string error;
};

std::vector<Image> apply_all(const MapPart& part, unsigned threads) {
    std::vector<Image> images(part.domain.size());
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            try {
                images[i].value = part.apply(part.domain[i]);
            } catch (const DomainError& e) {
                images[i].error = e.what();
            }
        }
    };
    const std::size_t total = images.size();
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
    if (workers == 1) {
        run(0, total);
        return images;
    }
    const std::size_t step = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(total, w * step);
        pool.emplace_back(run, lo, std::min(total, lo + step));
    }
    for (auto& t : pool) t.join();
    return images;
}

bool contains_sorted(const std::vector<FiniteSet>& sorted, const FiniteSet& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

FiniteSet psi1(const FiniteSet& set, int n) {
    if (n < 2) throw ParameterError("psi1: n must be >= 2");
    require_domain(in_A(set, n - 1, n - 1), "psi1", set, family("A", n - 1, n - 1));
    return set.shifted(1).with(n + 1);
}

FiniteSet psi2(const FiniteSet& set, int n) {
    if (n < 2) throw ParameterError("psi2: n must be >= 2");
    require_domain(in_A(set, n, n), "psi2", set, family("A", n, n));
    const auto kind = classify(set);
    if (kind == SchreierKind::Empty || kind == SchreierKind::NonmaximalSchreier) return set;
    return set.without(n).with(n + 1);
}

FiniteSet psi_rec(const FiniteSet& set, int k, int n) {
    if (k < 2 || n <= std::max(k, 2)) throw ParameterError("psi_rec: need k >= 2 and n > max{k,2}");
    require_domain(in_A(set, k - 1, n - 2), "psi_rec", set, family("A", k - 1, n - 2));
    return set.shifted(1).with(n);
}

FiniteSet f_map(const FiniteSet& set) {
    if (set.empty()) throw DomainError("f: the empty set is not in any K_n");
    return set.shifted(1);
}

FiniteSet g_map(const FiniteSet& set, int n) {
    if (n < 3) throw ParameterError("g: n must be >= 3");
    require_domain(in_K(set, n - 1), "g", set, "K_" + std::to_string(n - 1));
    if (set.size() == 1) return FiniteSet{2, 3, n + 1};  // set = {n-1}
    const int low = set.min();
    if (low == 2) return FiniteSet{3, 5, n + 1};
    if (low == 3) return set.without(3).shifted(2).with(3);
    return set.shifted(2).with(static_cast<int>(set.size()) + 2);
}

BijectionReport certify_partition(std::string map_name, int n, std::vector<FiniteSet> codomain,
                                  const MapPart& first, const MapPart& second, unsigned threads) {
    std::sort(codomain.begin(), codomain.end());
    codomain.erase(std::unique(codomain.begin(), codomain.end()), codomain.end());

    BijectionReport report;
    report.map_name = std::move(map_name);
    report.n = n;
    report.first_domain_size = first.domain.size();
    report.second_domain_size = second.domain.size();
    report.codomain_size = codomain.size();

    auto note = [&](const FiniteSet& where, std::string what) {
        if (!report.first_violation) report.first_violation = Violation{where, std::move(what)};
    };

    const MapPart* parts[] = {&first, &second};
    std::vector<FiniteSet> sorted_domains[2];
    std::vector<Image> images[2];
    for (int p = 0; p < 2; ++p) {
        sorted_domains[p] = parts[p]->domain;
        std::sort(sorted_domains[p].begin(), sorted_domains[p].end());
        images[p] = apply_all(MapPart{parts[p]->name, sorted_domains[p], parts[p]->apply}, threads);
        for (std::size_t i = 0; i < sorted_domains[p].size(); ++i) {
            const Image& img = images[p][i];
            if (!img.value) {
                report.well_defined = false;
                note(sorted_domains[p][i], parts[p]->name + " rejected a domain member: " + img.error);
            } else if (!contains_sorted(codomain, *img.value)) {
                report.well_defined = false;
                note(sorted_domains[p][i], parts[p]->name + " sends it to " + img.value->to_string() +
                                               ", outside the codomain");
            }
        }
    }

    std::map<FiniteSet, FiniteSet> preimage[2];
    for (int p = 0; p < 2; ++p) {
        for (std::size_t i = 0; i < sorted_domains[p].size(); ++i) {
            const Image& img = images[p][i];
            if (!img.value) continue;
            auto [it, fresh] = preimage[p].emplace(*img.value, sorted_domains[p][i]);
            if (!fresh) {
                report.injective = false;
                note(sorted_domains[p][i], parts[p]->name + " also sends " + it->second.to_string() + " to " +
                                               img.value->to_string());
            }
        }
    }

    for (std::size_t i = 0; i < sorted_domains[1].size(); ++i) {
        const Image& img = images[1][i];
        if (!img.value) continue;
        if (auto it = preimage[0].find(*img.value); it != preimage[0].end()) {
            report.disjointness = false;
            note(sorted_domains[1][i], parts[1]->name + " and " + parts[0]->name + " (from " +
                                           it->second.to_string() + ") both reach " + img.value->to_string());
        }
    }

    for (const FiniteSet& target : codomain) {
        if (!preimage[0].contains(target) && !preimage[1].contains(target)) {
            report.surjective = false;
            note(target, "not reached by " + parts[0]->name + " or " + parts[1]->name);
        }
    }
    return report;
}

BijectionReport verify_partition(PartitionKind kind, int n, std::optional<int> k, const EnumOptions& options) {
    switch (kind) {
        case PartitionKind::diagonal: {
            if (n < 2) throw ParameterError("diagonal partition needs n >= 2");
            MapPart first{"psi1", enumerate_A(n - 1, n - 1, Strategy::naive, options),
                          [n](const FiniteSet& s) { return psi1(s, n); }};
            MapPart second{"psi2", enumerate_A(n, n, Strategy::naive, options),
                           [n](const FiniteSet& s) { return psi2(s, n); }};
            return certify_partition("psi1+psi2", n, enumerate_A(n + 1, n + 1, Strategy::naive, options), first,
                                     second, options.threads);
        }
        case PartitionKind::recurrence: {
            if (!k) throw ParameterError("recurrence partition needs k");
            const int kk = *k;
            if (kk < 2 || n <= std::max(kk, 2)) throw ParameterError("recurrence partition needs k >= 2 and n > max{k,2}");
            MapPart first{"inclusion", enumerate_A(kk, n - 1, Strategy::naive, options),
                          [](const FiniteSet& s) { return s; }};
            MapPart second{"psi", enumerate_A(kk - 1, n - 2, Strategy::naive, options),
                           [kk, n](const FiniteSet& s) { return psi_rec(s, kk, n); }};
            auto report = certify_partition("inclusion+psi", n, enumerate_A(kk, n, Strategy::naive, options), first,
                                            second, options.threads);
            report.k = kk;
            return report;
        }
        case PartitionKind::k_sets: {
            if (n < 3) throw ParameterError("K partition needs n >= 3");
            MapPart first{"f", enumerate_K(n, options), [](const FiniteSet& s) { return f_map(s); }};
            MapPart second{"g", enumerate_K(n - 1, options), [n](const FiniteSet& s) { return g_map(s, n); }};
            return certify_partition("f+g", n, enumerate_K(n + 1, options), first, second, options.threads);
        }
    }
    throw ParameterError("unknown partition kind");
}

}  // namespace schreier
