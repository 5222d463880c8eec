#include "schreier/finite_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

void require_positive(int value, const char* what) {
    if (value < 1) {
        throw ParameterError(std::string(what) + " must be >= 1, got " + std::to_string(value));
    }
}

}  // namespace

FiniteSet::FiniteSet(std::vector<int> elements, bool validate) : elements_(std::move(elements)) {
    if (!validate) return;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1) {
            throw ParameterError("set elements must be >= 1, got " + std::to_string(elements_[i]));
        }
        if (i > 0 && elements_[i - 1] >= elements_[i]) {
            throw ParameterError("set elements must be strictly increasing");
        }
    }
}

FiniteSet::FiniteSet(std::initializer_list<int> elements)
    : FiniteSet(std::vector<int>(elements), true) {}

FiniteSet FiniteSet::from_sorted(std::vector<int> elements) {
    return FiniteSet(std::move(elements), true);
}

FiniteSet FiniteSet::from_unsorted(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return FiniteSet(std::move(elements), true);
}

FiniteSet FiniteSet::from_mask(std::uint64_t mask) {
    std::vector<int> elements;
    elements.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
        if (mask & 1u) elements.push_back(bit + 1);
    }
    return FiniteSet(std::move(elements), false);
}

FiniteSet FiniteSet::parse(std::string_view text) {
    auto fail = [&] { return ParameterError("malformed set literal: '" + std::string(text) + "'"); };
    auto skip_space = [&](std::size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    std::size_t i = 0;
    skip_space(i);
    if (i >= text.size() || text[i] != '{') throw fail();
    ++i;
    skip_space(i);

    std::vector<int> elements;
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        while (true) {
            skip_space(i);
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{}) throw fail();
            elements.push_back(value);
            i = static_cast<std::size_t>(ptr - text.data());
            skip_space(i);
            if (i >= text.size()) throw fail();
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == '}') {
                ++i;
                break;
            }
            throw fail();
        }
    }
    skip_space(i);
    if (i != text.size()) throw fail();
    return from_sorted(std::move(elements));
}

int FiniteSet::min() const {
    if (elements_.empty()) throw std::logic_error("min of the empty set");
    return elements_.front();
}

int FiniteSet::max() const {
    if (elements_.empty()) throw std::logic_error("max of the empty set");
    return elements_.back();
}

bool FiniteSet::contains(int x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

FiniteSet FiniteSet::shifted(int delta) const {
    std::vector<int> out(elements_);
    for (int& x : out) {
        x += delta;
        if (x < 1) throw DomainError("shifting " + to_string() + " leaves the positive integers");
    }
    return FiniteSet(std::move(out), false);
}

FiniteSet FiniteSet::with(int x) const {
    require_positive(x, "set element");
    std::vector<int> out(elements_);
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it == out.end() || *it != x) out.insert(it, x);
    return FiniteSet(std::move(out), false);
}

FiniteSet FiniteSet::without(int x) const {
    std::vector<int> out(elements_);
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it != out.end() && *it == x) out.erase(it);
    return FiniteSet(std::move(out), false);
}

std::string FiniteSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(elements_[i]);
    }
    out += '}';
    return out;
}

std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
}

std::ostream& operator<<(std::ostream& os, const FiniteSet& set) { return os << set.to_string(); }

std::size_t omega(const FiniteSet& set, const FiniteSet& excluded) {
    return static_cast<std::size_t>(std::count_if(set.elements().begin(), set.elements().end(),
                                                   [&](int x) { return !excluded.contains(x); }));
}

std::string_view to_string(SchreierKind kind) {
    switch (kind) {
        case SchreierKind::Empty: return "Empty";
        case SchreierKind::NonSchreier: return "NonSchreier";
        case SchreierKind::NonmaximalSchreier: return "NonmaximalSchreier";
        case SchreierKind::MaximalSchreier: return "MaximalSchreier";
    }
    return "?";
}

SchreierKind classify(const FiniteSet& set) {
    if (set.empty()) return SchreierKind::Empty;
    const auto min = static_cast<std::size_t>(set.min());
    if (min < set.size()) return SchreierKind::NonSchreier;
    if (min > set.size()) return SchreierKind::NonmaximalSchreier;
    return SchreierKind::MaximalSchreier;
}

bool in_S_k(const FiniteSet& set, int k) {
    require_positive(k, "k");
    if (set.empty()) return true;
    const std::size_t weight = set.size() - (set.contains(k) ? 1 : 0);
    return static_cast<std::size_t>(set.min()) > weight;
}

bool in_A(const FiniteSet& set, int k, int n) {
    require_positive(k, "k");
    require_positive(n, "n");
    if (set.empty()) return true;
    return in_S_k(set, k) && set.max() <= n;
}

bool in_K(const FiniteSet& set, int n) {
    require_positive(n, "n");
    if (set.empty() || set.max() != n || set.size() == 2) return false;
    return static_cast<std::size_t>(set.min()) > omega(set, FiniteSet{2, 3});
}

bool in_mpq(const FiniteSet& set, int p, int q, int n) {
    require_positive(p, "p");
    require_positive(q, "q");
    require_positive(n, "n");
    if (set.empty() || set.max() != n) return false;
    return static_cast<std::int64_t>(q) * set.min() >=
           static_cast<std::int64_t>(p) * static_cast<std::int64_t>(set.size());
}

}  // namespace schreier
