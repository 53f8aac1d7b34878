#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation and the pattern operations on them.
 *
 * A Permutation of size n stores pi(1)..pi(n) as the values 1..n. Positions are
 * 0-based in the API (operator[]), values are 1-based, so p[0] == pi(1).
 *
 * Provided here:
 *   - parsing ("4 9 3 1", "4,9,3,1" or compact "4931" when n <= 9)
 *   - reverse-complement and centrosymmetry
 *   - pattern containment with a lexicographically least witness
 *   - direct and skew sums, sum decomposition into indecomposable blocks
 */

#include "centro/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace centro {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        const int n = static_cast<int>(values_.size());
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > n)
                throw FormatError("permutation entry " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
            if (seen[v]) throw FormatError("duplicate permutation entry " + std::to_string(v));
            seen[v] = true;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    // Skips validation; callers must pass a bijection onto 1..n.
    static Permutation from_unchecked(std::vector<int> values) {
        Permutation p;
        p.values_ = std::move(values);
        return p;
    }

    static Permutation identity(std::size_t n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return from_unchecked(std::move(v));
    }

    static Permutation decreasing(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
        return from_unchecked(std::move(v));
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    // Lexicographic on one-line notation; shorter permutations order first
    // only when one is a prefix of the other, so sort by size first when
    // mixing sizes.
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // Canonical output: space-separated integers.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    // Digit string when every entry is <= 9, otherwise the canonical form.
    std::string to_compact_string() const {
        if (values_.size() > 9) return to_string();
        std::string out;
        for (int v : values_) out += static_cast<char>('0' + v);
        return out;
    }

private:
    std::vector<int> values_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = p.size();
        for (int v : p) h = h * 1000003u ^ static_cast<std::size_t>(v);
        return h;
    }
};

// Relative order of a sequence of distinct integers, as a permutation.
inline Permutation standardize(std::span<const int> seq) {
    std::vector<int> order(seq.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> out(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r + 1);
    return Permutation::from_unchecked(std::move(out));
}

inline Permutation parse_permutation(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool separated = false;
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            separated = true;
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));

    // A single token with no separators is the compact digit form.
    if (!separated && tokens.size() == 1 && tokens[0].size() > 1) {
        std::string digits = tokens[0];
        tokens.clear();
        for (char ch : digits) tokens.emplace_back(1, ch);
    }

    const int n = static_cast<int>(tokens.size());
    std::vector<int> values;
    std::vector<bool> seen(tokens.size() + 1, false);
    for (const auto& tok : tokens) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw FormatError("invalid permutation token '" + tok + "'");
        if (tok.size() > 6) throw FormatError("permutation entry '" + tok + "' out of range");
        const int v = std::stoi(tok);
        if (v < 1 || v > n)
            throw FormatError("permutation entry '" + tok + "' out of range 1.." + std::to_string(n));
        if (seen[v]) throw FormatError("duplicate permutation entry '" + tok + "'");
        seen[v] = true;
        values.push_back(v);
    }
    return Permutation::from_unchecked(std::move(values));
}

// Half-turn rotation of the diagram: entry i becomes n+1-pi(n+1-i).
inline Permutation reverse_complement(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<int> out(p.size());
    for (int i = 0; i < n; ++i) out[i] = n + 1 - p[n - 1 - i];
    return Permutation::from_unchecked(std::move(out));
}

inline bool is_centrosymmetric(const Permutation& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] != static_cast<int>(n) + 1 - p[n - 1 - i]) return false;
    return true;
}

namespace detail {

// For each pattern index j, the earlier indices holding the next smaller and
// next larger pattern values (-1 when absent). An embedding only needs to
// respect these two neighbours to be order-isomorphic on the prefix.
struct PatternBounds {
    std::vector<int> lower;
    std::vector<int> upper;

    explicit PatternBounds(const Permutation& pattern)
        : lower(pattern.size(), -1), upper(pattern.size(), -1) {
        for (std::size_t j = 0; j < pattern.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (pattern[i] < pattern[j] && (lower[j] < 0 || pattern[i] > pattern[lower[j]]))
                    lower[j] = static_cast<int>(i);
                if (pattern[i] > pattern[j] && (upper[j] < 0 || pattern[i] < pattern[upper[j]]))
                    upper[j] = static_cast<int>(i);
            }
        }
    }
};

// Depth-first embedding search; pattern positions are assigned host indices
// in increasing order, so the first complete embedding is lexicographically
// least. When `anchors` is non-empty the embedding must use at least one of
// those host indices (sorted ascending).
inline bool embed(const Permutation& host, const Permutation& pattern, const PatternBounds& bounds,
                  std::span<const std::size_t> anchors, std::vector<std::size_t>& chosen) {
    const std::size_t n = host.size();
    const std::size_t k = pattern.size();
    const std::size_t max_anchor = anchors.empty() ? 0 : anchors.back();

    auto hits_anchor = [&](std::size_t idx) {
        return std::find(anchors.begin(), anchors.end(), idx) != anchors.end();
    };

    struct Frame {
        std::size_t next;
        bool hit;
    };
    std::vector<Frame> stack;
    stack.reserve(k + 1);
    chosen.assign(k, 0);
    stack.push_back({0, anchors.empty()});

    while (!stack.empty()) {
        const std::size_t j = stack.size() - 1;
        if (j == k) {
            if (stack.back().hit) return true;
            stack.pop_back();
            continue;
        }
        Frame& fr = stack.back();
        bool advanced = false;
        while (fr.next + (k - j) <= n) {
            const std::size_t idx = fr.next++;
            if (!fr.hit && idx > max_anchor) {
                fr.next = n;
                break;
            }
            const int v = host[idx];
            if (bounds.lower[j] >= 0 && v < host[chosen[bounds.lower[j]]]) continue;
            if (bounds.upper[j] >= 0 && v > host[chosen[bounds.upper[j]]]) continue;
            chosen[j] = idx;
            const bool hit = fr.hit || hits_anchor(idx);
            stack.push_back({idx + 1, hit});
            advanced = true;
            break;
        }
        if (!advanced) stack.pop_back();
    }
    return false;
}

}  // namespace detail

// Lexicographically least sequence of host positions (0-based) whose entries
// are order-isomorphic to the pattern, or nullopt.
inline std::optional<std::vector<std::size_t>> find_occurrence(const Permutation& host,
                                                               const Permutation& pattern) {
    if (pattern.size() > host.size()) return std::nullopt;
    std::vector<std::size_t> chosen;
    if (pattern.empty()) return chosen;
    detail::PatternBounds bounds(pattern);
    if (detail::embed(host, pattern, bounds, {}, chosen)) return chosen;
    return std::nullopt;
}

inline bool contains(const Permutation& host, const Permutation& pattern) {
    return find_occurrence(host, pattern).has_value();
}

// True when some occurrence of the pattern uses at least one anchor position.
inline bool contains_through(const Permutation& host, const Permutation& pattern,
                             std::span<const std::size_t> anchors) {
    if (pattern.size() > host.size()) return false;
    if (pattern.empty()) return anchors.empty();
    std::vector<std::size_t> chosen;
    detail::PatternBounds bounds(pattern);
    return detail::embed(host, pattern, bounds, anchors, chosen);
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> out(a.begin(), a.end());
    const int shift = static_cast<int>(a.size());
    for (int v : b) out.push_back(v + shift);
    return Permutation::from_unchecked(std::move(out));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    const int shift = static_cast<int>(b.size());
    for (int v : a) out.push_back(v + shift);
    for (int v : b) out.push_back(v);
    return Permutation::from_unchecked(std::move(out));
}

// Maximal decomposition into sum-indecomposable blocks. A block ends after
// position i exactly when the first i entries are {1..i}.
inline std::vector<Permutation> sum_decompose(const Permutation& p) {
    std::vector<Permutation> blocks;
    std::size_t start = 0;
    int running_max = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        running_max = std::max(running_max, p[i]);
        if (running_max == static_cast<int>(i + 1)) {
            std::vector<int> block;
            for (std::size_t t = start; t <= i; ++t) block.push_back(p[t] - static_cast<int>(start));
            blocks.push_back(Permutation::from_unchecked(std::move(block)));
            start = i + 1;
        }
    }
    return blocks;
}

inline bool is_sum_indecomposable(const Permutation& p) {
    if (p.empty()) throw DomainError("sum-indecomposability is undefined for the empty permutation");
    int running_max = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        running_max = std::max(running_max, p[i]);
        if (running_max == static_cast<int>(i + 1)) return false;
    }
    return true;
}

// Every permutation of size n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        out.push_back(Permutation::from_unchecked(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Permutation obtained by deleting the entry at position idx.
inline Permutation delete_position(const Permutation& p, std::size_t idx) {
    std::vector<int> out;
    out.reserve(p.size() - 1);
    const int removed = p[idx];
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == idx) continue;
        out.push_back(p[i] > removed ? p[i] - 1 : p[i]);
    }
    return Permutation::from_unchecked(std::move(out));
}

}  // namespace centro
