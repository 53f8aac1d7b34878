#pragma once

/**
 * @file enumerate.hpp
 * @brief Pruned exhaustive generation of C_n and of the centrosymmetric C^rc_m.
 *
 * C_n is built from C_{n-1} by inserting the new maximum n at every position
 * and keeping the members. Every size-n member arises exactly once (delete its
 * maximum), and a down-set never loses a member this way.
 *
 * C^rc_{m+2} is built from C^rc_m by inserting a mirrored pair of entries at
 * the two central positions (flanking the fixed centre when m is odd). The
 * pair (x, m+3-x) at positions (i, m+1-i) is exactly the outermost-first
 * assignment of the backtracking encoder read from the inside out: the
 * partial centrosymmetric pattern is tested for membership at every level, so
 * a pruned branch never reappears.
 */

#include "centro/class_spec.hpp"
#include "centro/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace centro {

struct EnumOptions {
    unsigned jobs = 1;
};

namespace detail {

// Applies `extend` to every parent, concurrently in contiguous chunks, and
// returns the children sorted lexicographically.
inline std::vector<Permutation> extend_level(
    const std::vector<Permutation>& parents,
    const std::function<void(const Permutation&, std::vector<Permutation>&)>& extend, unsigned jobs) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, parents.size() / 64 + 1));
    std::vector<std::vector<Permutation>> chunks(workers);
    auto run = [&](std::size_t w) {
        const std::size_t lo = parents.size() * w / workers, hi = parents.size() * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) extend(parents[i], chunks[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    std::vector<Permutation> out;
    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    out.reserve(total);
    for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end());
    return out;
}

// Inserts values lo < hi into q at the given sorted positions of the result.
inline Permutation insert_pair(const Permutation& q, std::size_t pos_a, int val_a, std::size_t pos_b, int val_b) {
    const int lo = std::min(val_a, val_b), hi = std::max(val_a, val_b);
    std::vector<int> out;
    out.reserve(q.size() + 2);
    std::size_t src = 0;
    for (std::size_t i = 0; i < q.size() + 2; ++i) {
        if (i == pos_a) {
            out.push_back(val_a);
        } else if (i == pos_b) {
            out.push_back(val_b);
        } else {
            int v = q[src++];
            if (v >= lo) ++v;
            if (v >= hi) ++v;
            out.push_back(v);
        }
    }
    return Permutation::from_unchecked(std::move(out));
}

}  // namespace detail

// Caches C_n and C^rc_m level by level. Thread-safe; returned references
// stay valid for the lifetime of the enumerator.
class ClassEnumerator {
public:
    explicit ClassEnumerator(ClassSpec spec, EnumOptions opts = {}) : spec_(std::move(spec)), opts_(opts) {}

    const ClassSpec& spec() const noexcept { return spec_; }

    // C_n in lexicographic order.
    const std::vector<Permutation>& level(std::size_t n) const {
        std::lock_guard lock(mutex_);
        if (const GeomClass* g = geom_of(spec_)) return g->members(n);
        while (levels_.size() <= n) levels_.push_back(next_level());
        return levels_[n];
    }

    // C^rc_m in lexicographic order.
    const std::vector<Permutation>& centro_level(std::size_t m) const {
        std::lock_guard lock(mutex_);
        auto& chain = centro_[m % 2];
        if (const GeomClass* g = geom_of(spec_)) {
            while (chain.size() <= m / 2) {
                const auto& all = g->members(2 * chain.size() + m % 2);
                std::vector<Permutation> keep;
                std::copy_if(all.begin(), all.end(), std::back_inserter(keep), is_centrosymmetric);
                chain.push_back(std::move(keep));
            }
            return chain[m / 2];
        }
        while (chain.size() <= m / 2) chain.push_back(next_centro_level(m % 2, chain));
        return chain[m / 2];
    }

private:
    std::vector<Permutation> next_level() const {
        const std::size_t n = levels_.size();
        if (n == 0) {
            Permutation eps;
            return member(spec_, eps) ? std::vector<Permutation>{eps} : std::vector<Permutation>{};
        }
        return detail::extend_level(
            levels_[n - 1],
            [&](const Permutation& q, std::vector<Permutation>& out) {
                std::vector<int> vals(q.begin(), q.end());
                for (std::size_t k = 0; k <= q.size(); ++k) {
                    std::vector<int> child = vals;
                    child.insert(child.begin() + static_cast<std::ptrdiff_t>(k), static_cast<int>(n));
                    Permutation p = Permutation::from_unchecked(std::move(child));
                    const std::size_t added[] = {k};
                    if (member_given_parent(spec_, p, added)) out.push_back(std::move(p));
                }
            },
            opts_.jobs);
    }

    std::vector<Permutation> next_centro_level(std::size_t parity,
                                               const std::deque<std::vector<Permutation>>& chain) const {
        if (chain.empty()) {
            const Permutation base = parity == 0 ? Permutation{} : Permutation::identity(1);
            return member(spec_, base) ? std::vector<Permutation>{base} : std::vector<Permutation>{};
        }
        const std::size_t old_size = 2 * (chain.size() - 1) + parity;
        const std::size_t new_size = old_size + 2;
        const std::size_t t = old_size / 2;
        // Even: new entries at t, t+1. Odd: flanking the centre at t, t+2.
        const std::size_t pos_a = t, pos_b = parity == 0 ? t + 1 : t + 2;
        const int centre = static_cast<int>(new_size / 2) + 1;
        return detail::extend_level(
            chain.back(),
            [&](const Permutation& q, std::vector<Permutation>& out) {
                for (int x = 1; x <= static_cast<int>(new_size); ++x) {
                    if (parity == 1 && x == centre) continue;
                    const int y = static_cast<int>(new_size) + 1 - x;
                    Permutation p = detail::insert_pair(q, pos_a, x, pos_b, y);
                    const std::size_t added[] = {pos_a, pos_b};
                    if (member_given_parent(spec_, p, added)) out.push_back(std::move(p));
                }
            },
            opts_.jobs);
    }

    ClassSpec spec_;
    EnumOptions opts_;
    mutable std::mutex mutex_;
    // Deques keep earlier levels in place while later ones are appended.
    mutable std::deque<std::vector<Permutation>> levels_;
    mutable std::deque<std::vector<Permutation>> centro_[2];
};

inline std::vector<Permutation> enumerate_class(const ClassSpec& spec, std::size_t n, EnumOptions opts = {}) {
    return ClassEnumerator(spec, opts).level(n);
}

inline std::vector<Permutation> enumerate_centrosymmetric(const ClassSpec& spec, std::size_t m,
                                                          EnumOptions opts = {}) {
    return ClassEnumerator(spec, opts).centro_level(m);
}

// Per-size counts. a and c run over sizes 0..2*max_n so that the bound
// b_n <= a_{2n} can be checked; the centrosymmetric sequences run over
// n = 0..max_n (sizes 2n and 2n+1).
struct CountTable {
    std::size_t max_n = 0;
    std::vector<std::uint64_t> a;       // |C_n|
    std::vector<std::uint64_t> b_even;  // |C^rc_{2n}|
    std::vector<std::uint64_t> b_odd;   // |C^rc_{2n+1}|
    std::vector<std::uint64_t> c;       // |ind(C)_n|, c[0] = 0
    std::vector<std::uint64_t> d;       // |centrosymmetric ind(C)_{2n}|, d[0] = 0
};

inline CountTable count_table(const ClassEnumerator& en, std::size_t max_n) {
    CountTable t;
    t.max_n = max_n;
    for (std::size_t n = 0; n <= 2 * max_n; ++n) {
        const auto& lv = en.level(n);
        t.a.push_back(lv.size());
        t.c.push_back(n == 0 ? 0 : static_cast<std::uint64_t>(std::count_if(lv.begin(), lv.end(), is_sum_indecomposable)));
    }
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto& even = en.centro_level(2 * n);
        t.b_even.push_back(even.size());
        t.b_odd.push_back(en.centro_level(2 * n + 1).size());
        t.d.push_back(n == 0 ? 0 : static_cast<std::uint64_t>(std::count_if(even.begin(), even.end(), is_sum_indecomposable)));
    }
    return t;
}

inline CountTable count_table(const ClassSpec& spec, std::size_t max_n, EnumOptions opts = {}) {
    return count_table(ClassEnumerator(spec, opts), max_n);
}

// First n violating b_n <= a_{2n} or b_n <= 2^n a_n, if any.
inline std::optional<std::size_t> bound_violation(const CountTable& t) {
    for (std::size_t n = 0; n <= t.max_n; ++n) {
        if (t.b_even[n] > t.a[2 * n]) return n;
        if (n < 64 && t.b_even[n] > (std::uint64_t{1} << n) * t.a[n]) return n;
    }
    return std::nullopt;
}

struct AgreementReport {
    bool agree = true;
    std::size_t checked_to = 0;
    std::optional<std::size_t> size;          // first disagreeing size
    std::optional<Permutation> witness;       // least element of the symmetric difference there
    bool witness_in_first = false;            // witness lies in the first class (only)
};

inline AgreementReport classes_agree(const ClassSpec& first, const ClassSpec& second, std::size_t max_n,
                                     EnumOptions opts = {}) {
    ClassEnumerator ea(first, opts), eb(second, opts);
    AgreementReport rep;
    rep.checked_to = max_n;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto& la = ea.level(n);
        const auto& lb = eb.level(n);
        if (la == lb) continue;
        std::vector<Permutation> only_a, only_b;
        std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(only_a));
        std::set_difference(lb.begin(), lb.end(), la.begin(), la.end(), std::back_inserter(only_b));
        rep.agree = false;
        rep.size = n;
        if (!only_a.empty() && (only_b.empty() || only_a.front() < only_b.front())) {
            rep.witness = only_a.front();
            rep.witness_in_first = true;
        } else {
            rep.witness = only_b.front();
        }
        rep.checked_to = n;
        break;
    }
    return rep;
}

}  // namespace centro
