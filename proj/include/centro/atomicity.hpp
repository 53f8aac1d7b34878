#pragma once

/**
 * @file atomicity.hpp
 * @brief Bounded witness searches for rc-atomicity and for generation of a
 *        class by its centrosymmetric members.
 *
 * Every report is a statement "up to a bound". A witness that is found is
 * always re-checked with the membership and containment oracles before it is
 * returned.
 */

#include "centro/class_spec.hpp"
#include "centro/enumerate.hpp"
#include "centro/error.hpp"
#include "centro/grid.hpp"
#include "centro/permutation.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace centro {

enum class WitnessMethod { none, sum_construction, doubling, search };

inline const char* to_string(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::sum_construction: return "sum-construction";
        case WitnessMethod::doubling: return "doubling";
        case WitnessMethod::search: return "search";
        default: return "none";
    }
}

struct WitnessReport {
    Permutation sigma;
    std::optional<Permutation> witness;  // empty: none up to `bound`
    std::size_t bound = 0;
    std::size_t searched_from = 0;  // sizes actually scanned by search (empty range if from > to)
    std::size_t searched_to = 0;
    WitnessMethod method = WitnessMethod::none;

    bool found() const noexcept { return witness.has_value(); }
};

namespace detail {

inline void require_rc_invariant(const ClassSpec& spec) {
    if (!syntactically_rc_invariant(spec))
        throw DomainError("class " + spec.to_string() + " is not recognisably rc-invariant");
}

inline bool sum_closed_rc_invariant(const ClassSpec& spec) {
    return syntactically_sum_closed(spec) && syntactically_rc_invariant(spec);
}

// Runs `job(i)` for i in [0, count) over up to `jobs` threads.
template <class Job>
void fan_out(std::size_t count, unsigned jobs, Job job) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) job(i);
        });
}

inline std::vector<Permutation> members_up_to(const ClassEnumerator& en, std::size_t max_size) {
    std::vector<Permutation> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
        const auto& lv = en.level(n);
        out.insert(out.end(), lv.begin(), lv.end());
    }
    return out;
}

}  // namespace detail

// A member of the class containing both sigma and rc(sigma), sizes |sigma|..max_n.
inline WitnessReport rc_witness(const ClassEnumerator& en, const Permutation& sigma, std::size_t max_n) {
    const ClassSpec& spec = en.spec();
    if (!member(spec, sigma)) throw DomainError(sigma.to_string() + " is not in " + spec.to_string());
    const Permutation rc_sigma = reverse_complement(sigma);
    WitnessReport rep{sigma, std::nullopt, max_n, sigma.size(), sigma.size(), WitnessMethod::none};
    auto verified = [&](const Permutation& pi) {
        return member(spec, pi) && contains(pi, sigma) && contains(pi, rc_sigma);
    };

    if (detail::sum_closed_rc_invariant(spec) && 2 * sigma.size() <= max_n) {
        Permutation rho = direct_sum(sigma, rc_sigma);
        if (!verified(rho)) throw std::logic_error("sum construction failed verification for " + sigma.to_string());
        rep.witness = std::move(rho);
        rep.method = WitnessMethod::sum_construction;
        return rep;
    }
    for (std::size_t n = sigma.size(); n <= max_n; ++n) {
        rep.searched_to = n;
        for (const auto& pi : en.level(n)) {
            if (contains(pi, sigma) && contains(pi, rc_sigma)) {
                if (!verified(pi)) throw std::logic_error("witness failed verification");
                rep.witness = pi;
                rep.method = WitnessMethod::search;
                return rep;
            }
        }
    }
    return rep;
}

inline WitnessReport rc_witness(const ClassSpec& spec, const Permutation& sigma, std::size_t max_n,
                                EnumOptions opts = {}) {
    return rc_witness(ClassEnumerator(spec, opts), sigma, max_n);
}

struct BoundedSearchReport {
    std::size_t max_sigma = 0;
    std::size_t bound = 0;
    std::vector<WitnessReport> results;  // in (size, lex) order of sigma
    std::vector<Permutation> failures;

    bool all_found() const noexcept { return failures.empty(); }
    std::string summary() const {
        if (failures.empty())
            return "witness found for every sigma of size <= " + std::to_string(max_sigma) + " (searched up to size " +
                   std::to_string(bound) + ")";
        return std::to_string(failures.size()) + " sigma without a witness up to size " + std::to_string(bound) +
               "; this is evidence only up to that bound";
    }
};

namespace detail {

inline BoundedSearchReport collect(std::size_t max_sigma, std::size_t bound, std::vector<WitnessReport> results) {
    BoundedSearchReport rep;
    rep.max_sigma = max_sigma;
    rep.bound = bound;
    for (const auto& r : results)
        if (!r.found()) rep.failures.push_back(r.sigma);
    rep.results = std::move(results);
    return rep;
}

}  // namespace detail

inline BoundedSearchReport is_rc_atomic_up_to(const ClassSpec& spec, std::size_t max_sigma, std::size_t max_n,
                                              EnumOptions opts = {}) {
    detail::require_rc_invariant(spec);
    ClassEnumerator en(spec, opts);
    const auto sigmas = detail::members_up_to(en, max_sigma);
    std::vector<WitnessReport> results(sigmas.size());
    detail::fan_out(sigmas.size(), opts.jobs, [&](std::size_t i) { results[i] = rc_witness(en, sigmas[i], max_n); });
    return detail::collect(max_sigma, max_n, std::move(results));
}

// A centrosymmetric member of even size <= max_even containing sigma.
inline WitnessReport centro_witness(const ClassEnumerator& en, const Permutation& sigma, std::size_t max_even) {
    const ClassSpec& spec = en.spec();
    if (!member(spec, sigma)) throw DomainError(sigma.to_string() + " is not in " + spec.to_string());
    WitnessReport rep{sigma, std::nullopt, max_even, 1, 0, WitnessMethod::none};
    auto verified = [&](const Permutation& rho) {
        return rho.size() % 2 == 0 && rho.size() <= max_even && is_centrosymmetric(rho) && member(spec, rho) &&
               contains(rho, sigma);
    };

    if (2 * sigma.size() <= max_even) {
        if (detail::sum_closed_rc_invariant(spec)) {
            Permutation rho = direct_sum(reverse_complement(sigma), sigma);
            if (!verified(rho)) throw std::logic_error("sum construction failed verification for " + sigma.to_string());
            rep.witness = std::move(rho);
            rep.method = WitnessMethod::sum_construction;
            return rep;
        }
        if (const GeomClass* g = geom_of(spec)) {
            if (auto rho = centrosymmetric_doubling(*g, sigma); rho && verified(*rho)) {
                rep.witness = std::move(*rho);
                rep.method = WitnessMethod::doubling;
                return rep;
            }
        }
    }
    const std::size_t start = sigma.size() + sigma.size() % 2;
    rep.searched_from = start;
    rep.searched_to = start;
    for (std::size_t m = start; m <= max_even; m += 2) {
        rep.searched_to = m;
        for (const auto& rho : en.centro_level(m)) {
            if (contains(rho, sigma)) {
                if (!verified(rho)) throw std::logic_error("witness failed verification");
                rep.witness = rho;
                rep.method = WitnessMethod::search;
                return rep;
            }
        }
    }
    return rep;
}

inline WitnessReport centro_witness(const ClassSpec& spec, const Permutation& sigma, std::size_t max_even,
                                    EnumOptions opts = {}) {
    detail::require_rc_invariant(spec);
    return centro_witness(ClassEnumerator(spec, opts), sigma, max_even);
}

inline BoundedSearchReport generated_by_centro_up_to(const ClassSpec& spec, std::size_t max_sigma,
                                                     std::size_t max_even, EnumOptions opts = {}) {
    detail::require_rc_invariant(spec);
    ClassEnumerator en(spec, opts);
    const auto sigmas = detail::members_up_to(en, max_sigma);
    std::vector<WitnessReport> results(sigmas.size());
    detail::fan_out(sigmas.size(), opts.jobs,
                    [&](std::size_t i) { results[i] = centro_witness(en, sigmas[i], max_even); });
    return detail::collect(max_sigma, max_even, std::move(results));
}

struct UnionCentroCheck {
    bool holds = true;
    std::size_t max_size = 0;
    std::vector<std::uint64_t> union_counts;         // |(D u rc D)^rc_m|
    std::vector<std::uint64_t> intersection_counts;  // |(D n rc D)^rc_m|
    std::optional<Permutation> counterexample;
};

// For C = D u rc(D): every centrosymmetric member of C is in D n rc(D).
inline UnionCentroCheck union_centro_check(const ClassSpec& d, std::size_t max_size, EnumOptions opts = {}) {
    const ClassSpec rcd = ClassSpec::rc(d);
    const ClassSpec both = ClassSpec::intersect(d, rcd);
    ClassEnumerator eu(ClassSpec::union_of(d, rcd), opts), ei(both, opts);
    UnionCentroCheck rep;
    rep.max_size = max_size;
    for (std::size_t m = 0; m <= max_size; ++m) {
        const auto& cu = eu.centro_level(m);
        rep.union_counts.push_back(cu.size());
        rep.intersection_counts.push_back(ei.centro_level(m).size());
        for (const auto& p : cu) {
            if (!member(both, p)) {
                rep.holds = false;
                if (!rep.counterexample) rep.counterexample = p;
            }
        }
        if (rep.union_counts.back() != rep.intersection_counts.back()) rep.holds = false;
    }
    return rep;
}

}  // namespace centro
