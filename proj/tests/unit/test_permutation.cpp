#include "centro/permutation.hpp"
#include "centro/error.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace centro;

TEST_CASE("parse accepts spaced, comma and compact forms") {
    CHECK(parse_permutation("1") == Permutation{1});
    CHECK(parse_permutation("4 9 3 1 2 5 8 7 6") == Permutation{4, 9, 3, 1, 2, 5, 8, 7, 6});
    CHECK(parse_permutation("231") == Permutation{2, 3, 1});
    CHECK(parse_permutation("2,3,1") == Permutation{2, 3, 1});
    CHECK(parse_permutation("10 1 2 3 4 5 6 7 8 9").size() == 10);
    CHECK(parse_permutation("").empty());
}

TEST_CASE("parse names the offending token") {
    auto message_of = [](const char* text) {
        try {
            parse_permutation(text);
        } catch (const FormatError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THROWS_AS(parse_permutation("1 1"), FormatError);
    CHECK(message_of("1 2 2").find("2") != std::string::npos);
    CHECK(message_of("1 5 2").find("5") != std::string::npos);
    CHECK(message_of("1 x 2").find("x") != std::string::npos);
    CHECK_THROWS_AS(parse_permutation("0 1"), FormatError);
    CHECK_THROWS_AS(parse_permutation("122"), FormatError);
}

TEST_CASE("construction validates a bijection") {
    CHECK_THROWS_AS(Permutation(std::vector<int>{2, 3}), FormatError);
    CHECK_NOTHROW(Permutation(std::vector<int>{}));
    CHECK(Permutation::identity(3) == Permutation{1, 2, 3});
    CHECK(Permutation::decreasing(3) == Permutation{3, 2, 1});
    CHECK(Permutation{3, 1, 2}.to_string() == "3 1 2");
    CHECK(Permutation{3, 1, 2}.to_compact_string() == "312");
}

TEST_CASE("reverse complement examples") {
    CHECK(reverse_complement(Permutation{1, 2, 3}) == Permutation{1, 2, 3});
    CHECK(reverse_complement(Permutation{3, 1, 2}) == Permutation{2, 3, 1});
    CHECK(reverse_complement(Permutation{2, 4, 1, 3}) == Permutation{2, 4, 1, 3});
    CHECK(reverse_complement(Permutation{}) == Permutation{});
}

TEST_CASE("centrosymmetry examples") {
    CHECK(is_centrosymmetric(Permutation{1, 2, 3}));
    CHECK(is_centrosymmetric(Permutation{3, 4, 1, 2}));
    CHECK_FALSE(is_centrosymmetric(Permutation{3, 1, 2}));
    CHECK(is_centrosymmetric(Permutation{}));
}

TEST_CASE("rc is an involution and matches the entrywise formula") {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& p : all_permutations(n)) {
            REQUIRE(reverse_complement(reverse_complement(p)) == p);
            REQUIRE(reverse_complement(p) == oracle::rc(p));
        }
    std::mt19937 rng(7);
    for (std::size_t n = 8; n <= 10; ++n)
        for (int t = 0; t < 200; ++t) {
            std::vector<int> v(n);
            std::iota(v.begin(), v.end(), 1);
            std::shuffle(v.begin(), v.end(), rng);
            const Permutation p(v);
            REQUIRE(reverse_complement(reverse_complement(p)) == p);
        }
}

TEST_CASE("odd centrosymmetric permutations fix the centre") {
    std::size_t count[8] = {};
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& p : all_permutations(n))
            if (is_centrosymmetric(p)) {
                ++count[n];
                if (n % 2 == 1) REQUIRE(p[n / 2] == static_cast<int>(n / 2 + 1));
            }
    // 2^k k! for sizes 2k and 2k+1
    CHECK(std::vector<std::size_t>(count, count + 8) == std::vector<std::size_t>{1, 1, 2, 2, 8, 8, 48, 48});
}

TEST_CASE("containment examples") {
    const Permutation pi{4, 9, 3, 1, 2, 5, 8, 7, 6};
    const auto occ = find_occurrence(pi, Permutation{4, 1, 2, 3});
    REQUIRE(occ);
    std::vector<int> values;
    for (auto i : *occ) values.push_back(pi[i]);
    CHECK(values == std::vector<int>{9, 3, 5, 8});
    // The occurrence 9356 is valid but not the least one by position.
    CHECK(oracle::standardize({9, 3, 5, 6}) == std::vector<int>{4, 1, 2, 3});
    CHECK(*occ < std::vector<std::size_t>{1, 2, 5, 8});
    CHECK_FALSE(contains(pi, Permutation{3, 1, 4, 2}));
    CHECK(contains(pi, Permutation{}));
    CHECK(contains(Permutation{}, Permutation{}));
    CHECK_FALSE(contains(Permutation{1}, Permutation{1, 2}));
}

TEST_CASE("containment agrees with the subset oracle") {
    std::vector<Permutation> patterns;
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& p : all_permutations(k)) patterns.push_back(p);
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& host : all_permutations(n))
            for (const auto& pat : patterns) REQUIRE(contains(host, pat) == oracle::contains(host, pat));
}

TEST_CASE("occurrence witnesses are order-isomorphic and lexicographically least") {
    for (const auto& host : all_permutations(6))
        for (const auto& pat : all_permutations(3)) {
            const auto occ = find_occurrence(host, pat);
            if (!occ) continue;
            std::vector<int> sub;
            for (auto i : *occ) sub.push_back(host[i]);
            REQUIRE(oracle::standardize(sub) == std::vector<int>(pat.begin(), pat.end()));
            // No lexicographically smaller index set is an occurrence.
            std::vector<std::size_t> best;
            for (std::size_t a = 0; a < 6 && best.empty(); ++a)
                for (std::size_t b = a + 1; b < 6 && best.empty(); ++b)
                    for (std::size_t c = b + 1; c < 6 && best.empty(); ++c)
                        if (oracle::standardize({host[a], host[b], host[c]}) == std::vector<int>(pat.begin(), pat.end()))
                            best = {a, b, c};
            REQUIRE(*occ == best);
        }
}

TEST_CASE("anchored containment requires the anchor") {
    const Permutation host{1, 3, 2, 4};
    const std::size_t first[] = {0};
    const std::size_t third[] = {2};
    CHECK(contains_through(host, Permutation{2, 1}, third));
    CHECK_FALSE(contains_through(host, Permutation{2, 1}, first));
}

TEST_CASE("rc preserves containment") {
    std::vector<Permutation> patterns;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& p : all_permutations(k)) patterns.push_back(p);
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& host : all_permutations(n))
            for (const auto& pat : patterns)
                if (contains(host, pat)) REQUIRE(contains(reverse_complement(host), reverse_complement(pat)));
}

TEST_CASE("sums") {
    CHECK(direct_sum(Permutation{2, 1}, Permutation{1}) == Permutation{2, 1, 3});
    CHECK(skew_sum(Permutation{1, 2}, Permutation{1, 2}) == Permutation{3, 4, 1, 2});
    CHECK(direct_sum(Permutation{}, Permutation{3, 1, 2}) == Permutation{3, 1, 2});
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j)
            for (const auto& a : all_permutations(i))
                for (const auto& b : all_permutations(j))
                    REQUIRE(reverse_complement(direct_sum(a, b)) == direct_sum(reverse_complement(b), reverse_complement(a)));
}

TEST_CASE("sum decomposition") {
    CHECK(sum_decompose(Permutation{1, 2, 3}) == std::vector<Permutation>{Permutation{1}, Permutation{1}, Permutation{1}});
    CHECK(sum_decompose(Permutation{2, 1, 3, 4}) == std::vector<Permutation>{Permutation{2, 1}, Permutation{1}, Permutation{1}});
    CHECK(sum_decompose(Permutation{3, 1, 4, 2}) == std::vector<Permutation>{Permutation{3, 1, 4, 2}});
    CHECK(is_sum_indecomposable(Permutation{1}));
    CHECK_FALSE(is_sum_indecomposable(Permutation{1, 2}));
    CHECK(is_sum_indecomposable(Permutation{2, 4, 1, 3}));
    CHECK_THROWS_AS(is_sum_indecomposable(Permutation{}), DomainError);
}

TEST_CASE("sum decomposition round-trips and blocks are indecomposable") {
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& p : all_permutations(n)) {
            const auto blocks = sum_decompose(p);
            Permutation folded;
            for (const auto& b : blocks) {
                REQUIRE(is_sum_indecomposable(b));
                folded = direct_sum(folded, b);
            }
            REQUIRE(folded == p);
            // a boundary after position i iff the first i values are {1..i}
            std::size_t boundaries = 0;
            int mx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                mx = std::max(mx, p[i]);
                if (mx == static_cast<int>(i + 1)) ++boundaries;
            }
            REQUIRE(blocks.size() == boundaries);
        }
}

TEST_CASE("all_permutations and delete_position") {
    CHECK(all_permutations(5).size() == 120);
    CHECK(all_permutations(0).size() == 1);
    CHECK(delete_position(Permutation{3, 1, 4, 2}, 2) == Permutation{3, 1, 2});
    CHECK(standardize(std::vector<int>{10, 3, 7}) == Permutation{3, 1, 2});
}
