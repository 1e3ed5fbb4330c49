#include "doctest.h"

#include <set>

#include "oracle.hpp"
#include "pluck/combinat.hpp"
#include "pluck/errors.hpp"

using namespace pluck;

namespace {

std::vector<std::vector<int>> keys(const std::vector<InputPartition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST_CASE("input partitions") {
    const InputPartition p = InputPartition::parse("2,10,2");
    CHECK(p.parts() == std::vector<int>{10, 2, 2});
    CHECK(p.key() == "10,2,2");
    CHECK(p.weight() == 14);
    CHECK(p.codim() == 11);
    CHECK(p.length() == 3);
    CHECK(p.largest() == 10);
    CHECK(p.smallest() == 2);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.multiplicity_factorial() == 2);
    CHECK(p.reduction() == std::vector<int>{9, 1, 1});
    CHECK(p.without(10) == InputPartition({2, 2}));
    CHECK(InputPartition::parse(" 3 , 2 ") == InputPartition({3, 2}));
    CHECK(InputPartition({3, 3, 3, 2, 2}).multiplicity_factorial() == 12);

    CHECK_THROWS_AS(InputPartition({2, 1}), InvalidPartition);
    CHECK_THROWS_AS(InputPartition({0}), InvalidPartition);
    for (const char* bad : {"2,1", "0", "", "2,,3", "x", "2,", "-2", "2.5"})
        CHECK_THROWS_AS(InputPartition::parse(bad), InputError);
    CHECK_THROWS_AS(static_cast<void>(p.without(5)), InputError);
}

TEST_CASE("enumerate_partitions_no_ones examples") {
    using V = std::vector<std::vector<int>>;
    CHECK(keys(enumerate_partitions_no_ones(3)) == V{{2}, {3}});
    CHECK(keys(enumerate_partitions_no_ones(4)) == V{{2}, {3}, {4}, {2, 2}});
    CHECK(keys(enumerate_partitions_no_ones(6)) ==
          V{{2}, {3}, {4}, {2, 2}, {5}, {3, 2}, {6}, {4, 2}, {3, 3}, {2, 2, 2}});
    CHECK(enumerate_partitions_no_ones(1).empty());
}

TEST_CASE("enumerate_partitions_no_ones is complete and ordered") {
    // partitions of n without 1's number p(n) - p(n-1)
    const auto p = oracle::partition_counts(20);
    const auto all = enumerate_partitions_no_ones(20);
    std::set<std::vector<int>> seen;
    std::map<int, long> per_weight;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& parts = all[i].parts();
        CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
        CHECK(parts.back() >= 2);
        CHECK(seen.insert(parts).second);
        ++per_weight[all[i].weight()];
        if (i > 0) {
            const auto& prev = all[i - 1];
            CHECK(prev.weight() <= all[i].weight());
            if (prev.weight() == all[i].weight()) CHECK(prev.parts() > parts);
        }
    }
    for (int n = 2; n <= 20; ++n) CHECK(BigInt(per_weight[n]) == p[n] - p[n - 1]);
}

TEST_CASE("kostka_two_row examples") {
    CHECK(kostka_two_row({2, 1}, {2, 1}) == 1);
    CHECK(kostka_two_row({3, 1}, {2, 1, 1}) == 2);
    CHECK(kostka_two_row({1, 1}, {2}) == 0);
    CHECK_THROWS_AS(kostka_two_row({2, 1}, {2, 2}), WeightMismatch);
}

TEST_CASE("kostka_vanishing examples") {
    CHECK(kostka_vanishing({3, 3}, {4, 1, 1}));
    CHECK_FALSE(kostka_vanishing({4, 2}, {4, 1, 1}));
    CHECK_FALSE(kostka_vanishing({6, 0}, {4, 1, 1}));
    CHECK_FALSE(kostka_vanishing({5, 0}, {5}));
}

namespace {

/// Every partition of n into parts >= 1, parts descending.
void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("kostka numbers agree with brute-force tableaux and with h-products") {
    for (int n = 0; n <= 10; ++n) {
        std::vector<std::vector<int>> contents;
        std::vector<int> cur;
        all_partitions(n, n, cur, contents);
        for (const auto& content : contents) {
            oracle::Biv h = oracle::constant(1);
            for (int part : content) h = h * oracle::complete(part);
            const auto expansion = oracle::to_schur(h);
            const RatClass library_h = complete_homogeneous_class(content);
            for (const auto& shape : two_row_partitions(n)) {
                const BigInt k = kostka_two_row(shape, content);
                CHECK(k == oracle::count_ssyt(shape.r1, shape.r2, content));
                const auto it = expansion.find({shape.r1, shape.r2});
                const Rat from_h = it == expansion.end() ? Rat(0) : it->second;
                CHECK(Rat(k) == from_h);
                CHECK(library_h.coefficient(shape) == from_h);
                CHECK(kostka_vanishing(shape, content) == (k == 0));
            }
        }
    }
}

TEST_CASE("kostka numbers are invariant under reordering the content") {
    oracle::Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> content;
        const int len = static_cast<int>(rng.range(1, 5));
        for (int k = 0; k < len; ++k) content.push_back(static_cast<int>(rng.range(1, 4)));
        int n = 0;
        for (int c : content) n += c;
        std::vector<int> shuffled = content;
        std::reverse(shuffled.begin(), shuffled.end());
        for (const auto& shape : two_row_partitions(n)) CHECK(kostka_two_row(shape, content) == kostka_two_row(shape, shuffled));
    }
}

TEST_CASE("stirling_first") {
    CHECK(stirling_first(5, 0) == 1);
    CHECK(stirling_first(3, 1) == 3);
    CHECK(stirling_first(5, 2) == 35);
    CHECK_THROWS_AS(stirling_first(3, 3), OutOfRange);
    CHECK_THROWS_AS(stirling_first(0, 0), OutOfRange);
    CHECK_THROWS_AS(stirling_first(3, -1), OutOfRange);

    for (int m = 1; m <= 25; ++m) {
        const auto row = oracle::stirling_row(m);
        BigInt sum = 0;
        for (int k = 0; k < m; ++k) {
            CHECK(stirling_first(m, k) == row[k]);
            sum += stirling_first(m, k);
        }
        CHECK(sum == oracle::factorial(m));
        // [m+1, m+1-k] = [m, m-k] + m [m, m-k+1]
        for (int k = 1; k < m; ++k)
            CHECK(stirling_first(m + 1, k) == stirling_first(m, k) + m * stirling_first(m, k - 1));
    }
}

TEST_CASE("complete_homogeneous_class examples") {
    CHECK(complete_homogeneous_class({5}) == RatClass::single({5, 0}, 1));
    RatClass h11(2);
    h11.add({2, 0}, 1);
    h11.add({1, 1}, 1);
    CHECK(complete_homogeneous_class({1, 1}) == h11);
    RatClass h21(3);
    h21.add({3, 0}, 1);
    h21.add({2, 1}, 1);
    CHECK(complete_homogeneous_class({2, 1}) == h21);
    CHECK(complete_homogeneous_class({}) == RatClass::one());
}
