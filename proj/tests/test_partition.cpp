#include <doctest.h>

#include <set>

#include "eqlc/errors.hpp"
#include "eqlc/partition.hpp"

using namespace eqlc;

namespace {

// brute-force partition counter, independent of the enumeration
long long count_partitions_brute(int n, int max_part) {
    if (n == 0) return 1;
    if (max_part == 0) return 0;
    long long total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        total += count_partitions_brute(n - k, k);
    return total;
}

// brute-force standard Young tableau counter (hook-length oracle)
long long count_syt(const Partition& p) {
    int n = p.weight();
    std::vector<int> filled(p.length(), 0);  // boxes filled per row
    auto rec = [&](auto&& self, int next) -> long long {
        if (next > n) return 1;
        long long total = 0;
        for (int r = 0; r < p.length(); ++r) {
            if (filled[r] >= p.parts()[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column must grow downward
            ++filled[r];
            total += self(self, next + 1);
            --filled[r];
        }
        return total;
    };
    return rec(rec, 1);
}

}  // namespace

TEST_CASE("partition construction and canonical text") {
    CHECK(Partition().weight() == 0);
    CHECK(Partition().text() == "[]");
    CHECK(Partition(std::vector<int>{3, 1}).text() == "[3,1]");
    CHECK(parse_partition("[3,1]") == Partition(std::vector<int>{3, 1}));
    CHECK(parse_partition("[]") == Partition());
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), Error);
    CHECK_THROWS_AS(Partition(std::vector<int>{0}), Error);
}

TEST_CASE("enumerate_partitions: order, count, uniqueness") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].text() == "[4]");
    CHECK(p4[1].text() == "[3,1]");
    CHECK(p4[2].text() == "[2,2]");
    CHECK(p4[3].text() == "[2,1,1]");
    CHECK(p4[4].text() == "[1,1,1,1]");

    CHECK(enumerate_partitions(16).size() == 231);
    CHECK((long long)enumerate_partitions(16).size() == count_partitions_brute(16, 16));

    // set semantics: no duplicates, all of weight n
    for (int n = 0; n <= 12; ++n) {
        auto list = enumerate_partitions(n);
        std::set<std::string> seen;
        for (const auto& p : list) {
            CHECK(p.weight() == n);
            CHECK(seen.insert(p.text()).second);
        }
        CHECK(Int((long)list.size()) == partition_count(n));
    }
}

TEST_CASE("partition_count matches the enumeration through n=40") {
    // pentagonal recurrence vs direct counting
    for (int n = 0; n <= 40; ++n)
        CHECK(partition_count(n) == Int((long)count_partitions_brute(n, n)));
    CHECK(partition_count(40) == 37338);
}

TEST_CASE("conjugate is an involution and transposes") {
    CHECK(conjugate(Partition(std::vector<int>{3, 1})) == Partition(std::vector<int>{2, 1, 1}));
    CHECK(conjugate(Partition(std::vector<int>{5})) ==
          Partition(std::vector<int>{1, 1, 1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("class_size: identity, transpositions, class equation") {
    CHECK(class_size(Partition(std::vector<int>{1, 1, 1})) == 1);
    CHECK(class_size(Partition(std::vector<int>{2, 1})) == 3);
    for (int n = 0; n <= 10; ++n) {
        Int total = 0;
        for (const auto& p : enumerate_partitions(n)) total += class_size(p);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("hook_dimension: SYT oracle and Burnside identity") {
    CHECK(hook_dimension(Partition(std::vector<int>{7})) == 1);
    CHECK(hook_dimension(Partition(std::vector<int>{2, 1})) == 2);
    CHECK(hook_dimension(Partition(std::vector<int>{2, 1})) ==
          Int((long)count_syt(Partition(std::vector<int>{2, 1}))));
    for (const auto& p : enumerate_partitions(6))
        CHECK(hook_dimension(p) == Int((long)count_syt(p)));
    for (int n = 0; n <= 10; ++n) {
        Int total = 0;
        for (const auto& p : enumerate_partitions(n)) {
            Int d = hook_dimension(p);
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("first_row_grow") {
    CHECK(first_row_grow(Partition(std::vector<int>{2, 2}), 5) ==
          Partition(std::vector<int>{3, 2}));
    CHECK(first_row_grow(Partition(std::vector<int>{2}), 6) == Partition(std::vector<int>{6}));
    CHECK(first_row_grow(Partition(std::vector<int>{1, 1}), 3) ==
          Partition(std::vector<int>{2, 1}));
    CHECK(first_row_grow(Partition(), 4) == Partition(std::vector<int>{4}));
    CHECK_THROWS_AS(first_row_grow(Partition(std::vector<int>{2, 2}), 4), Error);
}

TEST_CASE("canonical order ties weights then reverse lex") {
    PartitionLess less;
    CHECK(less(Partition(std::vector<int>{4}), Partition(std::vector<int>{3, 1})));
    CHECK(less(Partition(std::vector<int>{3, 1}), Partition(std::vector<int>{2, 2})));
    CHECK(less(Partition(std::vector<int>{3}), Partition(std::vector<int>{4})));
    CHECK(!less(Partition(std::vector<int>{4}), Partition(std::vector<int>{4})));
}

TEST_CASE("WeightIndex positions agree with enumeration") {
    const auto& idx = WeightIndex::get(7);
    for (int i = 0; i < (int)idx.size(); ++i) CHECK(idx.position(idx.at(i)) == i);
    CHECK_THROWS_AS(idx.position(Partition(std::vector<int>{3})), WeightMismatchError);
}
