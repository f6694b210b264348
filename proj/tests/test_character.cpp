#include <doctest.h>

#include <sstream>

#include "eqlc/character.hpp"
#include "eqlc/errors.hpp"

using namespace eqlc;

TEST_CASE("border strip removal") {
    // removing a 3-strip from (2,1) empties it with height 1
    auto strips = remove_border_strips(Partition(std::vector<int>{2, 1}), 3);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].first == Partition());
    CHECK(strips[0].second == 1);
    // no 2-strips fit in (1,1,1)'s rim? one does: the bottom two boxes
    strips = remove_border_strips(Partition(std::vector<int>{1, 1, 1}), 2);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].first == Partition(std::vector<int>{1}));
    CHECK(strips[0].second == 1);
}

TEST_CASE("mn_character basics") {
    // trivial representation
    for (const auto& mu : enumerate_partitions(6))
        CHECK(mn_character(Partition(std::vector<int>{6}), mu) == 1);
    // sign of a 3-cycle is +1
    CHECK(mn_character(Partition(std::vector<int>{1, 1, 1}), Partition(std::vector<int>{3})) ==
          1);
    // dimension of the standard summand of S_3 (SYT count oracle: 2)
    CHECK(mn_character(Partition(std::vector<int>{2, 1}),
                       Partition(std::vector<int>{1, 1, 1})) == 2);
    CHECK(mn_character(Partition(std::vector<int>{2, 1}), Partition(std::vector<int>{3})) == -1);
    CHECK_THROWS_AS(
        mn_character(Partition(std::vector<int>{2}), Partition(std::vector<int>{3})),
        WeightMismatchError);
}

TEST_CASE("mn_character equals hook dimension at the identity") {
    for (int n = 0; n <= 10; ++n) {
        Partition id(std::vector<int>(n, 1));
        for (const auto& lam : enumerate_partitions(n))
            CHECK(mn_character(lam, id) == hook_dimension(lam));
    }
}

TEST_CASE("character tables n=2 and n=3") {
    const CharacterTable& t2 = character_table(2);
    // canonical class order: [2], [1,1]
    CHECK(t2.value(Partition(std::vector<int>{2}), Partition(std::vector<int>{1, 1})) == 1);
    CHECK(t2.value(Partition(std::vector<int>{2}), Partition(std::vector<int>{2})) == 1);
    CHECK(t2.value(Partition(std::vector<int>{1, 1}), Partition(std::vector<int>{1, 1})) == 1);
    CHECK(t2.value(Partition(std::vector<int>{1, 1}), Partition(std::vector<int>{2})) == -1);

    const CharacterTable& t3 = character_table(3);
    REQUIRE(t3.rows.size() == 3);
    Partition r21(std::vector<int>{2, 1});
    CHECK(t3.value(r21, Partition(std::vector<int>{1, 1, 1})) == 2);
    CHECK(t3.value(r21, Partition(std::vector<int>{2, 1})) == 0);
    CHECK(t3.value(r21, Partition(std::vector<int>{3})) == -1);
}

TEST_CASE("full table at n=16 passes its built-in orthogonality check") {
    const CharacterTable& t = character_table(16);
    CHECK(t.rows.size() == 231);
    CHECK(t.rows[0].values.size() == 231);
}

TEST_CASE("orthogonality and inner products for n <= 10") {
    for (int n = 0; n <= 10; ++n) {
        const CharacterTable& t = character_table(n);
        const auto& idx = WeightIndex::get(n);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i; j < idx.size(); ++j) {
                Rat ip = inner_product(t.rows[i], t.rows[j]);
                CHECK(ip == Rat(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("inner product examples") {
    const CharacterTable& t3 = character_table(3);
    CHECK(inner_product(t3.row(Partition(std::vector<int>{3})),
                        t3.row(Partition(std::vector<int>{2, 1}))) == 0);
    // regular character of S_3: n! at the identity, 0 elsewhere
    CharacterVector reg(3);
    reg.at(Partition(std::vector<int>{1, 1, 1})) = 6;
    CHECK(inner_product(reg, t3.row(Partition(std::vector<int>{2, 1}))) == 2);
    CharacterVector bad(2);
    CHECK_THROWS_AS(inner_product(reg, bad), WeightMismatchError);
}

TEST_CASE("mn_character rows match the table") {
    for (int n = 0; n <= 8; ++n) {
        const CharacterTable& t = character_table(n);
        const auto& idx = WeightIndex::get(n);
        for (const auto& lam : idx.list())
            for (const auto& mu : idx.list()) CHECK(mn_character(lam, mu) == t.value(lam, mu));
    }
}

TEST_CASE("table serialization round-trips byte-identically") {
    const CharacterTable& t5 = character_table(5);
    std::string once = t5.serialize();
    std::istringstream in(once);
    CharacterTable again = parse_character_table(5, in, "roundtrip");
    CHECK(again.provenance == CharacterTable::Provenance::loaded);
    CHECK(again.serialize() == once);
}

TEST_CASE("corrupt cache text is reported distinctly") {
    {
        std::istringstream in("chartab v9 n=5\njunk\n");
        CHECK_THROWS_AS(parse_character_table(5, in, "test"), CacheCorruptError);
    }
    {
        // right header, truncated body
        std::istringstream in("chartab v1 n=2\n[2] : 1 1\n");
        CHECK_THROWS_AS(parse_character_table(2, in, "test"), CacheCorruptError);
    }
    {
        // non-integer entry
        std::istringstream in("chartab v1 n=2\n[2] : 1 x\n[1,1] : -1 1\n");
        CHECK_THROWS_AS(parse_character_table(2, in, "test"), CacheCorruptError);
    }
}
