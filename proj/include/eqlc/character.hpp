#pragma once

#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "eqlc/ints.hpp"
#include "eqlc/partition.hpp"

namespace eqlc {

// Class function on S_n; values indexed by cycle type in canonical class
// order (WeightIndex::get(n)).  The identity class (1,...,1) sits last.
struct CharacterVector {
    int n = 0;
    std::vector<Int> values;

    CharacterVector() = default;
    explicit CharacterVector(int n_)
        : n(n_), values(WeightIndex::get(n_).size(), Int(0)) {}

    const Int& at(const Partition& cycle_type) const {
        return values[WeightIndex::get(n).position(cycle_type)];
    }
    Int& at(const Partition& cycle_type) {
        return values[WeightIndex::get(n).position(cycle_type)];
    }
    const Int& dimension() const { return values.back(); }

    CharacterVector& operator+=(const CharacterVector& o);
    CharacterVector& operator*=(const CharacterVector& o);  // pointwise
};

struct CharacterTable {
    int n = 0;
    // rows[i] = character of the irreducible labelled WeightIndex::get(n).at(i)
    std::vector<CharacterVector> rows;
    enum class Provenance { computed, loaded };
    Provenance provenance = Provenance::computed;

    const CharacterVector& row(const Partition& label) const {
        return rows[WeightIndex::get(n).position(label)];
    }
    const Int& value(const Partition& label, const Partition& cycle_type) const {
        return row(label).values[WeightIndex::get(n).position(cycle_type)];
    }
    std::string serialize() const;
};

// All ways to remove a border strip of length r from p: (result, height).
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& p, int r);

// Murnaghan-Nakayama evaluation of the irreducible character chi_lambda at
// cycle type mu, largest parts stripped first, memoized on
// (remaining shape, remaining cycle multiset).
Int mn_character(const Partition& lambda, const Partition& mu);

// Full table for S_n.  Consults the in-memory store and the persistent cache
// first; computed tables are published atomically and verified against both
// orthogonality relations.  Returned reference lives for the process.
const CharacterTable& character_table(int n);

// Parses the "chartab v1" format; malformed input is reported as
// CacheCorruptError, distinct from any computation failure.
CharacterTable parse_character_table(int n, std::istream& in, const std::string& origin);

// (1/n!) sum_mu class_size(mu) a(mu) b(mu).
Rat inner_product(const CharacterVector& a, const CharacterVector& b);

}  // namespace eqlc
