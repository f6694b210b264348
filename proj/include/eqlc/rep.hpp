#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqlc/character.hpp"
#include "eqlc/ints.hpp"
#include "eqlc/partition.hpp"

namespace eqlc {

// An S_n-representation up to isomorphism: multiplicities over the
// irreducibles of weight n.  No zero entries are stored.
struct RepDecomposition {
    int n = 0;
    std::map<Partition, Int, PartitionLess> mults;

    RepDecomposition() = default;
    explicit RepDecomposition(int n_) : n(n_) {}

    void add(const Partition& label, const Int& count);
    Int mult(const Partition& label) const;
    bool is_zero() const { return mults.empty(); }
    Int dimension() const;
    CharacterVector character() const;

    // Canonical text: "1*[4] + 1*[3,1] + 1*[2,2]"; "0" when empty.
    std::string text() const;

    bool operator==(const RepDecomposition& o) const {
        return n == o.n && mults == o.mults;
    }
    RepDecomposition& operator+=(const RepDecomposition& o);
};

RepDecomposition parse_rep(const std::string& s, int n);

// mult(lambda) = <chi, chi_lambda> for every lambda; throws
// VirtualCharacterError (with the offending lambda) when any multiplicity is
// negative or fractional.
RepDecomposition decompose(const CharacterVector& chi);

// Inner tensor product, via pointwise character multiplication.
RepDecomposition kronecker(const RepDecomposition& a, const RepDecomposition& b);

// Ind_{S_a x S_{n-a}}^{S_n} (w boxtimes triv): adds a horizontal strip of
// n-a boxes to every summand (Pieri rule).
RepDecomposition pieri_induct(const RepDecomposition& w, int n);

// Tensor with the sign representation: conjugates every label.
RepDecomposition sign_twist(const RepDecomposition& d);

// All mu >= lambda with mu/lambda a horizontal strip and |mu| = n.
std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int n);

}  // namespace eqlc
