#pragma once

#include <map>
#include <string>

#include "eqlc/ints.hpp"
#include "eqlc/partition.hpp"
#include "eqlc/rep.hpp"

namespace eqlc {

// Symmetric functions in the power-sum basis with rational coefficients.
// The single internal basis: multiplication and plethysm are trivial here,
// Schur combinatorics lives entirely at the to_rep/from_rep boundary.
struct SymFunc {
    std::map<Partition, Rat, PartitionLess> terms;  // no zero coefficients

    void add(const Partition& idx, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const SymFunc& o) const { return terms == o.terms; }
    SymFunc& operator+=(const SymFunc& o);
    std::string text() const;  // debugging aid
};

SymFunc p_single(const Partition& idx, const Rat& c = 1);

// Frobenius characteristic: sum_lambda mult * s_lambda expanded into power
// sums through the character table.
SymFunc from_rep(const RepDecomposition& d);

// Schur expansion of a homogeneous degree-n function via the z-weighted
// pairing; throws VirtualCharacterError when a coefficient is negative or
// fractional.
RepDecomposition to_rep(const SymFunc& f, int n);

// Character of the (virtual) representation with Frobenius image f:
// chi(mu) = z_mu * [p_mu] f.  Throws on non-integral values.
CharacterVector to_character(const SymFunc& f, int n);

// Bilinear with p_lambda * p_mu = p_{lambda cup mu}; cap < 0 means no
// truncation, otherwise terms of degree > cap are dropped.
SymFunc multiply(const SymFunc& f, const SymFunc& g, int cap = -1);

// Standard plethysm f[g]: p_r[g] substitutes p_k -> p_{rk}; extended
// algebraically, truncated at the mandatory degree cap.
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int cap);

// Complete homogeneous h_m = sum_{lambda |- m} p_lambda / z_lambda.
SymFunc h_sym(int m);
// Elementary e_m = sum (-1)^{m - l(lambda)} p_lambda / z_lambda.
SymFunc e_sym(int m);
// Omega involution: p_lambda -> (-1)^{|lambda| - l(lambda)} p_lambda.
SymFunc omega(const SymFunc& f);

// Frobenius characteristic of Lie(j): (1/j) sum_{d|j} moebius(d) p_d^{j/d}.
SymFunc lie_character(int j);

}  // namespace eqlc
