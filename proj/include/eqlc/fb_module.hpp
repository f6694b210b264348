#pragma once

#include <map>
#include <optional>
#include <string>

#include "eqlc/partition.hpp"
#include "eqlc/rep.hpp"

namespace eqlc {

// One S_n-representation per degree, explicitly defined through max_degree;
// an optional stable tail answers queries above that by first-row growth.
// Immutable by convention once built.
struct FBModule {
    int max_degree = -1;                      // defined for 0..max_degree
    std::map<int, RepDecomposition> support;  // zero degrees omitted
    std::optional<int> stable_from;           // computed annotation, never assumed

    bool defined_at(int n) const { return n >= 0 && (n <= max_degree || stable_from); }

    // Degree-n part; uses the stable tail above max_degree when annotated.
    RepDecomposition at(int n) const;

    void set(int n, RepDecomposition d);

    std::string serialize() const;  // "fbmod v1" format
    bool operator==(const FBModule& o) const {
        return support == o.support;  // compares explicit support only
    }
};

FBModule parse_fb_module(const std::string& text);

struct ContainWitness {
    int degree;
    Partition label;
    Int small_mult, big_mult;
};

struct ContainResult {
    bool contained;
    std::optional<ContainWitness> witness;  // first violation in canonical order
};

// Degreewise Kronecker product through up_to.
FBModule fb_tensor(const FBModule& v, const FBModule& w, int up_to);

// mult_small(lambda, n) <= mult_big(lambda, n) for all n <= up_to.
ContainResult fb_contains(const FBModule& big, const FBModule& small, int up_to);

// Least m < search_up_to such that every degree in (m, search_up_to] equals
// first-row growth of the degree-m data; nullopt when even the last step
// fails ("not yet stable").
std::optional<int> stabilization_degree(const FBModule& v, int search_up_to);

// Degree-n decomposition grown from the degree-m seed (requires n > m).
RepDecomposition extend_stable(const FBModule& v, int m, int n);

// Keeps degrees < n, zeroes the rest (definedness is preserved).
FBModule truncate_below(const FBModule& v, int n);

}  // namespace eqlc
