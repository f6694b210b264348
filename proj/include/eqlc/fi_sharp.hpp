#pragma once

#include <string>

#include "eqlc/fb_module.hpp"

namespace eqlc {

// Finitely supported FB-module W, read as the induced FI#-module M(W).
struct GeneratorModule {
    enum class Provenance { computed_h0, constructed };
    FBModule fb;
    Provenance provenance = Provenance::constructed;

    std::string serialize() const;  // "genmod v1" + provenance line
};

GeneratorModule parse_generator_module(const std::string& text);

// M(W)_n = sum_{a <= n} Ind_{S_a x S_{n-a}}^{S_n} (W_a boxtimes triv).
RepDecomposition m_functor(const GeneratorModule& w, int n);

// M applied to the regular representation of S_m placed in degree m.
RepDecomposition free_module(int m, int n);

// Placed-in-degree helper: W with d sitting at its own weight.
GeneratorModule single_generator(const RepDecomposition& d);

// Recursive generators functor: H0(V)_n = V_n - M(H0(V)_{<n})_n, degree by
// degree through vanish_above; afterwards degrees (vanish_above,
// vanish_above + slack] must be reproduced exactly by the computed
// generators (so the vanishing bound is machine-checked per run, never
// assumed).  Negative remainders abort with NotInducedError.
GeneratorModule h_zero(const FBModule& v, int vanish_above, int slack = 1);

// contains(h_zero(y), h_zero(x)) degreewise; true certifies an inclusion of
// the induced FI#-modules M(H0(x)) into M(H0(y)).
struct FiSharpResult {
    bool contained;
    std::optional<ContainWitness> witness;
    GeneratorModule gens_small, gens_big;
};
FiSharpResult fisharp_contains(const FBModule& x, const FBModule& y, int vanish_above,
                               int slack = 1);

}  // namespace eqlc
