#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlc/character.hpp"
#include "eqlc/fb_module.hpp"
#include "eqlc/fi_sharp.hpp"
#include "eqlc/symfunc.hpp"

namespace eqlc {

// The two graded families: degree-i cohomology of ordered configurations of
// points in the plane (A) and the even-degree half in 3-space (C).  The two
// signs fix the generator relations: w_ab = swap_sign * w_ba, and degree-one
// factors anticommute for A (comm_sign -1) while C's degree-two generators
// commute.
struct Family {
    char tag;       // 'A' or 'C'
    int swap_sign;  // +1 for A, -1 for C
    int comm_sign;  // -1 for A, +1 for C
};

const Family& family_A();
const Family& family_C();
const Family& family_from_tag(char tag);

// Normal-form basis monomial: factors (a_t, b_t) with a_t > b_t >= 1 and
// strictly increasing a_t.  The number of degree-i monomials on n points is
// the signless Stirling cycle number c(n, n-i).
using GeneratorPair = std::pair<int, int>;
using NbcMonomial = std::vector<GeneratorPair>;

// c(n, n-i): dimension of the degree-i component on n points.
Int nbc_count(int n, int i);

// Rewrites an arbitrary generator word to the normal-form basis under the
// family's swap/commutation signs and the three-term Arnold relation.
std::map<NbcMonomial, long long> straighten(const std::vector<GeneratorPair>& word,
                                            const Family& fam, int n);

enum class TierPolicy { oracle, plethysm, auto_policy };

struct ConfOptions {
    TierPolicy tier = TierPolicy::auto_policy;
    long long oracle_budget = 1000000;  // monomial budget for the straightening tier
    int slack = 1;                      // consistency window width
};

// Tier 1 (ground truth): trace of each cycle type acting by index relabeling
// followed by straightening, summed over basis monomials.
CharacterVector oracle_character(const Family& fam, int i, int n,
                                 long long oracle_budget = 1000000);

// Plethystic factor selection pinned by calibration against the oracle.
struct TwistConvention {
    bool twist_even_blocks;    // apply omega to the Lie factor of even block sizes
    bool outer_even_is_e;      // symmetrize even-size blocks with e instead of h
    bool outer_odd_is_e;       // same for odd-size blocks
    bool operator==(const TwistConvention&) const = default;
};

SymFunc tier2_frobenius(const Family& fam, int i, int n, const TwistConvention& conv);

// Selects the unique convention matching the oracle on the full i <= 3,
// n <= 8 grid; throws CalibrationError on failure or ambiguity.  The result
// is computed once per family and cached for the process.
const TwistConvention& calibrated_convention(const Family& fam);

// Tier 2 (scalable): calibrated plethystic assembly.
CharacterVector tier2_character(const Family& fam, int i, int n);

// One decomposed degree, cached under `conf <fam> i=<i> n=<n>`.
struct ConfEntry {
    RepDecomposition rep;
    std::string tier;  // "oracle", "plethysm", or "cache"
};
ConfEntry conf_character_decomposition(const Family& fam, int i, int n,
                                       const ConfOptions& opts = {});

struct ConfModule {
    char family_tag;
    int i;
    FBModule fb;
    std::optional<int> stabilization;  // detected, never presupposed
    int sharp_bound;                   // 3i+1 for A, 3i for C
    std::vector<std::string> tiers_used;
};

ConfModule conf_fb_module(const Family& fam, int i, int up_to, const ConfOptions& opts = {});

// h_zero of the family module with vanish_above = 2i; support is verified to
// lie in [i+1, 2i] for i >= 1 (hard failure otherwise).  Cached as a genmod
// file keyed (fam, i).  tier_used, when given, receives "oracle",
// "plethysm", "mixed" or "cache".
GeneratorModule conf_generators(const Family& fam, int i, const ConfOptions& opts = {},
                                std::string* tier_used = nullptr);

}  // namespace eqlc
