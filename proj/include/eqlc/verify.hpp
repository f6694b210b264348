#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqlc/conf.hpp"
#include "eqlc/fb_module.hpp"
#include "eqlc/fi_sharp.hpp"

namespace eqlc {

// i < j <= k < l with i+l = j+k = m.
struct Quadruple {
    int i, j, k, l;
    int m() const { return i + l; }
    std::string text() const;
};

std::vector<Quadruple> enumerate_quadruples(int m);

enum class Verdict { contained, violated, error };

struct QuadrupleResult {
    char family;
    Quadruple q;
    Verdict verdict = Verdict::error;
    std::optional<ContainWitness> witness;
    int bound = 0;          // vanishing bound 2m used for the H0 recursion
    std::string tier;       // how the generator characters were obtained
    bool window_ok = false; // consistency window above the bound reproduced the input
    bool spot_check_ok = false;
    long long millis = 0;
    std::string error_msg;
    std::vector<std::string> flags;
};

struct VerificationReport {
    char family;
    std::vector<QuadrupleResult> results;
    bool all_contained() const;
};

// Shared generator-module store so quadruples of one run never recompute a
// conf generator module; the whole performance story lives here.
class GeneratorStore {
  public:
    explicit GeneratorStore(ConfOptions opts = {}) : opts_(opts) {}
    const GeneratorModule& get(const Family& fam, int degree);
    const std::string& tier(const Family& fam, int degree);
    const ConfOptions& options() const { return opts_; }

  private:
    ConfOptions opts_;
    std::map<std::pair<char, int>, GeneratorModule> store_;
    std::map<std::pair<char, int>, std::string> tiers_;
};

// F^i as an FB-module through up_to, reconstructed degreewise from its
// generator module.
FBModule factor_module(const Family& fam, int degree, int up_to, GeneratorStore& gens);

// Runs fisharp_contains(F^i (x) F^l, F^j (x) F^k) with vanish_above = 2m for
// every quadruple of degree sum m; per-quadruple errors are recorded and the
// run continues.
VerificationReport verify_degree(const Family& fam, int m, GeneratorStore& gens);

// FB-level consequence at a single point count n: containment of the
// degreewise Kronecker decompositions.
struct SelcResult {
    char family;
    Quadruple q;
    int points;
    bool contained;
    bool left_zero;
    std::optional<ContainWitness> witness;
};
std::vector<SelcResult> check_graded_selc(const Family& fam, int m, int n,
                                          GeneratorStore& gens);

// Reproduction of the four worked tables against embedded golden data.
struct ReproduceResult {
    std::string id;
    bool pass = false;
    std::string rendered;                // table with per-cell diff marks
    std::vector<std::string> mismatches; // one entry per differing cell
    std::vector<std::string> flags;      // documented annotations
};
ReproduceResult reproduce(const std::string& example_id, const ConfOptions& opts = {});

}  // namespace eqlc
