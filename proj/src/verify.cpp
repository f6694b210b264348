#include "eqlc/verify.hpp"

#include <chrono>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>

#include "eqlc/errors.hpp"
#include "eqlc/symfunc.hpp"

namespace eqlc {

std::string Quadruple::text() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
           std::to_string(l) + ")";
}

std::vector<Quadruple> enumerate_quadruples(int m) {
    if (m < 2) throw Error("enumerate_quadruples: m must be >= 2");
    std::vector<Quadruple> out;
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; 2 * j <= m; ++j) {
            int k = m - j, l = m - i;
            if (i < j && j <= k && k < l) out.push_back({i, j, k, l});
        }
    return out;
}

bool VerificationReport::all_contained() const {
    for (const auto& r : results)
        if (r.verdict != Verdict::contained) return false;
    return true;
}

const GeneratorModule& GeneratorStore::get(const Family& fam, int degree) {
    auto key = std::make_pair(fam.tag, degree);
    auto it = store_.find(key);
    if (it == store_.end()) {
        std::string tier;
        it = store_.emplace(key, conf_generators(fam, degree, opts_, &tier)).first;
        tiers_[key] = tier;
    }
    return it->second;
}

const std::string& GeneratorStore::tier(const Family& fam, int degree) {
    get(fam, degree);
    return tiers_.at(std::make_pair(fam.tag, degree));
}

FBModule factor_module(const Family& fam, int degree, int up_to, GeneratorStore& gens) {
    const GeneratorModule& g = gens.get(fam, degree);
    FBModule fb;
    fb.max_degree = up_to;
    for (int n = 0; n <= up_to; ++n) fb.set(n, m_functor(g, n));
    return fb;
}

namespace {

std::uint64_t quadruple_seed(char fam, const Quadruple& q) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t)fam;
    for (int v : {q.i, q.j, q.k, q.l}) h = (h ^ (std::uint64_t)v) * 0x100000001b3ull;
    return h;
}

// Re-derives the sampled H0 multiplicities through the symmetric-function
// route (from_rep * h, to_rep) instead of the combinatorial Pieri path, and
// re-affirms the inequality.  An inconsistency here is an internal error.
bool spot_check(const FBModule& x, const FBModule& y, const GeneratorModule& gsmall,
                const GeneratorModule& gbig, int bound, std::uint64_t seed) {
    std::vector<std::pair<int, Partition>> pool;
    for (auto& [n, d] : gsmall.fb.support)
        for (auto& [lam, c] : d.mults) pool.emplace_back(n, lam);
    for (auto& [n, d] : gbig.fb.support)
        for (auto& [lam, c] : d.mults) pool.emplace_back(n, lam);
    if (pool.empty()) return true;
    std::mt19937_64 rng(seed);
    auto image_mult = [&](const GeneratorModule& g, int n, const Partition& lam) {
        SymFunc total;
        for (auto& [a, d] : g.fb.support) {
            if (a >= n || d.is_zero()) continue;
            total += multiply(from_rep(d), h_sym(n - a));
        }
        if (total.is_zero()) return Int(0);
        return to_rep(total, n).mult(lam);
    };
    for (int t = 0; t < 3; ++t) {
        auto& [n, lam] = pool[rng() % pool.size()];
        Int small_h0 = x.at(n).mult(lam) - image_mult(gsmall, n, lam);
        Int big_h0 = y.at(n).mult(lam) - image_mult(gbig, n, lam);
        if (small_h0 != gsmall.fb.at(n).mult(lam)) return false;
        if (big_h0 != gbig.fb.at(n).mult(lam)) return false;
        if (small_h0 > big_h0) return false;
    }
    return true;
}

std::string combine_tiers(GeneratorStore& gens, const Family& fam,
                          std::initializer_list<int> degrees) {
    bool oracle = false, plethysm = false, cache = false, mixed = false;
    std::vector<int> seen;
    for (int d : degrees) {
        bool dup = false;
        for (int s : seen) dup |= s == d;
        if (dup) continue;
        seen.push_back(d);
        const std::string& t = gens.tier(fam, d);
        oracle |= t == "oracle";
        plethysm |= t == "plethysm";
        cache |= t == "cache";
        mixed |= t == "mixed";
    }
    if (mixed || (oracle && plethysm)) return "mixed";
    if (plethysm) return "plethysm";
    if (oracle) return "oracle";
    return "cache";
}

}  // namespace

VerificationReport verify_degree(const Family& fam, int m, GeneratorStore& gens) {
    VerificationReport report;
    report.family = fam.tag;
    int slack = gens.options().slack;
    for (const Quadruple& q : enumerate_quadruples(m)) {
        QuadrupleResult r;
        r.family = fam.tag;
        r.q = q;
        r.bound = 2 * m;
        auto t0 = std::chrono::steady_clock::now();
        try {
            int top = 2 * m + slack;
            FBModule fi = factor_module(fam, q.i, top, gens);
            FBModule fj = factor_module(fam, q.j, top, gens);
            FBModule fk = factor_module(fam, q.k, top, gens);
            FBModule fl = factor_module(fam, q.l, top, gens);
            FBModule x = fb_tensor(fi, fl, top);
            FBModule y = fb_tensor(fj, fk, top);
            FiSharpResult fs = fisharp_contains(x, y, 2 * m, slack);
            r.window_ok = true;  // h_zero throws otherwise
            r.tier = combine_tiers(gens, fam, {q.i, q.j, q.k, q.l});
            r.witness = fs.witness;
            if (fs.contained) {
                r.spot_check_ok =
                    spot_check(x, y, fs.gens_small, fs.gens_big, 2 * m, quadruple_seed(fam.tag, q));
                r.verdict = r.spot_check_ok ? Verdict::contained : Verdict::error;
                if (!r.spot_check_ok) r.error_msg = "spot-check re-verification failed";
            } else {
                r.spot_check_ok = true;
                r.verdict = Verdict::violated;
            }
        } catch (const Error& e) {
            r.verdict = Verdict::error;
            r.error_msg = e.what();
        }
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        report.results.push_back(std::move(r));
    }
    return report;
}

std::vector<SelcResult> check_graded_selc(const Family& fam, int m, int n,
                                          GeneratorStore& gens) {
    std::vector<SelcResult> out;
    for (const Quadruple& q : enumerate_quadruples(m)) {
        auto part = [&](int d) { return m_functor(gens.get(fam, d), n); };
        RepDecomposition left = kronecker(part(q.i), part(q.l));
        RepDecomposition right = kronecker(part(q.j), part(q.k));
        SelcResult r{fam.tag, q, n, true, left.is_zero(), std::nullopt};
        for (auto& [lam, c] : left.mults) {
            Int have = right.mult(lam);
            if (c > have) {
                r.contained = false;
                r.witness = ContainWitness{n, lam, c, have};
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Worked-table reproduction with embedded golden data.

namespace {

struct GoldenRow {
    int degree;
    const char* text;
};

// A^1 decompositions for n = 1..6.
const GoldenRow kA1Table[] = {
    {1, "0"},
    {2, "1*[2]"},
    {3, "1*[3] + 1*[2,1]"},
    {4, "1*[4] + 1*[3,1] + 1*[2,2]"},
    {5, "1*[5] + 1*[4,1] + 1*[3,2]"},
    {6, "1*[6] + 1*[5,1] + 1*[4,2]"},
};

// The three-row H0(A^1 (x) A^1) computation over i = 2, 3, 4.
const GoldenRow kA1A1Tensor[] = {
    {2, "1*[2]"},
    {3, "2*[3] + 3*[2,1] + 1*[1,1,1]"},
    {4, "3*[4] + 5*[3,1] + 4*[2,2] + 3*[2,1,1] + 1*[1,1,1,1]"},
};
const GoldenRow kA1A1MRow[] = {
    {2, "0"},
    {3, "1*[3] + 1*[2,1]"},
    {4, "2*[4] + 4*[3,1] + 3*[2,2] + 3*[2,1,1] + 1*[1,1,1,1]"},
};
// Degree 3 carries the corrected value: the printed table omits [1,1,1],
// but its own degree-4 M-row (which we match exactly) requires it.
const GoldenRow kA1A1H0[] = {
    {2, "1*[2]"},
    {3, "1*[3] + 2*[2,1] + 1*[1,1,1]"},
    {4, "1*[4] + 1*[3,1] + 1*[2,2]"},
};

// H0(A^1 (x) A^3) and H0(A^2 (x) A^2) for n = 3..8.
const GoldenRow kH0A1A3[] = {
    {3, "0"},
    {4, "1*[4] + 5*[3,1] + 2*[2,2] + 5*[2,1,1] + 1*[1,1,1,1]"},
    {5,
     "3*[5] + 12*[4,1] + 14*[3,2] + 16*[3,1,1] + 13*[2,2,1] + 9*[2,1,1,1] + "
     "2*[1,1,1,1,1]"},
    {6,
     "1*[6] + 9*[5,1] + 13*[4,2] + 16*[4,1,1] + 9*[3,3] + 21*[3,2,1] + 10*[3,1,1,1] + "
     "4*[2,2,2] + 9*[2,2,1,1] + 2*[2,1,1,1,1]"},
    {7,
     "2*[6,1] + 5*[5,2] + 5*[5,1,1] + 5*[4,3] + 10*[4,2,1] + 4*[4,1,1,1] + 5*[3,3,1] + "
     "4*[3,2,2] + 5*[3,2,1,1] + 1*[3,1,1,1,1] + 1*[2,2,2,1]"},
    {8,
     "1*[6,1,1] + 1*[5,3] + 1*[5,2,1] + 1*[5,1,1,1] + 2*[4,3,1] + 1*[4,2,1,1] + "
     "1*[3,3,2]"},
};
const GoldenRow kH0A2A2[] = {
    {3, "1*[3] + 1*[2,1] + 1*[1,1,1]"},
    {4, "5*[4] + 13*[3,1] + 9*[2,2] + 13*[2,1,1] + 4*[1,1,1,1]"},
    {5,
     "7*[5] + 25*[4,1] + 29*[3,2] + 33*[3,1,1] + 26*[2,2,1] + 19*[2,1,1,1] + "
     "4*[1,1,1,1,1]"},
    // [6]-multiplicity carries the corrected value 4: the printed 6 is
    // inconsistent with the table's own n=7,8 rows (matched exactly) and
    // with the dimension count 85^2 - (80 + 1575 + 3960) = 1610.
    {6,
     "4*[6] + 16*[5,1] + 26*[4,2] + 26*[4,1,1] + 13*[3,3] + 36*[3,2,1] + 19*[3,1,1,1] + "
     "10*[2,2,2] + 14*[2,2,1,1] + 5*[2,1,1,1,1]"},
    {7,
     "1*[7] + 4*[6,1] + 9*[5,2] + 8*[5,1,1] + 8*[4,3] + 15*[4,2,1] + 6*[4,1,1,1] + "
     "8*[3,3,1] + 7*[3,2,2] + 8*[3,2,1,1] + 1*[3,1,1,1,1] + 2*[2,2,2,1] + 1*[2,2,1,1,1]"},
    {8,
     "1*[6,2] + 1*[6,1,1] + 1*[5,3] + 2*[5,2,1] + 1*[5,1,1,1] + 1*[4,4] + 2*[4,3,1] + "
     "1*[4,2,2] + 1*[4,2,1,1] + 1*[3,3,2] + 1*[3,3,1,1]"},
};

// pi(Y) and pi(Z) for Y = M(V_[1]) + M(V_[2,1]), Z = M(V_[2]), n = 1..5.
const GoldenRow kPiY[] = {
    {1, "1*[1]"},
    {2, "1*[2] + 1*[1,1]"},
    {3, "1*[3] + 2*[2,1]"},
    {4, "1*[4] + 2*[3,1] + 1*[2,2] + 1*[2,1,1]"},
    {5, "1*[5] + 2*[4,1] + 1*[3,2] + 1*[3,1,1] + 1*[2,2,1]"},
};
const GoldenRow kPiZ[] = {
    {1, "0"},
    {2, "1*[2]"},
    {3, "1*[3] + 1*[2,1]"},
    {4, "1*[4] + 1*[3,1] + 1*[2,2]"},
    {5, "1*[5] + 1*[4,1] + 1*[3,2]"},
};

void diff_rows(const std::string& label, const GoldenRow* golden, std::size_t count,
               const std::function<std::string(int)>& computed, ReproduceResult& res,
               std::ostringstream& out) {
    for (std::size_t r = 0; r < count; ++r) {
        std::string got = computed(golden[r].degree);
        bool ok = got == golden[r].text;
        out << label << " n=" << golden[r].degree << " : " << got;
        if (!ok) {
            out << "   << expected: " << golden[r].text;
            res.mismatches.push_back(label + " n=" + std::to_string(golden[r].degree) +
                                     ": computed '" + got + "' expected '" + golden[r].text +
                                     "'");
        }
        out << "\n";
    }
}

}  // namespace

ReproduceResult reproduce(const std::string& example_id, const ConfOptions& opts) {
    ReproduceResult res;
    res.id = example_id;
    std::ostringstream out;

    if (example_id == "a1-table") {
        ConfModule mod = conf_fb_module(family_A(), 1, 6, opts);
        diff_rows("A^1", kA1Table, std::size(kA1Table),
                  [&](int n) { return mod.fb.at(n).text(); }, res, out);
        res.pass = res.mismatches.empty();
    } else if (example_id == "h0-a1a1") {
        ConfModule a1 = conf_fb_module(family_A(), 1, 4 + opts.slack, opts);
        FBModule tensor = fb_tensor(a1.fb, a1.fb, 4 + opts.slack);
        GeneratorModule gens = h_zero(tensor, 4, opts.slack);
        diff_rows("(A^1 (x) A^1)", kA1A1Tensor, std::size(kA1A1Tensor),
                  [&](int n) { return tensor.at(n).text(); }, res, out);
        auto m_row = [&](int n) {
            GeneratorModule below;
            below.fb = truncate_below(gens.fb, n);
            return m_functor(below, n).text();
        };
        diff_rows("M(H0_<i)", kA1A1MRow, std::size(kA1A1MRow), m_row, res, out);
        diff_rows("H0", kA1A1H0, std::size(kA1A1H0),
                  [&](int n) { return gens.fb.at(n).text(); }, res, out);
        res.flags.push_back(
            "degree-3 row: computed H0 = 1*[3] + 2*[2,1] + 1*[1,1,1]; the printed table "
            "omits the [1,1,1] summand, but its own degree-4 M-row (matched exactly above) "
            "requires it");
        res.pass = res.mismatches.empty();
    } else if (example_id == "h0-degree4-pair") {
        GeneratorStore gens(opts);
        int top = 8 + opts.slack;
        FBModule a1 = factor_module(family_A(), 1, top, gens);
        FBModule a2 = factor_module(family_A(), 2, top, gens);
        FBModule a3 = factor_module(family_A(), 3, top, gens);
        GeneratorModule left = h_zero(fb_tensor(a1, a3, top), 8, opts.slack);
        GeneratorModule right = h_zero(fb_tensor(a2, a2, top), 8, opts.slack);
        diff_rows("H0(A^1 (x) A^3)", kH0A1A3, std::size(kH0A1A3),
                  [&](int n) { return left.fb.at(n).text(); }, res, out);
        diff_rows("H0(A^2 (x) A^2)", kH0A2A2, std::size(kH0A2A2),
                  [&](int n) { return right.fb.at(n).text(); }, res, out);
        ContainResult c = fb_contains(right.fb, left.fb, 8);
        out << "generator containment H0(A^1 (x) A^3) <= H0(A^2 (x) A^2): "
            << (c.contained ? "yes" : "NO") << "\n";
        if (!c.contained) res.mismatches.push_back("expected generator containment");
        res.flags.push_back(
            "n=6 right column: computed [6]-multiplicity 4 where the printed table says 6; "
            "the printed value contradicts the same table's n=7,8 rows and the dimension "
            "count, both of which force 4");
        res.pass = res.mismatches.empty();
    } else if (example_id == "fb-containment-yz") {
        GeneratorModule gy, gz;
        gy.fb.max_degree = 3;
        {
            RepDecomposition v1(1);
            v1.add(Partition(std::vector<int>{1}), 1);
            gy.fb.set(1, std::move(v1));
            RepDecomposition v21(3);
            v21.add(Partition(std::vector<int>{2, 1}), 1);
            gy.fb.set(3, std::move(v21));
            RepDecomposition v2(2);
            v2.add(Partition(std::vector<int>{2}), 1);
            gz.fb.set(2, std::move(v2));
        }
        int top = 5;
        FBModule y, z;
        y.max_degree = top;
        z.max_degree = top;
        for (int n = 0; n <= top; ++n) {
            y.set(n, m_functor(gy, n));
            z.set(n, m_functor(gz, n));
        }
        diff_rows("pi(Y)", kPiY, std::size(kPiY), [&](int n) { return y.at(n).text(); }, res,
                  out);
        diff_rows("pi(Z)", kPiZ, std::size(kPiZ), [&](int n) { return z.at(n).text(); }, res,
                  out);
        ContainResult fb_ok = fb_contains(y, z, top);
        out << "pi(Y) contains pi(Z) through n=5: " << (fb_ok.contained ? "yes" : "NO") << "\n";
        if (!fb_ok.contained) res.mismatches.push_back("expected FB-level containment");
        FiSharpResult fi = fisharp_contains(z, y, 3, 1);
        out << "generator-level containment H0(Z) <= H0(Y): " << (fi.contained ? "yes" : "no");
        if (fi.witness)
            out << "  (witness: degree " << fi.witness->degree << ", "
                << fi.witness->label.text() << ")";
        out << "\n";
        if (fi.contained)
            res.mismatches.push_back("expected generator-level non-containment");
        res.flags.push_back(
            "FB-level containment holds while the generator modules do not embed: the "
            "[2]-generator of Z is absent from Y");
        res.pass = res.mismatches.empty();
    } else {
        throw Error("unknown example id '" + example_id +
                    "' (expected a1-table, h0-a1a1, h0-degree4-pair, fb-containment-yz)");
    }
    res.rendered = out.str();
    return res;
}

}  // namespace eqlc
