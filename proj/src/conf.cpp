#include "eqlc/conf.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>
#include <sstream>

#include "eqlc/cache.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/parallel.hpp"

namespace eqlc {

const Family& family_A() {
    static Family f{'A', +1, -1};
    return f;
}

const Family& family_C() {
    static Family f{'C', -1, +1};
    return f;
}

const Family& family_from_tag(char tag) {
    if (tag == 'A' || tag == 'a') return family_A();
    if (tag == 'C' || tag == 'c') return family_C();
    throw Error(std::string("unknown family tag '") + tag + "'");
}

Int nbc_count(int n, int i) {
    if (i < 0 || n < 0) return 0;
    // coefficient of t^i in prod_{k=1}^{n-1} (1 + k t)
    std::vector<Int> coeff{1};
    for (int k = 1; k <= n - 1; ++k) {
        coeff.push_back(0);
        for (int d = (int)coeff.size() - 1; d >= 1; --d) coeff[d] += k * coeff[d - 1];
    }
    return i < (int)coeff.size() ? coeff[i] : Int(0);
}

namespace {

constexpr int kMaxDeg = 20;

// Packed normal-form monomial: factors (a<<8)|b sorted by strictly
// increasing larger index a.  Indices stay below 256.
struct Mono {
    std::uint8_t len = 0;
    std::array<std::uint16_t, kMaxDeg> f{};

    bool operator==(const Mono& o) const { return len == o.len && f == o.f; }
};

inline int larger(std::uint16_t packed) { return packed >> 8; }
inline int smaller(std::uint16_t packed) { return packed & 0xff; }
inline std::uint16_t pack(int a, int b) { return (std::uint16_t)((a << 8) | b); }

// Straightening expansions stay tiny; a flat vector with linear merge beats
// a map here.
using Expansion = std::vector<std::pair<Mono, long long>>;

void expansion_add(Expansion& out, const Mono& m, long long c) {
    for (auto& [em, ec] : out) {
        if (em == m) {
            ec += c;
            return;
        }
    }
    out.emplace_back(m, c);
}

// Multiply a normal monomial by one canonical generator (a > b), resolving a
// shared larger index through the Arnold rewrite.  The rewrite strictly
// lowers the multiset of larger indices, so the recursion terminates.
void mul(const Mono& m, int a, int b, long long coeff, const Family& fam, Expansion& out) {
    int pos = 0;
    while (pos < m.len && larger(m.f[pos]) < a) ++pos;
    if (pos < m.len && larger(m.f[pos]) == a) {
        int c = smaller(m.f[pos]);
        if (c == b) return;  // square
        int crossings = m.len - pos - 1;
        long long s = (fam.comm_sign < 0 && (crossings & 1)) ? -coeff : coeff;
        Mono base;
        base.len = m.len - 1;
        for (int k = 0, t = 0; k < m.len; ++k)
            if (k != pos) base.f[t++] = m.f[k];
        int w_hi = std::max(b, c), w_lo = std::min(b, c);
        // A: e_ac e_ab = e_w e_ab - e_w e_ac;  C: e_w e_amax - e_w e_amin
        int x_plus = fam.comm_sign < 0 ? b : std::max(b, c);
        int x_minus = fam.comm_sign < 0 ? c : std::min(b, c);
        Expansion tmp;
        mul(base, w_hi, w_lo, s, fam, tmp);
        for (auto& [m2, c2] : tmp) {
            if (!c2) continue;
            mul(m2, a, x_plus, c2, fam, out);
            mul(m2, a, x_minus, -c2, fam, out);
        }
        return;
    }
    int crossings = m.len - pos;
    long long s = (fam.comm_sign < 0 && (crossings & 1)) ? -coeff : coeff;
    Mono res = m;
    for (int k = m.len; k > pos; --k) res.f[k] = res.f[k - 1];
    res.f[pos] = pack(a, b);
    res.len = m.len + 1;
    expansion_add(out, res, s);
}

// Canonicalizes one raw factor; returns the swap sign.
int canonical_factor(int& a, int& b, const Family& fam, int n) {
    if (a < 1 || a > n || b < 1 || b > n)
        throw IndexRangeError("generator index outside [1," + std::to_string(n) + "]");
    if (a == b) throw Error("generator w_aa is undefined");
    if (a < b) {
        std::swap(a, b);
        return fam.swap_sign;
    }
    return 1;
}

Expansion straighten_packed(const std::vector<GeneratorPair>& word, const Family& fam, int n) {
    if ((int)word.size() > kMaxDeg) throw Error("word degree exceeds internal limit");
    Expansion cur;
    cur.emplace_back(Mono{}, 1);
    for (auto [a, b] : word) {
        int sign = canonical_factor(a, b, fam, n);
        Expansion next;
        for (auto& [m, c] : cur) {
            if (!c) continue;
            mul(m, a, b, c * sign, fam, next);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::map<NbcMonomial, long long> straighten(const std::vector<GeneratorPair>& word,
                                            const Family& fam, int n) {
    std::map<NbcMonomial, long long> out;
    for (auto& [m, c] : straighten_packed(word, fam, n)) {
        if (!c) continue;
        NbcMonomial key;
        for (int k = 0; k < m.len; ++k) key.emplace_back(larger(m.f[k]), smaller(m.f[k]));
        out[key] = c;
    }
    return out;
}

namespace {

// Cycles of the representative permutation filled with consecutive integers,
// largest cycles first (canonical cycle type order).
std::vector<int> class_representative(const Partition& mu) {
    int n = mu.weight();
    std::vector<int> perm(n + 1);
    int next = 1;
    for (int part : mu.parts()) {
        for (int k = 0; k < part; ++k) perm[next + k] = (k + 1 < part) ? next + k + 1 : next;
        next += part;
    }
    return perm;
}

// Coefficient of `mono` in its own relabeled, straightened image.
long long self_coefficient(const Mono& mono, const std::vector<int>& perm, const Family& fam) {
    Expansion cur;
    cur.emplace_back(Mono{}, 1);
    for (int t = 0; t < mono.len; ++t) {
        int a = perm[larger(mono.f[t])];
        int b = perm[smaller(mono.f[t])];
        int sign = 1;
        if (a < b) {
            std::swap(a, b);
            sign = fam.swap_sign;
        }
        Expansion next;
        for (auto& [m, c] : cur) {
            if (!c) continue;
            mul(m, a, b, c * sign, fam, next);
        }
        cur = std::move(next);
    }
    for (auto& [m, c] : cur)
        if (m == mono) return c;
    return 0;
}

template <typename Fn>
void for_each_monomial(int n, int i, Fn&& fn) {
    Mono mono;
    auto rec = [&](auto&& self, int min_larger, int remaining) -> void {
        if (remaining == 0) {
            fn(mono);
            return;
        }
        // need `remaining` distinct larger indices <= n
        for (int a = min_larger; a + remaining - 1 <= n; ++a) {
            for (int b = 1; b < a; ++b) {
                mono.f[mono.len++] = pack(a, b);
                self(self, a + 1, remaining - 1);
                --mono.len;
            }
        }
    };
    rec(rec, 2, i);
}

}  // namespace

CharacterVector oracle_character(const Family& fam, int i, int n, long long oracle_budget) {
    const auto& idx = WeightIndex::get(n);
    CharacterVector out(n);
    if (i == 0) {  // H^0 of a connected space
        for (auto& v : out.values) v = 1;
        return out;
    }
    if (n > 255) throw Error("oracle tier limited to n <= 255");
    Int count = nbc_count(n, i);
    if (count > Int((long)oracle_budget))
        throw BudgetExceededError("oracle basis for (" + std::string(1, fam.tag) + "," +
                                  std::to_string(i) + "," + std::to_string(n) + ") has " +
                                  count.get_str() + " monomials (budget " +
                                  std::to_string(oracle_budget) + "); use tier 2");
    parallel_for(idx.size(), [&](std::size_t c) {
        const Partition& mu = idx.at(c);
        if (mu.length() == n) {  // identity: every monomial is fixed
            out.values[c] = count;
            return;
        }
        std::vector<int> perm = class_representative(mu);
        long long trace = 0;
        for_each_monomial(n, i, [&](const Mono& mono) {
            trace += self_coefficient(mono, perm, fam);
        });
        out.values[c] = Int((long)trace);
    });
    return out;
}

SymFunc tier2_frobenius(const Family& fam, int i, int n, const TwistConvention& conv) {
    SymFunc total;
    for (const Partition& lam : enumerate_partitions(n)) {
        if (lam.length() != n - i) continue;
        SymFunc prod = p_single(Partition(), 1);
        int t = 0;
        const auto& parts = lam.parts();
        while (t < (int)parts.size()) {
            int j = parts[t];
            int m = 0;
            while (t < (int)parts.size() && parts[t] == j) {
                ++m;
                ++t;
            }
            SymFunc inner = lie_character(j);
            if (conv.twist_even_blocks && j % 2 == 0) inner = omega(inner);
            bool outer_e = (j % 2 == 0) ? conv.outer_even_is_e : conv.outer_odd_is_e;
            SymFunc outer = outer_e ? e_sym(m) : h_sym(m);
            prod = multiply(prod, plethysm(outer, inner, n), n);
        }
        total += prod;
    }
    return total;
}

const TwistConvention& calibrated_convention(const Family& fam) {
    static std::mutex mu;
    static std::map<char, TwistConvention> store;
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(fam.tag);
    if (it != store.end()) return it->second;

    std::vector<TwistConvention> survivors;
    for (int twist = 0; twist <= 1; ++twist)
        for (int oe = 0; oe <= 1; ++oe)
            for (int oo = 0; oo <= 1; ++oo) {
                TwistConvention conv{twist == 1, oe == 1, oo == 1};
                bool ok = true;
                for (int i = 1; i <= 3 && ok; ++i) {
                    for (int n = 1; n <= 8 && ok; ++n) {
                        CharacterVector oracle = oracle_character(fam, i, n);
                        CharacterVector t2 = to_character(tier2_frobenius(fam, i, n, conv), n);
                        ok = oracle.values == t2.values;
                    }
                }
                if (ok) survivors.push_back(conv);
            }
    if (survivors.empty())
        throw CalibrationError(std::string("no twist convention matches the oracle for family ") +
                               fam.tag);
    if (survivors.size() > 1)
        throw CalibrationError(std::string("twist convention ambiguous for family ") + fam.tag);
    return store.emplace(fam.tag, survivors.front()).first->second;
}

CharacterVector tier2_character(const Family& fam, int i, int n) {
    if (i == 0) return oracle_character(fam, 0, n);
    const TwistConvention& conv = calibrated_convention(fam);
    return to_character(tier2_frobenius(fam, i, n, conv), n);
}

namespace {

std::mutex conf_cache_mutex;
std::map<std::tuple<char, int, int>, ConfEntry> conf_memory_cache;

std::string conf_key(const Family& fam, int i, int n) {
    return "conf " + std::string(1, fam.tag) + " i=" + std::to_string(i) +
           " n=" + std::to_string(n);
}

std::filesystem::path conf_path(const Family& fam, int i, int n) {
    return cache_config().dir / ("conf_" + std::string(1, fam.tag) + "_i" + std::to_string(i) +
                                 "_n" + std::to_string(n) + ".txt");
}

}  // namespace

ConfEntry conf_character_decomposition(const Family& fam, int i, int n, const ConfOptions& opts) {
    {
        std::lock_guard<std::mutex> lock(conf_cache_mutex);
        auto it = conf_memory_cache.find({fam.tag, i, n});
        if (it != conf_memory_cache.end()) return it->second;
    }
    const auto& cfg = cache_config();
    auto file = conf_path(fam, i, n);
    if (cfg.disk_enabled && std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::string header, body;
        if (!std::getline(in, header) || header != conf_key(fam, i, n))
            throw CacheCorruptError("corrupt conf cache " + file.string());
        if (!std::getline(in, body)) throw CacheCorruptError("corrupt conf cache " + file.string());
        ConfEntry e{parse_rep(body, n), "cache"};
        std::lock_guard<std::mutex> lock(conf_cache_mutex);
        conf_memory_cache.insert_or_assign({fam.tag, i, n}, e);
        return e;
    }
    CharacterVector chi;
    std::string tier;
    switch (opts.tier) {
        case TierPolicy::oracle:
            chi = oracle_character(fam, i, n, opts.oracle_budget);
            tier = "oracle";
            break;
        case TierPolicy::plethysm:
            chi = tier2_character(fam, i, n);
            tier = "plethysm";
            break;
        case TierPolicy::auto_policy:
            if (i == 0 || nbc_count(n, i) <= Int((long)opts.oracle_budget)) {
                chi = oracle_character(fam, i, n, opts.oracle_budget);
                tier = "oracle";
            } else {
                chi = tier2_character(fam, i, n);
                tier = "plethysm";
            }
            break;
    }
    ConfEntry e{decompose(chi), tier};
    if (cfg.disk_enabled)
        atomic_write(file, conf_key(fam, i, n) + "\n" + e.rep.text() + "\ntier=" + tier + "\n");
    std::lock_guard<std::mutex> lock(conf_cache_mutex);
    conf_memory_cache.insert_or_assign({fam.tag, i, n}, e);
    return e;
}

ConfModule conf_fb_module(const Family& fam, int i, int up_to, const ConfOptions& opts) {
    ConfModule mod;
    mod.family_tag = fam.tag;
    mod.i = i;
    mod.sharp_bound = fam.tag == 'A' ? 3 * i + 1 : 3 * i;
    mod.fb.max_degree = up_to;
    for (int n = 0; n <= up_to; ++n) {
        ConfEntry e = conf_character_decomposition(fam, i, n, opts);
        mod.tiers_used.push_back(e.tier);
        mod.fb.set(n, std::move(e.rep));
    }
    mod.stabilization = stabilization_degree(mod.fb, up_to);
    if (mod.stabilization) mod.fb.stable_from = mod.stabilization;
    return mod;
}

namespace {

std::string summarize_tiers(const std::vector<std::string>& tiers) {
    bool oracle = false, plethysm = false;
    for (const auto& t : tiers) {
        if (t == "oracle") oracle = true;
        if (t == "plethysm") plethysm = true;
    }
    if (oracle && plethysm) return "mixed";
    if (plethysm) return "plethysm";
    if (oracle) return "oracle";
    return "cache";
}

}  // namespace

GeneratorModule conf_generators(const Family& fam, int i, const ConfOptions& opts,
                                std::string* tier_used) {
    const auto& cfg = cache_config();
    auto file = cfg.dir / ("gens_" + std::string(1, fam.tag) + "_i" + std::to_string(i) + ".txt");
    if (cfg.disk_enabled && std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        if (tier_used) *tier_used = "cache";
        return parse_generator_module(buf.str());
    }
    if (i == 0) {
        GeneratorModule g;
        g.provenance = GeneratorModule::Provenance::computed_h0;
        RepDecomposition triv(0);
        triv.add(Partition(), 1);
        g.fb.set(0, std::move(triv));
        if (cfg.disk_enabled) atomic_write(file, g.serialize());
        if (tier_used) *tier_used = "oracle";
        return g;
    }
    ConfModule mod = conf_fb_module(fam, i, 2 * i + opts.slack, opts);
    if (tier_used) *tier_used = summarize_tiers(mod.tiers_used);
    GeneratorModule gens = h_zero(mod.fb, 2 * i, opts.slack);
    for (auto& [deg, d] : gens.fb.support) {
        if (d.is_zero()) continue;
        if (deg < i + 1 || deg > 2 * i)
            throw Error("generator support of (" + std::string(1, fam.tag) + "^" +
                        std::to_string(i) + ") escapes the band [" + std::to_string(i + 1) + "," +
                        std::to_string(2 * i) + "] at degree " + std::to_string(deg));
    }
    if (cfg.disk_enabled) atomic_write(file, gens.serialize());
    return gens;
}

}  // namespace eqlc
