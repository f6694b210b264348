#include "eqlc/character.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "eqlc/cache.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/parallel.hpp"

namespace eqlc {

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
    if (n != o.n) throw WeightMismatchError("character weights differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

CharacterVector& CharacterVector::operator*=(const CharacterVector& o) {
    if (n != o.n) throw WeightMismatchError("character weights differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] *= o.values[i];
    return *this;
}

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& p, int r) {
    std::vector<std::pair<Partition, int>> out;
    int len = p.length();
    if (r <= 0 || r > p.weight()) return out;
    // beta-set: strictly decreasing first-column hook lengths
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = p.parts()[i] + (len - 1 - i);
    for (int i = 0; i < len; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        bool occupied = false;
        int passed = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == b) occupied = true;
            if (beta[j] > b && beta[j] < beta[i]) ++passed;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.emplace_back(Partition(std::move(parts)), passed);
    }
    return out;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (std::size_t)(x + 1);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using MnMemo = std::unordered_map<std::vector<int>, Int, VecHash>;

Int mn_rec(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t ci,
           MnMemo& memo) {
    if (ci == cycles.size()) return 1;  // shape is empty too (weights agree)
    std::vector<int> key = shape;
    key.push_back(-1);
    key.insert(key.end(), cycles.begin() + ci, cycles.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    int r = cycles[ci];
    for (auto& [rest, height] : remove_border_strips(Partition(std::vector<int>(shape)), r)) {
        Int sub = mn_rec(rest.parts(), cycles, ci + 1, memo);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    memo[std::move(key)] = total;
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw WeightMismatchError("mn_character: |lambda| = " + std::to_string(lambda.weight()) +
                                  " but |mu| = " + std::to_string(mu.weight()));
    static std::mutex mu_lock;
    static MnMemo memo;
    std::lock_guard<std::mutex> lock(mu_lock);
    return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

std::string CharacterTable::serialize() const {
    std::ostringstream out;
    out << "chartab v1 n=" << n << "\n";
    const auto& idx = WeightIndex::get(n);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out << idx.at(i).text() << " :";
        for (const Int& v : rows[i].values) out << ' ' << v.get_str();
        out << "\n";
    }
    return out.str();
}

CharacterTable parse_character_table(int n, std::istream& in, const std::string& origin) {
    auto corrupt = [&](const std::string& why) -> CacheCorruptError {
        return CacheCorruptError("corrupt character table cache " + origin + ": " + why);
    };
    std::string line;
    if (!std::getline(in, line)) throw corrupt("empty file");
    if (line != "chartab v1 n=" + std::to_string(n)) throw corrupt("bad header '" + line + "'");
    const auto& idx = WeightIndex::get(n);
    CharacterTable t;
    t.n = n;
    t.provenance = CharacterTable::Provenance::loaded;
    t.rows.assign(idx.size(), CharacterVector(n));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (!std::getline(in, line)) throw corrupt("missing row " + std::to_string(i));
        std::istringstream ss(line);
        std::string label, colon;
        ss >> label >> colon;
        if (label != idx.at(i).text() || colon != ":")
            throw corrupt("row " + std::to_string(i) + " mislabelled: '" + line + "'");
        for (std::size_t c = 0; c < idx.size(); ++c) {
            std::string v;
            if (!(ss >> v)) throw corrupt("row " + std::to_string(i) + " too short");
            try {
                t.rows[i].values[c] = Int(v);
            } catch (const std::invalid_argument&) {
                throw corrupt("non-integer entry '" + v + "'");
            }
        }
        std::string extra;
        if (ss >> extra) throw corrupt("row " + std::to_string(i) + " too long");
    }
    return t;
}

namespace {

// Exact orthogonality in both directions; the tripwire for every downstream
// decomposition.  Full check up to n=16, diagonal-only beyond.
void self_check(const CharacterTable& t) {
    int n = t.n;
    const auto& idx = WeightIndex::get(n);
    std::size_t p = idx.size();
    std::vector<Int> cls(p);
    for (std::size_t c = 0; c < p; ++c) cls[c] = class_size(idx.at(c));
    Int nfact = factorial(n);
    bool full = n <= 16;
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = full ? i : i; j <= (full ? p - 1 : i); ++j) {
            Int s = 0;
            for (std::size_t c = 0; c < p; ++c)
                s += cls[c] * t.rows[i].values[c] * t.rows[j].values[c];
            if (s != (i == j ? nfact : Int(0)))
                throw Error("character table self-check failed: row orthogonality at n=" +
                            std::to_string(n));
        }
    }
    if (full) {
        for (std::size_t c = 0; c < p; ++c) {
            for (std::size_t d = c; d < p; ++d) {
                Int s = 0;
                for (std::size_t i = 0; i < p; ++i)
                    s += t.rows[i].values[c] * t.rows[i].values[d];
                if (s != (c == d ? nfact / cls[c] : Int(0)))
                    throw Error("character table self-check failed: column orthogonality at n=" +
                                std::to_string(n));
            }
        }
    }
}

// Builds table n from the tables below it: stripping the largest cycle part
// maps each row to a signed sum of rows of a smaller table.
CharacterTable build_table(int n, const std::map<int, std::unique_ptr<const CharacterTable>>& store) {
    const auto& idx = WeightIndex::get(n);
    CharacterTable t;
    t.n = n;
    t.rows.assign(idx.size(), CharacterVector(n));
    if (n == 0) {
        t.rows[0].values[0] = 1;
        return t;
    }
    // group classes by largest part
    parallel_for(idx.size(), [&](std::size_t li) {
        const Partition& lam = idx.at(li);
        for (std::size_t c = 0; c < idx.size(); ++c) {
            const Partition& mu = idx.at(c);
            int r = mu.parts()[0];
            std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
            Partition rest(std::move(rest_parts));
            const CharacterTable& sub = *store.at(n - r);
            int rest_idx = WeightIndex::get(n - r).position(rest);
            Int v = 0;
            for (auto& [shape, height] : remove_border_strips(lam, r)) {
                const Int& s =
                    sub.rows[WeightIndex::get(n - r).position(shape)].values[rest_idx];
                if (height % 2)
                    v -= s;
                else
                    v += s;
            }
            t.rows[li].values[c] = v;
        }
    });
    return t;
}

}  // namespace

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const CharacterTable>> store;
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(n);
    if (it != store.end()) return *it->second;
    for (int k = 0; k <= n; ++k) {
        if (store.count(k)) continue;
        const auto& cfg = cache_config();
        auto file = cfg.dir / ("chartab_" + std::to_string(k) + ".txt");
        if (cfg.disk_enabled && std::filesystem::exists(file)) {
            std::ifstream in(file);
            auto t = std::make_unique<CharacterTable>(parse_character_table(k, in, file.string()));
            store.emplace(k, std::move(t));
            continue;
        }
        auto t = std::make_unique<CharacterTable>(build_table(k, store));
        self_check(*t);
        if (cfg.disk_enabled) atomic_write(file, t->serialize());
        store.emplace(k, std::move(t));
    }
    return *store.at(n);
}

Rat inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (a.n != b.n) throw WeightMismatchError("inner_product: weights differ");
    const auto& idx = WeightIndex::get(a.n);
    Int s = 0;
    for (std::size_t c = 0; c < idx.size(); ++c)
        s += class_size(idx.at(c)) * a.values[c] * b.values[c];
    Rat r(s, factorial(a.n));
    r.canonicalize();
    return r;
}

}  // namespace eqlc
