#include "eqlc/symfunc.hpp"

#include <algorithm>
#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

void SymFunc::add(const Partition& idx, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (auto& [idx, c] : o.terms) add(idx, c);
    return *this;
}

std::string SymFunc::text() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [idx, c] : terms) {
        if (!first) out << " + ";
        out << c.get_str() << "*p" << idx.text();
        first = false;
    }
    return out.str();
}

SymFunc p_single(const Partition& idx, const Rat& c) {
    SymFunc f;
    f.add(idx, c);
    return f;
}

SymFunc from_rep(const RepDecomposition& d) {
    SymFunc f;
    const CharacterTable& t = character_table(d.n);
    const auto& idx = WeightIndex::get(d.n);
    for (std::size_t c = 0; c < idx.size(); ++c) {
        Int chi = 0;
        for (auto& [lam, mult] : d.mults) chi += mult * t.value(lam, idx.at(c));
        if (chi == 0) continue;
        Rat coeff(chi, z_of(idx.at(c)));
        coeff.canonicalize();
        f.add(idx.at(c), coeff);
    }
    return f;
}

CharacterVector to_character(const SymFunc& f, int n) {
    const auto& idx = WeightIndex::get(n);
    CharacterVector chi(n);
    for (auto& [mu, c] : f.terms) {
        if (mu.weight() != n)
            throw WeightMismatchError("to_character: term " + mu.text() +
                                      " is not of degree " + std::to_string(n));
        Rat v = c * z_of(mu);
        v.canonicalize();
        if (v.get_den() != 1)
            throw VirtualCharacterError("non-integral character value at class " + mu.text(),
                                        mu.text());
        chi.at(mu) = v.get_num();
    }
    return chi;
}

RepDecomposition to_rep(const SymFunc& f, int n) {
    // <f, s_lambda> = sum_mu f_mu chi_lambda(mu) under the z-weighted pairing
    const CharacterTable& t = character_table(n);
    const auto& idx = WeightIndex::get(n);
    RepDecomposition out(n);
    for (std::size_t li = 0; li < idx.size(); ++li) {
        Rat m = 0;
        for (auto& [mu, c] : f.terms) {
            if (mu.weight() != n)
                throw WeightMismatchError("to_rep: term " + mu.text() + " is not of degree " +
                                          std::to_string(n));
            m += c * t.rows[li].values[WeightIndex::get(n).position(mu)];
        }
        m.canonicalize();
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0)
            throw VirtualCharacterError("not a genuine character: coefficient " + m.get_str() +
                                            " at " + idx.at(li).text(),
                                        idx.at(li).text());
        out.add(idx.at(li), m.get_num());
    }
    return out;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g, int cap) {
    SymFunc out;
    for (auto& [a, ca] : f.terms)
        for (auto& [b, cb] : g.terms) {
            if (cap >= 0 && a.weight() + b.weight() > cap) continue;
            Rat c = ca * cb;
            c.canonicalize();
            out.add(merge_parts(a, b), c);
        }
    return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int cap) {
    if (cap < 0) throw Error("plethysm requires an explicit degree cap");
    // p_r[g] for each distinct part size r appearing in f
    std::map<int, SymFunc> pr_of_g;
    for (auto& [lam, c] : f.terms)
        for (int r : lam.parts()) pr_of_g.emplace(r, SymFunc{});
    for (auto& [r, val] : pr_of_g) {
        for (auto& [mu, c] : g.terms) {
            std::vector<int> scaled;
            scaled.reserve(mu.length());
            for (int part : mu.parts()) scaled.push_back(part * r);
            if (cap >= 0) {
                int w = 0;
                for (int s : scaled) w += s;
                if (w > cap) continue;
            }
            val.add(Partition(std::move(scaled)), c);
        }
    }
    SymFunc out;
    for (auto& [lam, c] : f.terms) {
        SymFunc prod = p_single(Partition(), 1);
        for (int r : lam.parts()) prod = multiply(prod, pr_of_g.at(r), cap);
        for (auto& [idx, pc] : prod.terms) {
            Rat v = c * pc;
            v.canonicalize();
            out.add(idx, v);
        }
    }
    return out;
}

SymFunc h_sym(int m) {
    SymFunc f;
    for (const Partition& lam : enumerate_partitions(m)) {
        Rat c(Int(1), z_of(lam));
        c.canonicalize();
        f.add(lam, c);
    }
    return f;
}

SymFunc e_sym(int m) {
    SymFunc f;
    for (const Partition& lam : enumerate_partitions(m)) {
        Rat c(Int((m - lam.length()) % 2 ? -1 : 1), z_of(lam));
        c.canonicalize();
        f.add(lam, c);
    }
    return f;
}

SymFunc omega(const SymFunc& f) {
    SymFunc out;
    for (auto& [lam, c] : f.terms)
        out.add(lam, (lam.weight() - lam.length()) % 2 ? Rat(-c) : c);
    return out;
}

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

SymFunc lie_character(int j) {
    if (j < 1) throw Error("lie_character: j must be >= 1");
    SymFunc f;
    for (int d = 1; d <= j; ++d) {
        if (j % d) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        Rat c = Rat(Int(mu), Int(j));
        c.canonicalize();
        f.add(Partition(std::vector<int>(j / d, d)), c);
    }
    return f;
}

}  // namespace eqlc
