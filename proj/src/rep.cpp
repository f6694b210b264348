#include "eqlc/rep.hpp"

#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

void RepDecomposition::add(const Partition& label, const Int& count) {
    if (label.weight() != n)
        throw WeightMismatchError("summand " + label.text() + " has weight " +
                                  std::to_string(label.weight()) + ", expected " +
                                  std::to_string(n));
    if (count == 0) return;
    auto [it, fresh] = mults.emplace(label, count);
    if (!fresh) {
        it->second += count;
        if (it->second == 0) mults.erase(it);
    }
}

Int RepDecomposition::mult(const Partition& label) const {
    auto it = mults.find(label);
    return it == mults.end() ? Int(0) : it->second;
}

Int RepDecomposition::dimension() const {
    Int d = 0;
    for (auto& [lam, c] : mults) d += c * hook_dimension(lam);
    return d;
}

CharacterVector RepDecomposition::character() const {
    const CharacterTable& t = character_table(n);
    CharacterVector out(n);
    for (auto& [lam, c] : mults) {
        const CharacterVector& row = t.row(lam);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += c * row.values[i];
    }
    return out;
}

std::string RepDecomposition::text() const {
    if (mults.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [lam, c] : mults) {
        if (!first) out << " + ";
        out << c.get_str() << "*" << lam.text();
        first = false;
    }
    return out.str();
}

RepDecomposition& RepDecomposition::operator+=(const RepDecomposition& o) {
    if (n != o.n) throw WeightMismatchError("rep weights differ");
    for (auto& [lam, c] : o.mults) add(lam, c);
    return *this;
}

RepDecomposition parse_rep(const std::string& s, int n) {
    RepDecomposition d(n);
    std::string trimmed;
    for (char ch : s)
        if (!isspace((unsigned char)ch)) trimmed += ch;
    if (trimmed == "0" || trimmed.empty()) return d;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        auto star = trimmed.find('*', pos);
        auto close = trimmed.find(']', pos);
        if (star == std::string::npos || close == std::string::npos)
            throw Error("malformed decomposition text: " + s);
        Int c(trimmed.substr(pos, star - pos));
        if (c < 0) throw Error("negative multiplicity in decomposition text: " + s);
        d.add(parse_partition(trimmed.substr(star + 1, close - star)), c);
        pos = close + 1;
        if (pos < trimmed.size()) {
            if (trimmed[pos] != '+') throw Error("malformed decomposition text: " + s);
            ++pos;
        }
    }
    return d;
}

RepDecomposition decompose(const CharacterVector& chi) {
    int n = chi.n;
    const auto& idx = WeightIndex::get(n);
    const CharacterTable& t = character_table(n);
    std::vector<Int> cls(idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) cls[c] = class_size(idx.at(c));
    Int nfact = factorial(n);
    RepDecomposition out(n);
    for (std::size_t li = 0; li < idx.size(); ++li) {
        Int s = 0;
        for (std::size_t c = 0; c < idx.size(); ++c)
            s += cls[c] * chi.values[c] * t.rows[li].values[c];
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), nfact.get_mpz_t());
        if (r != 0)
            throw VirtualCharacterError("not a genuine character: fractional multiplicity at " +
                                            idx.at(li).text(),
                                        idx.at(li).text());
        if (q < 0)
            throw VirtualCharacterError("not a genuine character: negative multiplicity at " +
                                            idx.at(li).text(),
                                        idx.at(li).text());
        if (q != 0) out.add(idx.at(li), q);
    }
    return out;
}

RepDecomposition kronecker(const RepDecomposition& a, const RepDecomposition& b) {
    if (a.n != b.n) throw WeightMismatchError("kronecker: weights differ");
    if (a.is_zero() || b.is_zero()) return RepDecomposition(a.n);
    CharacterVector ca = a.character();
    ca *= b.character();
    return decompose(ca);
}

std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int n) {
    int add = n - lambda.weight();
    std::vector<Partition> out;
    if (add < 0) return out;
    if (add == 0) {
        out.push_back(lambda);
        return out;
    }
    int len = lambda.length();
    std::vector<int> mu(len + 1, 0);
    // interlacing: lambda_{i-1} >= mu_i >= lambda_i
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row > len) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int i = 0; i <= len; ++i)
                    if (mu[i] > 0) parts.push_back(mu[i]);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int lo = lambda.part(row);
        int hi = row == 0 ? lambda.part(0) + remaining
                          : std::min(lambda.part(row - 1), lo + remaining);
        for (int v = hi; v >= lo; --v) {
            mu[row] = v;
            self(self, row + 1, remaining - (v - lo));
        }
        mu[row] = 0;
    };
    rec(rec, 0, add);
    return out;
}

RepDecomposition pieri_induct(const RepDecomposition& w, int n) {
    if (n < w.n)
        throw Error("pieri_induct: target weight " + std::to_string(n) + " below " +
                    std::to_string(w.n));
    RepDecomposition out(n);
    for (auto& [lam, c] : w.mults)
        for (const Partition& mu : horizontal_strip_extensions(lam, n)) out.add(mu, c);
    return out;
}

RepDecomposition sign_twist(const RepDecomposition& d) {
    RepDecomposition out(d.n);
    for (auto& [lam, c] : d.mults) out.add(conjugate(lam), c);
    return out;
}

}  // namespace eqlc
