#include "eqlc/fb_module.hpp"

#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

RepDecomposition FBModule::at(int n) const {
    if (n < 0) throw UndefinedDegreeError("negative degree");
    if (n <= max_degree) {
        auto it = support.find(n);
        return it == support.end() ? RepDecomposition(n) : it->second;
    }
    if (stable_from && *stable_from <= max_degree) return extend_stable(*this, *stable_from, n);
    throw UndefinedDegreeError("degree " + std::to_string(n) + " above explicit support " +
                               std::to_string(max_degree) + " and no stable tail");
}

void FBModule::set(int n, RepDecomposition d) {
    if (d.n != n) throw WeightMismatchError("degree " + std::to_string(n) + " given weight-" +
                                            std::to_string(d.n) + " decomposition");
    if (n > max_degree) max_degree = n;
    if (d.is_zero())
        support.erase(n);
    else
        support[n] = std::move(d);
}

std::string FBModule::serialize() const {
    std::ostringstream out;
    out << "fbmod v1\n";
    for (auto& [n, d] : support) out << "n=" << n << " : " << d.text() << "\n";
    if (stable_from) out << "stable_from=" << *stable_from << "\n";
    return out.str();
}

FBModule parse_fb_module(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "fbmod v1")
        throw CacheCorruptError("bad fbmod header: '" + line + "'");
    FBModule m;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("stable_from=", 0) == 0) {
            m.stable_from = std::stoi(line.substr(12));
            continue;
        }
        if (line.rfind("n=", 0) != 0) throw CacheCorruptError("bad fbmod line: '" + line + "'");
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw CacheCorruptError("bad fbmod line: '" + line + "'");
        int n = std::stoi(line.substr(2, colon - 2));
        m.set(n, parse_rep(line.substr(colon + 1), n));
    }
    return m;
}

FBModule fb_tensor(const FBModule& v, const FBModule& w, int up_to) {
    FBModule out;
    out.max_degree = up_to;
    for (int n = 0; n <= up_to; ++n) {
        if (!v.defined_at(n) || !w.defined_at(n))
            throw UndefinedDegreeError("tensor factor undefined at degree " + std::to_string(n));
        out.set(n, kronecker(v.at(n), w.at(n)));
    }
    return out;
}

ContainResult fb_contains(const FBModule& big, const FBModule& small, int up_to) {
    for (int n = 0; n <= up_to; ++n) {
        RepDecomposition s = small.at(n);
        RepDecomposition b = big.at(n);
        for (auto& [lam, c] : s.mults) {
            Int have = b.mult(lam);
            if (c > have)
                return ContainResult{false, ContainWitness{n, lam, c, have}};
        }
    }
    return ContainResult{true, std::nullopt};
}

std::optional<int> stabilization_degree(const FBModule& v, int search_up_to) {
    if (search_up_to > v.max_degree)
        throw UndefinedDegreeError("stabilization search beyond explicit support");
    auto grows_to = [&](int m, int n) {
        RepDecomposition grown(n);
        for (auto& [lam, c] : v.at(m).mults) grown.add(first_row_grow(lam, n), c);
        return grown == v.at(n);
    };
    for (int m = 0; m < search_up_to; ++m) {
        bool ok = true;
        for (int n = m + 1; n <= search_up_to && ok; ++n) ok = grows_to(m, n);
        if (ok) return m;
    }
    return std::nullopt;
}

RepDecomposition extend_stable(const FBModule& v, int m, int n) {
    if (n <= m) throw Error("extend_stable: n must exceed the stabilization degree");
    RepDecomposition out(n);
    for (auto& [lam, c] : v.at(m).mults) out.add(first_row_grow(lam, n), c);
    return out;
}

FBModule truncate_below(const FBModule& v, int n) {
    FBModule out;
    out.max_degree = v.max_degree;
    for (auto& [deg, d] : v.support)
        if (deg < n) out.support.emplace(deg, d);
    return out;
}

}  // namespace eqlc
