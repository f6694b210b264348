#include "eqlc/fi_sharp.hpp"

#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

std::string GeneratorModule::serialize() const {
    std::ostringstream out;
    out << "genmod v1\n";
    out << "provenance="
        << (provenance == Provenance::computed_h0 ? "computed_h0" : "constructed") << "\n";
    for (auto& [n, d] : fb.support) out << "n=" << n << " : " << d.text() << "\n";
    return out.str();
}

GeneratorModule parse_generator_module(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "genmod v1")
        throw CacheCorruptError("bad genmod header: '" + line + "'");
    if (!std::getline(in, line) || line.rfind("provenance=", 0) != 0)
        throw CacheCorruptError("genmod missing provenance line");
    GeneratorModule g;
    std::string prov = line.substr(11);
    if (prov == "computed_h0")
        g.provenance = GeneratorModule::Provenance::computed_h0;
    else if (prov == "constructed")
        g.provenance = GeneratorModule::Provenance::constructed;
    else
        throw CacheCorruptError("unknown genmod provenance '" + prov + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (line.rfind("n=", 0) != 0 || colon == std::string::npos)
            throw CacheCorruptError("bad genmod line: '" + line + "'");
        int n = std::stoi(line.substr(2, colon - 2));
        g.fb.set(n, parse_rep(line.substr(colon + 1), n));
    }
    return g;
}

RepDecomposition m_functor(const GeneratorModule& w, int n) {
    RepDecomposition out(n);
    for (auto& [a, d] : w.fb.support) {
        if (a > n) continue;
        out += pieri_induct(d, n);
    }
    return out;
}

RepDecomposition free_module(int m, int n) {
    RepDecomposition reg(m);
    for (const Partition& lam : enumerate_partitions(m)) reg.add(lam, hook_dimension(lam));
    GeneratorModule g;
    g.fb.set(m, std::move(reg));
    return m_functor(g, n);
}

GeneratorModule single_generator(const RepDecomposition& d) {
    GeneratorModule g;
    g.fb.max_degree = d.n;
    g.fb.set(d.n, d);
    return g;
}

GeneratorModule h_zero(const FBModule& v, int vanish_above, int slack) {
    if (slack < 1) throw Error("h_zero: consistency window requires slack >= 1");
    GeneratorModule gens;
    gens.provenance = GeneratorModule::Provenance::computed_h0;
    for (int n = 0; n <= vanish_above; ++n) {
        RepDecomposition vn = v.at(n);
        RepDecomposition image = m_functor(gens, n);
        RepDecomposition rest(n);
        for (auto& [lam, c] : vn.mults) {
            Int diff = c - image.mult(lam);
            if (diff < 0)
                throw NotInducedError("not an induced module: multiplicity of " + lam.text() +
                                          " drops below the M-image at degree " +
                                          std::to_string(n),
                                      n, lam.text());
            if (diff > 0) rest.add(lam, diff);
        }
        // every summand of the image must occur in v_n as well
        for (auto& [lam, c] : image.mults) {
            if (vn.mult(lam) < c)
                throw NotInducedError("not an induced module: M-image exceeds the module at " +
                                          lam.text() + ", degree " + std::to_string(n),
                                      n, lam.text());
        }
        gens.fb.set(n, std::move(rest));
    }
    gens.fb.max_degree = vanish_above;
    for (int n = vanish_above + 1; n <= vanish_above + slack; ++n) {
        if (m_functor(gens, n) != v.at(n))
            throw VanishBoundError(
                "vanish_above too small: generators fail to reproduce degree " +
                    std::to_string(n),
                n);
    }
    return gens;
}

FiSharpResult fisharp_contains(const FBModule& x, const FBModule& y, int vanish_above,
                               int slack) {
    FiSharpResult res;
    res.gens_small = h_zero(x, vanish_above, slack);
    res.gens_big = h_zero(y, vanish_above, slack);
    ContainResult c = fb_contains(res.gens_big.fb, res.gens_small.fb, vanish_above);
    res.contained = c.contained;
    res.witness = c.witness;
    return res;
}

}  // namespace eqlc
