#include "cparking/json_io.hpp"

#include <algorithm>

namespace cparking {

json to_json(const QTCoeff& c) {
    json arr = json::array();
    for (const auto& [k, v] : c.terms()) {
        arr.push_back({{"q", k.first},
                       {"t", k.second},
                       {"num", v.get_num().get_str()},
                       {"den", v.get_den().get_str()}});
    }
    return arr;
}

QTCoeff qtcoeff_from_json(const json& j) {
    QTCoeff c;
    for (const auto& term : j) {
        Rat v(mpz_class(term.at("num").get<std::string>()),
              mpz_class(term.at("den").get<std::string>()));
        c += QTCoeff::monomial(term.at("q").get<int>(), term.at("t").get<int>(), v);
    }
    return c;
}

json to_json(const QTRatFun& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

QTRatFun ratfun_from_json(const json& j) {
    return QTRatFun(qtcoeff_from_json(j.at("num")), qtcoeff_from_json(j.at("den")));
}

json to_json(const LabeledPath& p) {
    json j{{"m", p.m},
           {"n", p.n},
           {"start_x", p.start_x()},
           {"north_x", p.north_x},
           {"labels", p.labels}};
    if (!p.is_cyclic()) j["end_x"] = p.end_x;
    return j;
}

LabeledPath path_from_json(const json& j) {
    LabeledPath p;
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    p.north_x = j.at("north_x").get<std::vector<int>>();
    p.labels = j.at("labels").get<std::vector<int>>();
    if (j.contains("start_x") && j.at("start_x").get<int>() != p.north_x.front())
        throw std::domain_error("path JSON: start_x must equal north_x[0]");
    p.end_x = j.contains("end_x") ? j.at("end_x").get<int>() : p.north_x.front() + p.m;
    return p;
}

json to_json(const PathTuple& t) {
    json paths = json::array();
    for (const auto& c : t.comps) paths.push_back(to_json(c));
    json j{{"m", t.m}, {"n", t.n}, {"paths", paths}};
    if (!t.perm.empty()) j["perm"] = t.perm;
    return j;
}

PathTuple tuple_from_json(const json& j) {
    PathTuple t;
    t.m = j.at("m").get<int>();
    t.n = j.at("n").get<int>();
    for (const auto& pj : j.at("paths")) t.comps.push_back(path_from_json(pj));
    if (j.contains("perm")) t.perm = j.at("perm").get<std::vector<int>>();
    return t;
}

json to_json(const GlobalParkingFunction& g) {
    return {{"k", g.k}, {"m", g.m}, {"n", g.n}, {"north_x", g.north_x}, {"labels", g.labels}};
}

GlobalParkingFunction global_from_json(const json& j) {
    GlobalParkingFunction g;
    g.k = j.at("k").get<int>();
    g.m = j.at("m").get<int>();
    g.n = j.at("n").get<int>();
    g.north_x = j.at("north_x").get<std::vector<int>>();
    g.labels = j.at("labels").get<std::vector<int>>();
    return g;
}

json to_json(const SymPoly& f) {
    json terms = json::array();
    for (const auto& [x, c] : f.terms()) terms.push_back({{"xexp", x}, {"coeff", to_json(c)}});
    return {{"nvars", f.nvars()}, {"terms", terms}};
}

json to_json(const BasisExpansion& e) {
    const char* names[] = {"m", "e", "h", "p", "s"};
    std::vector<Partition> parts;
    for (const auto& [lam, c] : e.coeffs) parts.push_back(lam);
    std::sort(parts.begin(), parts.end(), std::greater<Partition>());  // reverse lex
    json coeffs = json::array();
    for (const auto& lam : parts)
        coeffs.push_back({{"partition", lam}, {"value", to_json(e.coeffs.at(lam))}});
    return {{"basis", names[(int)e.basis]}, {"coeffs", coeffs}};
}

json to_json(const TupleSeries& s) {
    json arr = json::array();
    for (const auto& [t, c] : s.terms) arr.push_back({{"tuple", to_json(t)}, {"coeff", to_json(c)}});
    return arr;
}

json to_json(const OmegaSeries& s) {
    // keep the weakly decreasing orbit representatives and regroup by
    // t-degree; coefficients become pure q-Laurent polynomials
    json arr = json::array();
    for (const auto& [x, c] : s.terms) {
        bool sorted = true;
        for (size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i] < x[i + 1]) sorted = false;
        if (!sorted) continue;
        std::vector<int> key(x);
        while (!key.empty() && key.back() == 0) key.pop_back();
        std::map<int, QTCoeff> slices;
        for (const auto& [k, v] : c.terms()) slices[k.second] += QTCoeff::monomial(k.first, 0, v);
        for (const auto& [td, qc] : slices)
            arr.push_back({{"t", td}, {"xexp", key}, {"coeff", to_json(qc)}});
    }
    return arr;
}

json to_json(const MacdonaldTable& t) {
    json entries = json::object(), eigen = json::object();
    for (const auto& [mu, f] : t.entries) {
        std::string key = "[";
        for (size_t i = 0; i < mu.size(); ++i) key += (i ? "," : "") + std::to_string(mu[i]);
        key += "]";
        entries[key] = to_json(f);
        eigen[key] = to_json(t.eigen.at(mu));
    }
    return {{"degree", t.degree}, {"nvars", t.nvars}, {"entries", entries}, {"eigen", eigen}};
}

}  // namespace cparking
