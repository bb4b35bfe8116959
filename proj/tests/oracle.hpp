#pragma once

// Naive bivariate polynomials in (u, zeta) used as independent test oracles.

#include <map>
#include <utility>

#include "rsos/series.hpp"

namespace oracle {

using rsos::Rational;

struct BiPoly {
    std::map<std::pair<int, int>, Rational> t; // (uexp, zexp) -> coeff

    static BiPoly one() {
        BiPoly p;
        p.t[{0, 0}] = 1;
        return p;
    }
    static BiPoly mono(long c, int u, int z = 0) {
        BiPoly p;
        p.t[{u, z}] = c;
        return p;
    }
    BiPoly mul(const BiPoly& o, int bound) const {
        BiPoly r;
        for (const auto& [k1, c1] : t)
            for (const auto& [k2, c2] : o.t) {
                int e = k1.first + k2.first;
                if (e >= bound) continue;
                r.t[{e, k1.second + k2.second}] += c1 * c2;
            }
        r.clean();
        return r;
    }
    BiPoly add(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, c] : o.t) r.t[k] += c;
        r.clean();
        return r;
    }
    void clean() {
        for (auto it = t.begin(); it != t.end();)
            it = (sgn(it->second) == 0) ? t.erase(it) : std::next(it);
    }
    // (1 - c u^e zeta^z)
    static BiPoly one_minus(long c, int e, int z = 0) { return one().add(mono(-c, e, z)); }

    // coefficient-wise comparison with a series below bound
    bool matches(const rsos::QSeries& s, int bound) const {
        for (int e = s.valuation() < -50 ? -50 : std::min(s.valuation(), lowest()); e < bound; ++e) {
            rsos::ZetaPoly z;
            for (const auto& [k, c] : t)
                if (k.first == e) z.add_term(k.second, c);
            if (!(z == s.coeff(e))) return false;
        }
        return true;
    }
    int lowest() const { return t.empty() ? 0 : t.begin()->first.first; }
};

} // namespace oracle
