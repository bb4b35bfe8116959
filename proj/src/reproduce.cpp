#include "rsos/reproduce.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "rsos/errors.hpp"
#include "rsos/golden.hpp"
#include "rsos/intertwiners.hpp"
#include "rsos/lattice.hpp"

namespace rsos {

namespace {

constexpr int kOrder = 3;
constexpr int kU = 2 * kOrder + 1;

bool equal_below(const QSeries& a, const QSeries& b, int bound) {
    return a.order() >= bound && b.order() >= bound && (a.truncated(bound) - b.truncated(bound)).is_zero();
}

const OmegaVector& at_degree(const std::vector<OmegaVector>& b, int d) {
    for (const auto& v : b)
        if (v.degree == d) return v;
    throw EmptySpace("no Omega vector at degree " + std::to_string(d));
}

} // namespace

void DiffReport::add(std::string name, std::string got, std::string want, bool pass) {
    rows.push_back({std::move(name), std::move(got), std::move(want), pass});
    ok = ok && pass;
}

int DiffReport::failures() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const DiffRow& r) { return !r.ok; }));
}

DiffReport reproduce_vacuum(int window) {
    DiffReport rep{"vac"};
    const Vacuum vac = solve_vacuum(kOrder, window);
    for (const auto& row : read_table(golden_path("vac.tsv"))) {
        const QSeries want = parse_terms(row.at(2), kU);
        const QSeries got = vac.coefficient(parse_int_list(row.at(1)));
        rep.add(row.at(0), format_terms(got, kU), format_terms(want, kU), equal_below(got, want, kU));
    }
    return rep;
}

DiffReport reproduce_iota(int intermediate_degree) {
    DiffReport rep{"iota"};
    IotaEvaluator ev(intermediate_degree);
    const Boundary b = vacuum_boundary();
    const OmegaCombination x{{ground_vector(WeightIndex{2, 0}, WeightIndex{1, 0}), QSeries::one()}};
    for (const auto& row : read_table(golden_path("iota.tsv"))) {
        const std::vector<int> pos = parse_int_list(row.at(1));
        int top = 1;
        for (int l : pos) top = std::max(top, l);
        const QSeries want = parse_terms(row.at(2), kU);
        try {
            auto r = ev.coefficient(x, b, pos, kOrder, top + 3);
            bool all = true;
            for (const auto& h : r.history) all = all && equal_below(h, r.value, kU);
            rep.add(row.at(0) + " (l=" + std::to_string(top + 1) + ".." + std::to_string(top + 3) + ")",
                    format_terms(r.value, kU), format_terms(want, kU), all && equal_below(r.value, want, kU));
        } catch (const StabilizationFailure& e) {
            rep.add(row.at(0), std::string("unstable: ") + e.what(), format_terms(want, kU), false);
        }
    }
    return rep;
}

DiffReport reproduce_x_table(const std::string& which) {
    if (which != "X1" && which != "Y1") throw InvalidPair("unknown table " + which);
    DiffReport rep{which};
    const std::string file = which == "X1" ? "x1.tsv" : "y1.tsv";
    using Key = std::tuple<int, int, int, int, int>;
    std::map<Key, std::vector<OmegaTerm>> cache;
    for (const auto& row : read_table(golden_path(file))) {
        const int xa = std::stoi(row.at(0)), ea = std::stoi(row.at(1)), a = std::stoi(row.at(2)),
                  d = std::stoi(row.at(3)), lamp = std::stoi(row.at(4)), td = std::stoi(row.at(5)),
                  z = std::stoi(row.at(6));
        const Key key{xa, ea, a, d, lamp};
        auto it = cache.find(key);
        if (it == cache.end()) {
            const OmegaVector src = at_degree(omega_basis(WeightIndex{2, xa}, WeightIndex{1, ea}, a, 3), d);
            it = cache.emplace(key, x_operator(src, lamp, 3)).first;
        }
        const QSeries want = parse_terms(row.at(7));
        const int bound = std::max(kU, want.end_exponent());
        const std::string name = "Omega(" + std::to_string(xa) + "," + std::to_string(ea) + ";" + std::to_string(a) +
                                 ") deg " + std::to_string(d) + " -> " + std::to_string(lamp) + " deg " +
                                 std::to_string(td);
        const OmegaTerm* hit = nullptr;
        for (const auto& t : it->second)
            if (t.target.degree == td) hit = &t;
        const std::string want_s = "z^" + std::to_string(z) + " " + format_terms(want, bound);
        if (!hit) {
            rep.add(name, "missing", want_s, false);
            continue;
        }
        const QSeries got = hit->coeff.to_series(bound);
        const bool ok = equal_below(got, want.truncated(bound), bound) && hit->zexp == z;
        rep.add(name, "z^" + std::to_string(hit->zexp) + " " + format_terms(got, bound), want_s, ok);
    }
    return rep;
}

DiffReport reproduce_z_expansion() {
    DiffReport rep{"Zexp"};
    const OmegaVector x = at_degree(omega_basis(WeightIndex{2, 0}, WeightIndex{1, 0}, 0, 2), 0);
    const auto got = z_operator(x, WeightIndex{2, 1}, 2, 2, 2);
    const RatFunc want = q_integer(2) / (q_integer(4) * q_integer(3) - q_integer(2));
    const OmegaTerm* d0 = nullptr;
    const OmegaTerm* d2 = nullptr;
    for (const auto& t : got) {
        if (t.target.degree == 0) d0 = &t;
        if (t.target.degree == 2) d2 = &t;
    }
    rep.add("y_1^(2)", d0 ? "z^" + std::to_string(d0->zexp) + " " + d0->coeff.to_string() : "missing", "z^0 1",
            d0 && d0->zexp == 0 && d0->coeff == RatFunc(1));
    rep.add("y_2^(2)", d2 ? "z^" + std::to_string(d2->zexp) + " " + d2->coeff.to_string() : "missing",
            "z^2 " + want.to_string(), d2 && d2->zexp == 2 && d2->coeff == want);
    return rep;
}

DiffReport reproduce_conjecture(int m, const std::vector<int>& windows) {
    DiffReport rep{m == 1 ? "oneket" : "twoket"};
    const auto table = read_table(golden_path(m == 1 ? "oneket.tsv" : "twoket.tsv"));
    const ConjectureReport r = conjecture_check(m, windows, kOrder);
    for (int N : windows) {
        rep.add("N=" + std::to_string(N) + " f_N", format_terms(r.f_fitted.at(N), kU),
                format_terms(f_norm(m, 1, N), kU), r.f_matches_table.at(N));
        for (const auto& row : table) {
            const QSeries want = parse_terms(row.at(2), kU);
            const ConjectureRow* c = r.find(N, row.at(0));
            if (!c) {
                rep.add("N=" + std::to_string(N) + " " + row.at(0), "missing", format_terms(want, kU), false);
                continue;
            }
            rep.add("N=" + std::to_string(N) + " " + row.at(0) + " lattice", format_terms(c->lattice, kU),
                    format_terms(want, kU), equal_below(c->lattice, want, kU));
            rep.add("N=" + std::to_string(N) + " " + row.at(0) + " algebra", format_terms(c->algebraic, kU),
                    format_terms(want, kU), equal_below(c->algebraic, want, kU));
        }
    }
    return rep;
}

} // namespace rsos
