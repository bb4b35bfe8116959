#include "rsos/linalg.hpp"

#include <algorithm>

#include "rsos/errors.hpp"

namespace rsos {

namespace {

int cost(const RatFunc& r) { return r.num().degree() + r.den().degree(); }

} // namespace

RowEchelon row_reduce(RMatrix a, int ncols) {
    RowEchelon out;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (!a[i][c].is_zero() && (best == a.size() || cost(a[i][c]) < cost(a[best][c]))) best = i;
        if (best == a.size()) continue;
        std::swap(a[best], a[r]);
        const RatFunc inv = RatFunc(1) / a[r][c];
        for (auto& x : a[r])
            if (!x.is_zero()) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RatFunc f = a[i][c];
            for (std::size_t t = static_cast<std::size_t>(c); t < a[r].size(); ++t)
                if (!a[r][t].is_zero()) a[i][t] -= f * a[r][t];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

int rank(const RMatrix& a, int ncols) { return static_cast<int>(row_reduce(a, ncols).pivots.size()); }

std::vector<RVector> nullspace(const RMatrix& a, int ncols) {
    RowEchelon e = row_reduce(a, ncols);
    std::vector<RVector> basis;
    for (int free = 0; free < ncols; ++free) {
        if (std::find(e.pivots.begin(), e.pivots.end(), free) != e.pivots.end()) continue;
        RVector v(static_cast<std::size_t>(ncols), RatFunc(0));
        v[static_cast<std::size_t>(free)] = RatFunc(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve(const RMatrix& a, const RVector& b, int ncols) {
    RMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(static_cast<std::size_t>(ncols) + 1);
        aug[i][static_cast<std::size_t>(ncols)] = b[i];
    }
    RowEchelon e = row_reduce(std::move(aug), ncols + 1);
    LinearSolution s;
    if (!e.pivots.empty() && e.pivots.back() == ncols) return s;
    s.x.assign(static_cast<std::size_t>(ncols), RatFunc(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        s.x[static_cast<std::size_t>(e.pivots[i])] = e.rows[i][static_cast<std::size_t>(ncols)];
    s.status = static_cast<int>(e.pivots.size()) == ncols ? SolveStatus::unique : SolveStatus::multiple;
    return s;
}

RMatrix inverse(const RMatrix& a) {
    const std::size_t n = a.size();
    RMatrix aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, RatFunc(0));
        aug[i][n + i] = RatFunc(1);
    }
    RowEchelon e = row_reduce(std::move(aug), static_cast<int>(n));
    if (e.pivots.size() != n) throw NoSolution("singular matrix");
    RMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + static_cast<long>(n), e.rows[i].end());
    return inv;
}

RVector mat_vec(const RMatrix& a, const RVector& x) {
    RVector y(a.size(), RatFunc(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    return y;
}

bool IndependentRows::add(const RVector& row) {
    RVector r = row;
    for (std::size_t i = 0; i < ech_.size(); ++i) {
        const auto p = static_cast<std::size_t>(piv_[i]);
        if (r[p].is_zero()) continue;
        const RatFunc f = r[p];
        for (int t = 0; t < ncols_; ++t)
            if (!ech_[i][static_cast<std::size_t>(t)].is_zero()) r[static_cast<std::size_t>(t)] -= f * ech_[i][static_cast<std::size_t>(t)];
    }
    int p = -1;
    for (int t = 0; t < ncols_; ++t)
        if (!r[static_cast<std::size_t>(t)].is_zero()) {
            p = t;
            break;
        }
    if (p < 0) return false;
    const RatFunc inv = RatFunc(1) / r[static_cast<std::size_t>(p)];
    for (auto& x : r)
        if (!x.is_zero()) x *= inv;
    // keep earlier rows reduced in the new pivot column
    for (auto& e : ech_) {
        const RatFunc f = e[static_cast<std::size_t>(p)];
        if (f.is_zero()) continue;
        for (int t = 0; t < ncols_; ++t)
            if (!r[static_cast<std::size_t>(t)].is_zero()) e[static_cast<std::size_t>(t)] -= f * r[static_cast<std::size_t>(t)];
    }
    ech_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
}

} // namespace rsos
