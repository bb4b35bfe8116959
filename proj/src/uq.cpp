#include "rsos/uq.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "rsos/errors.hpp"

namespace rsos {

Word bar_word(const Word& w) {
    Word b = w;
    for (char& c : b) c = (c == '0') ? '1' : '0';
    return b;
}

Content content(const Word& w) {
    Content c;
    for (char x : w) (x == '0' ? c.n0 : c.n1)++;
    return c;
}

void add_to(ModuleElement& x, const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = x.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

HWModule::HWModule(WeightIndex lam, int max_degree) : lam_(lam), max_degree_(max_degree) {
    if (lam.k < 0 || lam.a < 0 || lam.a > lam.k) throw InadmissibleConfig("weight is not dominant integral");
}

int HWModule::h_of(int i, const Word& w) const {
    int h = i == 0 ? lam_.h0() : lam_.h1();
    for (char c : w) h -= cartan(i, c - '0');
    return h;
}

ModuleElement HWModule::e_free(int i, const ModuleElement& x) const {
    ModuleElement out;
    const char letter = static_cast<char>('0' + i);
    for (const auto& [w, c] : x)
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (w[p] != letter) continue;
            Word suffix = w.substr(p + 1);
            int h = h_of(i, suffix);
            if (h == 0) continue;
            add_to(out, w.substr(0, p) + suffix, c * q_integer(h));
        }
    return out;
}

ModuleElement HWModule::f_free(int i, const ModuleElement& x) const {
    ModuleElement out;
    for (const auto& [w, c] : x) add_to(out, static_cast<char>('0' + i) + w, c);
    return out;
}

ModuleElement HWModule::e(int i, const ModuleElement& x) const { return reduce(e_free(i, x)); }
ModuleElement HWModule::f(int i, const ModuleElement& x) const { return reduce(f_free(i, x)); }

ModuleElement HWModule::t(int i, const ModuleElement& x, int power) const {
    ModuleElement out;
    for (const auto& [w, c] : x) add_to(out, w, c * RatFunc::q_power(power * h_of(i, w)));
    return out;
}

std::vector<Word> HWModule::words(Content c) {
    Word w = std::string(static_cast<std::size_t>(c.n0), '0') + std::string(static_cast<std::size_t>(c.n1), '1');
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

RatFunc HWModule::form(const Word& a, const Word& b) const {
    if (content(a) != content(b)) return RatFunc(0);
    ModuleElement x{{b, RatFunc(1)}};
    for (char c : a) {
        x = e_free(c - '0', x);
        if (x.empty()) return RatFunc(0);
    }
    auto it = x.find(Word());
    return it == x.end() ? RatFunc(0) : it->second;
}

RMatrix HWModule::gram(const std::vector<Word>& ws) const {
    RMatrix g(ws.size(), RVector(ws.size()));
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i; j < ws.size(); ++j) {
            g[i][j] = form(ws[i], ws[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

void HWModule::build(Content c) const {
    if (basis_.count(c)) return;
    if (c.n0 + c.n1 > max_degree_)
        throw DegreeOverflow("degree " + std::to_string(c.n0 + c.n1) + " exceeds module bound " +
                             std::to_string(max_degree_));
    std::vector<Word> ws = words(c);
    RMatrix g = gram(ws);
    IndependentRows ind(static_cast<int>(ws.size()));
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (ind.add(g[i])) picked.push_back(i);
    std::vector<Word> b;
    for (auto i : picked) b.push_back(ws[i]);
    if (!picked.empty()) {
        RMatrix gbb(picked.size(), RVector(picked.size()));
        for (std::size_t r = 0; r < picked.size(); ++r)
            for (std::size_t s = 0; s < picked.size(); ++s) gbb[r][s] = g[picked[r]][picked[s]];
        RMatrix inv = inverse(gbb);
        for (std::size_t w = 0; w < ws.size(); ++w) {
            RVector col(picked.size());
            for (std::size_t r = 0; r < picked.size(); ++r) col[r] = g[picked[r]][w];
            RVector coords = mat_vec(inv, col);
            ModuleElement red;
            for (std::size_t r = 0; r < picked.size(); ++r) add_to(red, b[r], coords[r]);
            reduced_[ws[w]] = std::move(red);
        }
    } else {
        for (const auto& w : ws) reduced_[w] = {};
    }
    basis_[c] = std::move(b);
}

const std::vector<Word>& HWModule::basis(Content c) const {
    build(c);
    return basis_.at(c);
}

std::vector<Word> HWModule::basis(int degree) const {
    std::vector<Word> out;
    for (int n0 = degree; n0 >= 0; --n0) {
        const auto& b = basis(Content{n0, degree - n0});
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

const ModuleElement& HWModule::reduce_word(const Word& w) const {
    auto it = reduced_.find(w);
    if (it != reduced_.end()) return it->second;
    build(content(w));
    return reduced_.at(w);
}

ModuleElement HWModule::reduce(const ModuleElement& x) const {
    ModuleElement out;
    for (const auto& [w, c] : x)
        for (const auto& [b, d] : reduce_word(w)) add_to(out, b, c * d);
    return out;
}

std::shared_ptr<const HWModule> hw_module(WeightIndex lam, int max_degree) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const HWModule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(lam.k, lam.a, max_degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto m = std::make_shared<const HWModule>(lam, max_degree);
    cache[key] = m;
    return m;
}

std::string to_string(const Generator& g) {
    const char* k = g.kind == GenKind::e ? "e" : g.kind == GenKind::f ? "f" : "t";
    return k + std::to_string(g.i);
}

RatFunc c_squared(int N, int j) { return q_binomial(N, j) * RatFunc::q_power(j * (N - j)); }

std::vector<EvalTerm> eval_action_w(const Generator& g, int N, int j) {
    std::vector<EvalTerm> out;
    auto push = [&](int jj, int n, int z) {
        if (jj < 0 || jj > N || n == 0) return;
        out.push_back({jj, q_integer(n), z});
    };
    switch (g.kind) {
    case GenKind::e:
        if (g.i == 1) push(j - 1, j, 1);
        else push(j + 1, N - j, 1);
        break;
    case GenKind::f:
        if (g.i == 1) push(j + 1, N - j, -1);
        else push(j - 1, j, -1);
        break;
    case GenKind::t:
        out.push_back({j, RatFunc::q_power(g.i == 1 ? N - 2 * j : 2 * j - N), 0});
        break;
    }
    return out;
}

std::vector<EvalSurdTerm> eval_action(const Generator& g, int N, int j, EvalFlavor flavor) {
    std::vector<EvalSurdTerm> out;
    for (const auto& t : eval_action_w(g, N, j)) {
        if (flavor == EvalFlavor::homogeneous)
            out.push_back({t.j, {t.coeff, RatFunc(1)}, t.zexp - j + t.j});
        else
            out.push_back({t.j, {t.coeff, c_squared(N, j) / c_squared(N, t.j)}, t.zexp});
    }
    return out;
}

std::string eval_leg(int j) { return "u" + std::to_string(j); }
int eval_index(const std::string& leg) { return std::stoi(leg.substr(1)); }

Factor hw_factor(WeightIndex lam, int max_degree) { return Factor{hw_module(lam, max_degree), 0}; }
Factor eval_factor(int N) { return Factor{nullptr, N}; }

void add_to(TensorElement& x, const TensorKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = x.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

TensorElement scaled(const TensorElement& x, const RatFunc& c) {
    TensorElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : x) out.emplace(k, v * c);
    return out;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    TensorElement out = a;
    for (const auto& [k, v] : b) add_to(out, k, v);
    return out;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    TensorElement out = a;
    for (const auto& [k, v] : b) add_to(out, k, -v);
    return out;
}

namespace {

struct LegTerm {
    std::string leg;
    RatFunc coeff;
    int zexp = 0;
};

std::vector<LegTerm> leg_act(const Factor& f, const Generator& g, const std::string& leg, int power = 1) {
    std::vector<LegTerm> out;
    if (!f.is_eval()) {
        const HWModule& m = *f.hw;
        switch (g.kind) {
        case GenKind::e:
            for (const auto& [w, c] : m.e_free(g.i, ModuleElement{{leg, RatFunc(1)}})) out.push_back({w, c, 0});
            break;
        case GenKind::f: out.push_back({static_cast<char>('0' + g.i) + leg, RatFunc(1), 0}); break;
        case GenKind::t: out.push_back({leg, RatFunc::q_power(power * m.h_of(g.i, leg)), 0}); break;
        }
        return out;
    }
    const int j = eval_index(leg);
    if (g.kind == GenKind::t) {
        const int h = g.i == 1 ? f.eval_n - 2 * j : 2 * j - f.eval_n;
        out.push_back({leg, RatFunc::q_power(power * h), 0});
        return out;
    }
    for (const auto& t : eval_action_w(g, f.eval_n, j)) out.push_back({eval_leg(t.j), t.coeff, t.zexp});
    return out;
}

} // namespace

TensorElement TensorSpace::act(const Generator& g, const TensorElement& x) const {
    TensorElement out;
    const std::size_t n = f_.size();
    for (const auto& [key, c] : x) {
        if (g.kind == GenKind::t) {
            RatFunc coeff = c;
            for (std::size_t l = 0; l < n; ++l) coeff *= leg_act(f_[l], g, key.legs[l])[0].coeff;
            add_to(out, key, coeff);
            continue;
        }
        for (std::size_t l = 0; l < n; ++l) {
            // e: t_i on earlier legs; f: t_i^{-1} on later legs
            RatFunc pre = c;
            for (std::size_t m = 0; m < n; ++m) {
                if (g.kind == GenKind::e && m < l)
                    pre *= leg_act(f_[m], {GenKind::t, g.i}, key.legs[m], 1)[0].coeff;
                if (g.kind == GenKind::f && m > l)
                    pre *= leg_act(f_[m], {GenKind::t, g.i}, key.legs[m], -1)[0].coeff;
            }
            for (const auto& t : leg_act(f_[l], g, key.legs[l])) {
                TensorKey k = key;
                k.legs[l] = t.leg;
                k.zexp += t.zexp;
                add_to(out, k, pre * t.coeff);
            }
        }
    }
    return out;
}

TensorElement TensorSpace::apply_word(const Word& w, const TensorElement& x) const {
    TensorElement y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = act({GenKind::f, *it - '0'}, y);
    return y;
}

TensorElement TensorSpace::reduce(const TensorElement& x) const {
    TensorElement cur = x;
    for (std::size_t l = 0; l < f_.size(); ++l) {
        if (f_[l].is_eval()) continue;
        TensorElement next;
        for (const auto& [key, c] : cur)
            for (const auto& [w, d] : f_[l].hw->reduce_word(key.legs[l])) {
                TensorKey k = key;
                k.legs[l] = w;
                add_to(next, k, c * d);
            }
        cur = std::move(next);
    }
    return cur;
}

int TensorSpace::h_of(int i, const TensorKey& k) const {
    int h = 0;
    for (std::size_t l = 0; l < f_.size(); ++l) {
        if (f_[l].is_eval()) {
            const int j = eval_index(k.legs[l]);
            h += i == 1 ? f_[l].eval_n - 2 * j : 2 * j - f_[l].eval_n;
        } else {
            h += f_[l].hw->h_of(i, k.legs[l]);
        }
    }
    return h;
}

TensorKey vacuum_key(const std::vector<Factor>& f, const std::vector<int>& eval_index) {
    TensorKey k;
    std::size_t e = 0;
    for (const auto& x : f) {
        if (x.is_eval()) k.legs.push_back(eval_leg(e < eval_index.size() ? eval_index[e++] : 0));
        else k.legs.emplace_back();
    }
    return k;
}

TensorElement bar(const TensorElement& x, const std::vector<Factor>& f) {
    TensorElement out;
    for (const auto& [key, c] : x) {
        TensorKey k = key;
        for (std::size_t l = 0; l < f.size(); ++l)
            k.legs[l] = f[l].is_eval() ? eval_leg(f[l].eval_n - eval_index(key.legs[l])) : bar_word(key.legs[l]);
        add_to(out, k, c);
    }
    return out;
}

namespace {

bool leading_less(const TensorKey& a, const TensorKey& b) {
    if (a.legs[0].size() != b.legs[0].size()) return a.legs[0].size() < b.legs[0].size();
    return a.legs < b.legs;
}

struct NormEntry {
    int xk, xa, ek, ea, a, degree;
};

// Leading coefficients of the tabulated Step-2 vectors of degree two and
// three; their images under the 0 <-> 1 exchange are found by symmetry.
const NormEntry kHalfNorm[] = {
    {2, 0, 1, 0, 2, 3}, // x_2^{(2)}
    {2, 0, 1, 1, 1, 2}, // x_2^{(1)}
    {2, 0, 1, 1, 3, 3}, // x_1^{(3)}
    {2, 1, 1, 0, 1, 2}, // y_2^{(1)}
    {2, 1, 1, 0, 3, 3}, // y_2^{(3)}
};

} // namespace

RatFunc omega_normalization(WeightIndex xi, WeightIndex eta, int a, int degree) {
    const int k = xi.k + eta.k;
    for (const auto& e : kHalfNorm) {
        if (e.xk == xi.k && e.ek == eta.k && e.degree == degree) {
            if (e.xa == xi.a && e.ea == eta.a && e.a == a) return RatFunc(1) / q_integer(2);
            if (xi.k - e.xa == xi.a && eta.k - e.ea == eta.a && k - e.a == a) return RatFunc(1) / q_integer(2);
        }
    }
    return RatFunc(1);
}

std::vector<OmegaVector> omega_basis(WeightIndex xi, WeightIndex eta, int a, int max_degree) {
    const int k = xi.k + eta.k;
    if (a < 0 || a > k) throw InadmissibleConfig("lambda_a outside level " + std::to_string(k));
    TensorSpace space({hw_factor(xi, max_degree + 1), hw_factor(eta, max_degree + 1)});
    const HWModule& mx = *space.factors()[0].hw;
    const HWModule& me = *space.factors()[1].hw;
    std::vector<OmegaVector> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<TensorKey> unknowns;
        for (int n0 = 0; n0 <= d; ++n0) {
            const int n1 = d - n0;
            if (xi.a + eta.a + 2 * n0 - 2 * n1 != a) continue;
            for (int c0 = 0; c0 <= n0; ++c0)
                for (int c1 = 0; c1 <= n1; ++c1)
                    for (const auto& b1 : mx.basis(Content{c0, c1}))
                        for (const auto& b2 : me.basis(Content{n0 - c0, n1 - c1}))
                            unknowns.push_back(TensorKey{{b1, b2}, 0});
        }
        if (unknowns.empty()) continue;
        std::sort(unknowns.begin(), unknowns.end(), leading_less);
        // equations: e_0 x = e_1 x = 0
        std::map<std::pair<int, TensorKey>, std::size_t> row_of;
        RMatrix rows;
        const std::size_t nu = unknowns.size();
        for (std::size_t u = 0; u < nu; ++u)
            for (int i : {0, 1})
                for (const auto& [key, c] : space.reduce(space.e(i, TensorElement{{unknowns[u], RatFunc(1)}}))) {
                    auto [it, ins] = row_of.emplace(std::make_pair(i, key), rows.size());
                    if (ins) rows.emplace_back(nu, RatFunc(0));
                    rows[it->second][u] += c;
                }
        std::vector<RVector> null = nullspace(rows, static_cast<int>(nu));
        if (null.empty()) continue;
        RowEchelon ech = row_reduce(RMatrix(null.begin(), null.end()), static_cast<int>(nu));
        const RatFunc norm = omega_normalization(xi, eta, a, d);
        for (const auto& r : ech.rows) {
            OmegaVector v{xi, eta, a, d, {}};
            for (std::size_t u = 0; u < nu; ++u) add_to(v.vec, unknowns[u], r[u] * norm);
            out.push_back(std::move(v));
        }
    }
    if (out.empty()) throw EmptySpace("no highest weight vectors up to degree " + std::to_string(max_degree));
    return out;
}

namespace {

std::string word_string(const std::string& w) {
    std::string s;
    for (char c : w) s += std::string("f") + c + " ";
    return s + "v";
}

} // namespace

std::string to_string(const ModuleElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") " << word_string(w);
    }
    return os.str();
}

std::string to_string(const TensorElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t l = 0; l < k.legs.size(); ++l) {
            os << (l ? " (x) " : " ");
            const auto& leg = k.legs[l];
            if (!leg.empty() && leg[0] == 'u')
                os << "u" << leg.substr(1);
            else
                os << word_string(leg);
        }
        if (k.zexp) os << " z^" << k.zexp;
    }
    return os.str();
}

} // namespace rsos
