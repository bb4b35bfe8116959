#include "rsos/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "rsos/errors.hpp"

namespace rsos {

namespace {

int sat_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (a >= kExact || b >= kExact || s >= kExact) return kExact;
    return static_cast<int>(s);
}

} // namespace

int default_order() {
    if (const char* env = std::getenv("RSOS_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return kDefaultOrder;
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_rational_square(const Rational& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& r) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    Rational out(n, d);
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------- ZetaPoly

ZetaPoly::ZetaPoly(const Rational& c, int zexp) {
    if (sgn(c) != 0) terms_.emplace_back(zexp, c);
}

Rational ZetaPoly::coeff(int zexp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), zexp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == zexp) return it->second;
    return Rational(0);
}

void ZetaPoly::add_term(int zexp, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), zexp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == zexp) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(zexp, c));
    }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (sgn(s) != 0) out.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) { return *this += -o; }

ZetaPoly& ZetaPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.is_monomial() || b.is_monomial()) {
        const ZetaPoly& m = a.is_monomial() ? a : b;
        const ZetaPoly& o = a.is_monomial() ? b : a;
        out.terms_.reserve(o.terms_.size());
        for (const auto& t : o.terms_)
            out.terms_.emplace_back(t.first + m.terms_[0].first, t.second * m.terms_[0].second);
        return out;
    }
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[x.first + y.first - lo] += x.second * y.second;
    for (int e = lo; e <= hi; ++e)
        if (sgn(acc[e - lo]) != 0) out.terms_.emplace_back(e, acc[e - lo]);
    return out;
}

ZetaPoly ZetaPoly::operator-() const {
    ZetaPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

ZetaPoly ZetaPoly::scale_exponents(int factor) const {
    ZetaPoly out;
    if (factor == 0) {
        out = ZetaPoly(at_one());
        return out;
    }
    for (const auto& t : terms_) out.add_term(t.first * factor, t.second);
    return out;
}

ZetaPoly ZetaPoly::sign_twist(int sign) const {
    ZetaPoly out = *this;
    if (sign < 0)
        for (auto& t : out.terms_)
            if (t.first % 2 != 0) t.second = -t.second;
    return out;
}

Rational ZetaPoly::at_one() const {
    Rational s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
}

Rational ZetaPoly::derivative_at_one() const {
    Rational s(0);
    for (const auto& t : terms_) s += t.second * t.first;
    return s;
}

long double ZetaPoly::evaluate(long double zeta) const {
    long double s = 0;
    for (const auto& t : terms_) s += static_cast<long double>(t.second.get_d()) * std::pow(zeta, t.first);
    return s;
}

std::string ZetaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZetaPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(const ZetaPoly& c, int order) : val_(0), order_(order) {
    if (!c.is_zero() && order > 0) coeffs_.push_back(c);
    normalize();
}

QSeries QSeries::zero(int order) {
    QSeries s;
    s.order_ = order;
    s.val_ = order;
    return s;
}

QSeries QSeries::monomial(const Rational& c, int uexp, int zexp, int order) {
    QSeries s;
    s.order_ = order;
    s.val_ = uexp;
    if (uexp < order && sgn(c) != 0) s.coeffs_.push_back(ZetaPoly(c, zexp));
    s.normalize();
    return s;
}

QSeries QSeries::from_coeffs(int valuation, std::vector<ZetaPoly> coeffs, int order) {
    QSeries s;
    s.val_ = valuation;
    s.order_ = order;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

void QSeries::normalize() {
    if (order_ < kExact && end_exponent() > order_) {
        int keep = std::max(0, order_ - val_);
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = order_;
}

ZetaPoly QSeries::coeff(int e) const {
    if (e < val_ || e >= end_exponent()) return {};
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

QSeries& QSeries::operator+=(const QSeries& o) {
    const int order = std::min(order_, o.order_);
    if (o.is_zero()) {
        order_ = order;
        normalize();
        return *this;
    }
    if (is_zero()) {
        *this = o;
        order_ = order;
        normalize();
        return *this;
    }
    const int lo = std::min(val_, o.val_);
    const int hi = std::min(std::max(end_exponent(), o.end_exponent()), order);
    if (hi <= lo) {
        *this = zero(order);
        return *this;
    }
    std::vector<ZetaPoly> out(static_cast<std::size_t>(hi - lo));
    for (int e = lo; e < hi; ++e) {
        ZetaPoly c = coeff(e);
        c += o.coeff(e);
        out[static_cast<std::size_t>(e - lo)] = std::move(c);
    }
    val_ = lo;
    order_ = order;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int order = std::min(sat_add(a.valuation(), b.order_), sat_add(b.valuation(), a.order_));
    if (a.is_zero() || b.is_zero()) return QSeries::zero(order);
    const int lo = a.val_ + b.val_;
    const int hi = std::min(a.end_exponent() + b.end_exponent() - 1, order);
    if (hi <= lo) return QSeries::zero(order);
    std::vector<ZetaPoly> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        const int ei = a.val_ + static_cast<int>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            const int e = ei + b.val_ + static_cast<int>(j);
            if (e >= hi) break;
            if (b.coeffs_[j].is_zero()) continue;
            out[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries::from_coeffs(lo, std::move(out), order);
}

QSeries& QSeries::operator*=(const QSeries& o) {
    *this = *this * o;
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries out = *this;
    for (auto& z : out.coeffs_) z *= c;
    out.normalize();
    return out;
}

QSeries QSeries::shifted(int uexp, int zexp, const Rational& c) const {
    QSeries out;
    out.val_ = val_ + uexp;
    out.order_ = sat_add(order_, uexp);
    out.coeffs_.reserve(coeffs_.size());
    const ZetaPoly m(c, zexp);
    for (const auto& z : coeffs_) out.coeffs_.push_back(z * m);
    out.normalize();
    return out;
}

QSeries QSeries::truncated(int order) const {
    QSeries out = *this;
    out.order_ = std::min(order_, order);
    out.normalize();
    return out;
}

QSeries QSeries::pow(int n) const {
    if (n < 0) return invert(*this).pow(-n);
    QSeries result = one(kExact);
    QSeries base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

QSeries QSeries::scale_zeta(int factor) const {
    QSeries out = *this;
    for (auto& z : out.coeffs_) z = z.scale_exponents(factor);
    out.normalize();
    return out;
}

QSeries QSeries::at_zeta_one() const {
    QSeries out = *this;
    for (auto& z : out.coeffs_) z = ZetaPoly(z.at_one());
    out.normalize();
    return out;
}

QSeries QSeries::zeta_derivative_at_one() const {
    QSeries out = *this;
    for (auto& z : out.coeffs_) z = ZetaPoly(z.derivative_at_one());
    out.normalize();
    return out;
}

bool QSeries::agrees_with(const QSeries& other, int bound) const {
    const int top = std::min({order_, other.order_, bound});
    const int lo = std::min(valuation(), other.valuation());
    const int hi = std::min(top, std::max(end_exponent(), other.end_exponent()));
    for (int e = lo; e < hi; ++e)
        if (!(coeff(e) == other.coeff(e))) return false;
    return true;
}

long double QSeries::evaluate(long double u, long double zeta) const {
    long double s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += coeffs_[i].evaluate(zeta) * std::pow(u, val_ + static_cast<int>(i));
    return s;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const int e = val_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs_[i].to_string();
        bool paren = coeffs_[i].size() > 1 || c.find('*') != std::string::npos;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c == "1") {
        } else if (c == "-1") {
            os << "-";
        } else {
            os << (paren ? "(" + c + ")" : c) << "*";
        }
        os << "q";
        if (e % 2 == 0) {
            if (e != 2) os << "^" << e / 2;
        } else {
            os << "^(" << e << "/2)";
        }
    }
    if (first) os << "0";
    if (!is_exact()) {
        os << " + O(q";
        if (order_ % 2 == 0) os << "^" << order_ / 2;
        else os << "^(" << order_ << "/2)";
        os << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- division

namespace {

// Splits a = m * (1 + x) with m the leading monomial; returns the normalized
// tail coefficients (index 0 == 1) and the leading monomial data.
struct UnitSplit {
    Rational lead;
    int uexp;
    int zexp;
    std::vector<ZetaPoly> normalized; // coefficients of 1 + x, length = precision
};

UnitSplit split_unit(const QSeries& a, int precision) {
    const ZetaPoly& l = a.leading();
    UnitSplit s{l.terms()[0].second, a.valuation(), l.terms()[0].first, {}};
    Rational inv = 1 / s.lead;
    s.normalized.resize(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) {
        ZetaPoly c = a.coeff(a.valuation() + i);
        ZetaPoly m(inv, -s.zexp);
        s.normalized[static_cast<std::size_t>(i)] = c * m;
    }
    return s;
}

} // namespace

QSeries invert(const QSeries& a, int order) {
    if (a.is_zero() || !a.leading().is_monomial())
        throw NonUnitLeadingCoefficient("leading coefficient " +
                                        (a.is_zero() ? std::string("0") : a.leading().to_string()) +
                                        " is not a zeta-monomial");
    const int v = a.valuation();
    // precision of the result relative to its valuation
    int rel = a.is_exact() ? kExact : a.order() - v;
    if (a.is_exact() && a.end_exponent() - v == 1) {
        const auto& t = a.leading().terms()[0];
        return QSeries::monomial(1 / t.second, -v, -t.first, kExact);
    }
    if (a.is_exact()) rel = order < kExact ? order + v : default_order() + 2 * std::max(0, v) + 8;
    else if (order < kExact) rel = std::min(rel, order + v);
    if (rel <= 0) return QSeries::zero(std::min(order, rel - v));
    UnitSplit s = split_unit(a, rel);
    std::vector<ZetaPoly> b(static_cast<std::size_t>(rel));
    b[0] = ZetaPoly(Rational(1));
    for (int n = 1; n < rel; ++n) {
        ZetaPoly acc;
        for (int i = 1; i <= n; ++i) {
            const auto& ai = s.normalized[static_cast<std::size_t>(i)];
            if (ai.is_zero() || b[static_cast<std::size_t>(n - i)].is_zero()) continue;
            acc += ai * b[static_cast<std::size_t>(n - i)];
        }
        b[static_cast<std::size_t>(n)] = -acc;
    }
    QSeries unit = QSeries::from_coeffs(0, std::move(b), rel);
    return unit.shifted(-v, -s.zexp, 1 / s.lead);
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * invert(b); }

QSeries sqrt(const QSeries& a, int order) {
    if (a.is_zero()) return QSeries::zero(a.order() / 2);
    if (!a.leading().is_monomial())
        throw NotAFormalSquare("leading coefficient is not a zeta-monomial");
    const int v = a.valuation();
    const auto& t = a.leading().terms()[0];
    if (v % 2 != 0 || t.first % 2 != 0 || !is_rational_square(t.second))
        throw NotAFormalSquare("leading term " + t.second.get_str() + " u^" + std::to_string(v) +
                               " z^" + std::to_string(t.first) + " is not a square");
    int rel = a.is_exact() ? kExact : a.order() - v;
    if (a.is_exact() && a.end_exponent() - v == 1)
        return QSeries::monomial(rational_sqrt(t.second), v / 2, t.first / 2, kExact);
    if (a.is_exact()) rel = order < kExact ? order - v / 2 : default_order() + std::abs(v) + 8;
    else if (order < kExact) rel = std::min(rel, order - v / 2);
    if (rel <= 0) return QSeries::zero(std::min(order, rel + v / 2));
    UnitSplit s = split_unit(a, rel);
    // r^2 = 1 + x with r = sum b_n, b_0 = 1
    std::vector<ZetaPoly> b(static_cast<std::size_t>(rel));
    b[0] = ZetaPoly(Rational(1));
    const Rational half(1, 2);
    for (int n = 1; n < rel; ++n) {
        ZetaPoly acc = s.normalized[static_cast<std::size_t>(n)];
        for (int i = 1; i < n; ++i) {
            const auto& bi = b[static_cast<std::size_t>(i)];
            const auto& bj = b[static_cast<std::size_t>(n - i)];
            if (bi.is_zero() || bj.is_zero()) continue;
            acc -= bi * bj;
        }
        b[static_cast<std::size_t>(n)] = acc * half;
    }
    QSeries unit = QSeries::from_coeffs(0, std::move(b), rel);
    return unit.shifted(v / 2, t.first / 2, rational_sqrt(t.second));
}

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op) {
    switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    }
    return a;
}

} // namespace rsos
