#include "rsos/ratfunc.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rsos/errors.hpp"

namespace rsos {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int deg) {
    Poly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

int Poly::low_order() const {
    int i = 0;
    while (i < static_cast<int>(c_.size()) && sgn(c_[static_cast<std::size_t>(i)]) == 0) ++i;
    return i;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly Poly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return {};
    Poly p = *this;
    for (auto& x : p.c_) x *= c;
    return p;
}

Poly Poly::shift_down(int k) const {
    if (k <= 0) return *this;
    if (k > low_order() && !is_zero()) throw std::logic_error("Poly::shift_down: not divisible");
    Poly p;
    if (k >= static_cast<int>(c_.size())) return p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    rem = a;
    quo = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational inv = 1 / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int d = rem.degree() - b.degree();
        Rational f = rem.lead() * inv;
        q[static_cast<std::size_t>(d)] = f;
        for (int i = 0; i <= b.degree(); ++i) rem.c_[static_cast<std::size_t>(i + d)] -= f * b.c_[static_cast<std::size_t>(i)];
        rem.c_.back() = 0;
        rem.trim();
    }
    quo = Poly(std::move(q));
}

Poly Poly::gcd(Poly a, Poly b) {
    auto monic = [](Poly& p) {
        if (!p.is_zero() && p.lead() != 1) p = p.scaled(1 / p.lead());
    };
    monic(a);
    monic(b);
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

long double Poly::evaluate(long double u) const {
    long double s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * u + static_cast<long double>(it->get_d());
    return s;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}

RatFunc::RatFunc(Poly num, Poly den, int shift) : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    canonicalize();
}

RatFunc RatFunc::u_power(int e, const Rational& c) {
    RatFunc r(c);
    if (!r.is_zero()) r.shift_ = e;
    return r;
}

bool RatFunc::is_one() const {
    return shift_ == 0 && num_.degree() == 0 && num_.lead() == 1 && den_.degree() == 0;
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        shift_ = 0;
        return;
    }
    const int ln = num_.low_order();
    const int ld = den_.low_order();
    num_ = num_.shift_down(ln);
    den_ = den_.shift_down(ld);
    shift_ += ln - ld;
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = std::move(q);
            Poly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    const Rational d0 = den_.coeff(0);
    if (d0 != 1) {
        const Rational inv = 1 / d0;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

namespace {

// u^k * p for k >= 0
Poly raise(const Poly& p, int k) {
    if (k <= 0 || p.is_zero()) return p;
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(c));
}

} // namespace

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int s = std::min(shift_, o.shift_);
    Poly a = raise(num_, shift_ - s);
    Poly b = raise(o.num_, o.shift_ - s);
    if (den_ == o.den_) {
        num_ = a + b;
        shift_ = s;
        canonicalize();
        return *this;
    }
    Poly g = Poly::gcd(den_, o.den_);
    Poly da, db, r;
    Poly::divmod(den_, g, da, r);
    Poly::divmod(o.den_, g, db, r);
    num_ = a * db + b * da;
    den_ = den_ * db;
    shift_ = s;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    // cross-cancel before multiplying
    Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    auto cancel = [](Poly& n, Poly& d) {
        if (n.degree() <= 0 || d.degree() <= 0) return;
        Poly g = Poly::gcd(n, d);
        if (g.degree() <= 0) return;
        Poly q, r;
        Poly::divmod(n, g, q, r);
        n = std::move(q);
        Poly::divmod(d, g, q, r);
        d = std::move(q);
    };
    cancel(n1, d2);
    cancel(n2, d1);
    num_ = n1 * n2;
    den_ = d1 * d2;
    shift_ += o.shift_;
    const Rational d0 = den_.coeff(0);
    if (d0 != 1) {
        num_ = num_.scaled(1 / d0);
        den_ = den_.scaled(1 / d0);
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc division by zero");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    inv.shift_ = -o.shift_;
    const Rational d0 = inv.den_.coeff(0);
    inv.num_ = inv.num_.scaled(1 / d0);
    inv.den_ = inv.den_.scaled(1 / d0);
    return *this *= inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return (RatFunc(1) / *this).pow(-n);
    RatFunc result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

QSeries RatFunc::to_series(int order) const {
    if (is_zero()) return QSeries::zero(order);
    const int len = order - shift_;
    if (len <= 0) return QSeries::zero(order);
    if (den_.degree() == 0 && num_.degree() < len) {
        std::vector<ZetaPoly> c;
        for (const auto& x : num_.coeffs()) c.emplace_back(x);
        return QSeries::from_coeffs(shift_, std::move(c), kExact).truncated(order);
    }
    // power series division, den(0) = 1
    std::vector<Rational> out(static_cast<std::size_t>(len), Rational(0));
    const auto& d = den_.coeffs();
    for (int n = 0; n < len; ++n) {
        Rational acc = num_.coeff(n);
        for (int i = 1; i <= std::min(n, den_.degree()); ++i)
            acc -= d[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
        out[static_cast<std::size_t>(n)] = acc;
    }
    std::vector<ZetaPoly> c;
    c.reserve(out.size());
    for (auto& x : out) c.emplace_back(x);
    return QSeries::from_coeffs(shift_, std::move(c), order);
}

long double RatFunc::evaluate(long double u) const {
    return std::pow(u, shift_) * num_.evaluate(u) / den_.evaluate(u);
}

namespace {

std::string render_poly(const Poly& p, int shift) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        const int e = i + shift;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e % 2 == 0) {
            if (e != 2) os << "^" << e / 2;
        } else {
            os << "^(" << e << "/2)";
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string RatFunc::to_string() const {
    if (den_.degree() == 0) return render_poly(num_, shift_);
    return "(" + render_poly(num_, shift_) + ")/(" + render_poly(den_, 0) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

RatFunc q_integer(int n) {
    if (n == 0) return RatFunc();
    if (n < 0) return -q_integer(-n);
    // u^{-2(n-1)} * (1 + u^4 + ... + u^{4(n-1)})
    std::vector<Rational> c(static_cast<std::size_t>(4 * (n - 1) + 1), Rational(0));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(4 * i)] = 1;
    return RatFunc(Poly(std::move(c)), Poly(Rational(1)), -2 * (n - 1));
}

RatFunc q_binomial(int n, int k) {
    if (k < 0 || k > n) return RatFunc();
    RatFunc r(1);
    for (int i = 1; i <= k; ++i) r *= q_integer(n - k + i) / q_integer(i);
    return r;
}

} // namespace rsos
