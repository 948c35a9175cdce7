#include "qhopf/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qhopf {

namespace {

// polynomial helpers over Rational, coefficient vectors low degree first

void poly_trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    if (p.empty()) p.push_back(Rational(0)); // canonical zero polynomial
}

// in-place remainder of a by monic b
void poly_mod(std::vector<Rational>& a, const std::vector<Rational>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        Rational lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= lead * b[i];
        a.pop_back();
        poly_trim(a);
    }
}

std::vector<Rational> poly_divide_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    poly_trim(a);
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        Rational lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= lead * b[i];
        a.pop_back();
        poly_trim(a);
    }
    poly_trim(a);
    if (!(a.size() == 1 && a[0].is_zero()))
        throw std::logic_error("poly_divide_exact: nonzero remainder");
    poly_trim(q);
    return q;
}

std::vector<Rational> cyclotomic_poly(std::uint32_t n) {
    // x^n - 1 divided by all proper cyclotomic divisors
    std::vector<Rational> p(n + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = poly_divide_exact(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

} // namespace

const CycloContext& cyclo_context(std::uint32_t order) {
    static std::map<std::uint32_t, CycloContext> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    if (order == 0) throw std::domain_error("cyclo_context: order must be >= 1");

    CycloContext ctx;
    ctx.order = order;
    ctx.min_poly = cyclotomic_poly(order);
    ctx.degree = (std::uint32_t)(ctx.min_poly.size() - 1);
    // reduction rows zeta^k for degree <= k < order
    std::vector<Rational> cur(ctx.degree, Rational(0));
    // zeta^degree = -(lower part of min_poly)  (monic)
    for (std::uint32_t i = 0; i < ctx.degree; ++i) cur[i] = -ctx.min_poly[i];
    for (std::uint32_t k = ctx.degree; k < order; ++k) {
        ctx.pow.push_back(cur);
        // multiply by zeta: shift, reduce the spilled top coefficient
        std::vector<Rational> next(ctx.degree, Rational(0));
        for (std::uint32_t i = 0; i + 1 < ctx.degree; ++i) next[i + 1] = cur[i];
        Rational top = cur[ctx.degree - 1];
        if (!top.is_zero())
            for (std::uint32_t i = 0; i < ctx.degree; ++i)
                next[i] += top * (-ctx.min_poly[i]);
        cur = std::move(next);
    }
    return registry.emplace(order, std::move(ctx)).first->second;
}

Scalar::Scalar(std::uint32_t order, Coeffs coeffs) : order_(order), c_(std::move(coeffs)) {
    const auto& ctx = cyclo_context(order);
    if (c_.size() != ctx.degree)
        throw std::invalid_argument("Scalar: coefficient count does not match phi(order)");
}

Scalar Scalar::reduced(std::uint32_t order, std::vector<Rational> raw) {
    const auto& ctx = cyclo_context(order);
    Coeffs c(ctx.degree, Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k].is_zero()) continue;
        std::size_t e = k % order; // zeta^order = 1
        if (e < ctx.degree) {
            c[e] += raw[k];
        } else {
            const auto& row = ctx.pow[e - ctx.degree];
            for (std::uint32_t i = 0; i < ctx.degree; ++i) c[i] += raw[k] * row[i];
        }
    }
    Scalar s;
    s.order_ = order;
    s.c_ = std::move(c);
    return s;
}

Scalar Scalar::root_of_unity(std::uint32_t order, std::int64_t power) {
    std::int64_t e = power % (std::int64_t)order;
    if (e < 0) e += order;
    std::vector<Rational> raw((std::size_t)e + 1, Rational(0));
    raw[(std::size_t)e] = Rational(1);
    return reduced(order, std::move(raw));
}

bool Scalar::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Scalar::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Scalar Scalar::embedded(std::uint32_t m) const {
    if (m == order_) return *this;
    if (m % order_ != 0)
        throw std::domain_error("Scalar::embedded: target order not a multiple of source order");
    std::uint32_t step = m / order_;
    std::vector<Rational> raw((std::size_t)(order_ - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return reduced(m, std::move(raw));
}

void Scalar::align(Scalar& a, Scalar& b) {
    if (a.order_ == b.order_) return;
    if (a.is_rational()) {
        a = Scalar(a.c_[0]).embedded(b.order_);
        return;
    }
    if (b.is_rational()) {
        b = Scalar(b.c_[0]).embedded(a.order_);
        return;
    }
    throw std::domain_error("Scalar: mixed cyclotomic orders " + std::to_string(a.order_) +
                            " and " + std::to_string(b.order_) +
                            " (re-embed explicitly via embedded())");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::align(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::align(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::align(x, y);
    if (x.c_.size() == 1) { // rational fast path
        x.c_[0] *= y.c_[0];
        return x;
    }
    std::vector<Rational> raw(2 * x.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            raw[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return Scalar::reduced(x.order_, std::move(raw));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (is_rational()) {
        Scalar r = *this;
        r.c_[0] = Rational(1) / r.c_[0];
        return r;
    }
    // extended Euclid: u*a + v*Phi = 1 in Q[x], inverse = u mod Phi
    const auto& ctx = cyclo_context(order_);
    std::vector<Rational> r0(ctx.min_poly);
    std::vector<Rational> r1(c_.begin(), c_.end());
    poly_trim(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    while (!(r1.size() == 1 && r1[0].is_zero())) {
        // quotient of r0 by r1
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1,
                                Rational(0));
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0].is_zero())) {
            Rational lead = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = lead;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
            rem.pop_back();
            poly_trim(rem);
        }
        // s2 = s0 - q*s1
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (nonzero constant since Phi is irreducible and a != 0)
    if (r0.size() != 1)
        throw std::logic_error("Scalar::inverse: nontrivial gcd with cyclotomic polynomial");
    std::vector<Rational> u = std::move(s0);
    for (auto& coef : u) coef /= r0[0];
    poly_mod(u, ctx.min_poly);
    return reduced(order_, std::move(u));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::align(x, y);
    return x.c_ == y.c_;
}

std::complex<double> Scalar::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    double theta = 2.0 * std::numbers::pi / (double)order_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        z += c_[i].to_double() *
             std::complex<double>(std::cos(theta * (double)i), std::sin(theta * (double)i));
    }
    return z;
}

std::string Scalar::str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i > 0) os << "*z" << order_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::pair<std::uint32_t, std::vector<std::string>> Scalar::serialize() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& r : c_) out.push_back(r.str());
    return {order_, out};
}

Scalar Scalar::deserialize(std::uint32_t order, const std::vector<std::string>& coeffs) {
    const auto& ctx = cyclo_context(order);
    if (coeffs.size() != ctx.degree)
        throw std::invalid_argument("Scalar::deserialize: wrong coefficient count");
    Coeffs c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return Scalar(order, std::move(c));
}

} // namespace qhopf
