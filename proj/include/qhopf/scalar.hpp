#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qhopf/rational.hpp"

namespace qhopf {

// Power-basis data for Q(zeta_n): the n-th cyclotomic polynomial and
// reduction rows expressing zeta^k (deg <= k < n) in the basis
// 1, zeta, ..., zeta^(deg-1).
struct CycloContext {
    std::uint32_t order = 1;
    std::uint32_t degree = 1; // Euler phi(order)
    std::vector<Rational> min_poly; // monic, length degree+1
    std::vector<std::vector<Rational>> pow; // pow[k-degree] = zeta^k reduced
};

const CycloContext& cyclo_context(std::uint32_t order);

// Element of the cyclotomic field Q(zeta_N), stored as coefficients over the
// power basis, always reduced mod the N-th cyclotomic polynomial.  N is fixed
// per value; binary operations require equal N, except that values lying in Q
// embed into any order automatically.  Cross-order values that are not
// rational must be re-embedded explicitly (embedded()) by the caller.
class Scalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 2>;

    Scalar() : order_(1), c_(1, Rational(0)) {}
    explicit Scalar(const Rational& r) : order_(1), c_(1, r) {}
    Scalar(std::int64_t n) : order_(1), c_(1, Rational(n)) {}
    Scalar(std::uint32_t order, Coeffs coeffs);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    // zeta_order ^ power
    static Scalar root_of_unity(std::uint32_t order, std::int64_t power);

    std::uint32_t order() const { return order_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // true when the value lies in Q (all non-constant coefficients vanish)
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }

    // image under zeta_N -> zeta_M^(M/N); requires order() | M
    Scalar embedded(std::uint32_t m) const;

    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::string str() const;

    // serialization: order plus one "p/q" string per basis coefficient
    std::pair<std::uint32_t, std::vector<std::string>> serialize() const;
    static Scalar deserialize(std::uint32_t order, const std::vector<std::string>& coeffs);

private:
    // align a and b to a common order; throws on incompatible non-rational mix
    static void align(Scalar& a, Scalar& b);
    static Scalar reduced(std::uint32_t order, std::vector<Rational> raw);

    std::uint32_t order_;
    Coeffs c_; // length = phi(order_)
};

inline Scalar operator*(std::int64_t n, const Scalar& s) { return Scalar(n) * s; }

} // namespace qhopf
