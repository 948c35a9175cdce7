#pragma once

#include <string>
#include <vector>

#include "qhopf/report.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

// Finite group as an explicit multiplication table.  Identity is element 0.
// Groups built from cyclic factors keep the factor data; elements of a direct
// product of cyclics are enumerated lexicographically by component.
struct FiniteGroup {
    int n = 1;
    std::vector<std::vector<int>> mul; // mul[g][h]
    std::vector<int> inv;
    std::vector<std::string> labels;
    std::vector<int> cyclic_orders;          // empty unless built from factors
    std::vector<std::vector<int>> component; // element -> digit tuple

    int op(int g, int h) const { return mul[g][h]; }
    bool is_abelian() const;
    int conj(int g, int s) const { return mul[mul[g][s]][inv[g]]; } // g s g^-1
};

// Build from cyclic factor orders; identity is the zero tuple.
FiniteGroup make_group(const std::vector<int>& cyclic_orders);

// Build from an explicit table.  Validates closure, identity at index 0,
// two-sided inverses, and associativity (exhaustive for n <= 64); an invalid
// table raises std::invalid_argument naming a violating triple.
FiniteGroup make_group(const std::vector<std::vector<int>>& table);

// Scalar-valued functions on G^2 / G^3 with invertible (nonzero) values.
struct Cochain2 {
    const FiniteGroup* group = nullptr;
    std::vector<Scalar> values; // [g*n + h]
    const Scalar& at(int g, int h) const { return values[(std::size_t)g * group->n + h]; }
    Scalar& at(int g, int h) { return values[(std::size_t)g * group->n + h]; }
};

struct Cochain3 {
    const FiniteGroup* group = nullptr;
    std::vector<Scalar> values; // [(g*n + h)*n + k]
    const Scalar& at(int g, int h, int k) const {
        return values[((std::size_t)g * group->n + h) * group->n + k];
    }
    Scalar& at(int g, int h, int k) {
        return values[((std::size_t)g * group->n + h) * group->n + k];
    }
};

Cochain2 constant_cochain2(const FiniteGroup& g, const Scalar& value);
Cochain3 constant_cochain3(const FiniteGroup& g, const Scalar& value);

// Pentagon / normalization test for a 3-cochain:
//   phi(b,c,d) phi(a,bc,d) phi(a,b,c) = phi(a,b,cd) phi(ab,c,d)
//   phi(a,e,b) = 1
// Every violation is reported with its witness tuple.
Report is_3cocycle(const Cochain3& phi);

// (dF)(g,h,k) = F(g,h) F(gh,k) / (F(h,k) F(g,hk))
Cochain3 coboundary3(const Cochain2& f);

// The +-1 cochain on Z2^3 whose coboundary twists the octonion product:
// F(g,h) = (-1)^f(g,h), f = sum_{i<=j} g_i h_j + h1 g2 g3 + g1 h2 g3 + g1 g2 h3.
Cochain2 octonion_cochain(const FiniteGroup& z2cubed);

// Braiding phase on Z2^3: +1 if g = e, h = e or g = h, else -1.
Cochain2 octonion_braiding(const FiniteGroup& z2cubed);

// phi(a,b,c) = zeta_n^(q * a * floor((b+c)/n)) on the cyclic group Z_n,
// representatives in {0,...,n-1}.
Cochain3 cyclic_cocycle(int n, int q);

// Checks the bicharacter-like laws a braiding function r on an abelian group
// must satisfy relative to phi:
//   r(gh,t) = r(g,t) r(h,t) phi(t,g,h) phi(g,h,t) / phi(g,t,h)
//   r(t,gh) = r(t,g) r(t,h) phi(g,t,h) / (phi(t,g,h) phi(g,h,t))
//   r(u,e) = r(e,u) = 1
Report check_r_function(const Cochain2& r, const Cochain3& phi);

} // namespace qhopf
