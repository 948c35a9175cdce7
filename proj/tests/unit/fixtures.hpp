#pragma once

// Hand-rolled algebras used as oracles across the test suite. These are
// built directly from the defining formulas, independent of the library
// constructions they later cross-check.

#include <array>
#include <string>
#include <vector>

#include "qhopf/group.hpp"
#include "qhopf/quasihopf.hpp"

namespace qhopf::fixtures {

inline FiniteGroup s3_group() {
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[(std::size_t)i] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp;
            for (int x = 0; x < 3; ++x)
                comp[(std::size_t)x] = perms[(std::size_t)i][(std::size_t)perms[(std::size_t)j][(std::size_t)x]];
            table[(std::size_t)i][(std::size_t)j] = find(comp);
        }
    return make_group(table);
}

// group algebra kG: grouplike coproduct, S = inverse, trivial associator,
// R = 1 (x) 1
inline QuasiTriangularQH group_hopf(const FiniteGroup& G, const std::string& name = "kG") {
    Space h = make_space(G.n, name);
    QuasiTriangularQH H(h, name);
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b)
            H.mult.add_entry((std::uint64_t)a * G.n + b, (std::uint64_t)G.op(a, b), Scalar::one());
        H.delta.add_entry((std::uint64_t)a, (std::uint64_t)a * G.n + a, Scalar::one());
        H.counit.add_entry((std::uint64_t)a, 0, Scalar::one());
        H.antipode.add_entry((std::uint64_t)a, (std::uint64_t)G.inv[(std::size_t)a], Scalar::one());
    }
    H.unit.add({0}, Scalar::one());
    H.alpha.add({0}, Scalar::one());
    H.beta.add({0}, Scalar::one());
    H.phi.add({0, 0, 0}, Scalar::one());
    H.phi_inv.add({0, 0, 0}, Scalar::one());
    H.r.add({0, 0}, Scalar::one());
    H.r_inv.add({0, 0}, Scalar::one());
    return H;
}

// function algebra on G with associator from a 3-cocycle and a diagonal
// braiding r(s,t); S inverts points, alpha = 1, beta carries the cocycle
inline QuasiTriangularQH function_hopf(const Cochain3& phi, const Cochain2& rfun,
                                       const std::string& name = "k(G)") {
    const FiniteGroup& G = *phi.group;
    int n = G.n;
    Space h = make_space(n, name);
    QuasiTriangularQH H(h, name);
    for (int s = 0; s < n; ++s) {
        H.mult.add_entry((std::uint64_t)s * n + s, (std::uint64_t)s, Scalar::one());
        H.unit.add(std::vector<int>{s}, Scalar::one());
        if (s == 0) H.counit.add_entry(0, 0, Scalar::one());
        H.antipode.add_entry((std::uint64_t)s, (std::uint64_t)G.inv[(std::size_t)s], Scalar::one());
        H.alpha.add(std::vector<int>{s}, Scalar::one());
        H.beta.add(std::vector<int>{s}, phi.at(G.inv[(std::size_t)s], s, G.inv[(std::size_t)s]));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            H.delta.add_entry((std::uint64_t)G.op(a, b), (std::uint64_t)a * n + b, Scalar::one());
            H.r.add({a, b}, rfun.at(a, b));
            H.r_inv.add({a, b}, rfun.at(a, b).inverse());
            for (int c = 0; c < n; ++c) {
                H.phi.add({a, b, c}, phi.at(a, b, c));
                H.phi_inv.add({a, b, c}, phi.at(a, b, c).inverse());
            }
        }
    return H;
}

// two-point function algebra with associator (-1)^(abc) and braiding
// r(1,1) = i, the smallest genuinely quasi quasitriangular example
inline QuasiTriangularQH semion_algebra() {
    static const Cochain3 phi = cyclic_cocycle(2, 1);
    static Cochain2 r = [] {
        Cochain2 c = constant_cochain2(*cyclic_cocycle(2, 1).group, Scalar::one());
        c.at(1, 1) = Scalar::root_of_unity(4, 1);
        return c;
    }();
    return function_hopf(phi, r, "semion");
}

} // namespace qhopf::fixtures
