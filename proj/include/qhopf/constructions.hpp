#pragma once

#include <memory>
#include <string>
#include <utility>

#include "qhopf/category.hpp"
#include "qhopf/group.hpp"
#include "qhopf/quasihopf.hpp"
#include "qhopf/transmute.hpp"

namespace qhopf {

// Conjugation-twisted cocycle pair on a finite group:
//   theta_s(g,h) = phi(g,g^-1sg,h) phi^-1(s,g,h) phi^-1(g,h,h^-1g^-1sgh)
//   gamma_g(a,b) = phi(a,g,g^-1bg) phi^-1(a,b,g) phi^-1(g,g^-1ag,g^-1bg)
// returned as tables theta.at(s,g,h) and gamma.at(g,a,b).  Validates that
// phi is a normalized 3-cocycle and that the three compatibility identities
// below hold on all tuples; throws std::runtime_error with the report text
// otherwise.
std::pair<Cochain3, Cochain3> derive_theta_gamma(const FiniteGroup& G, const Cochain3& phi);

// The three identities the pair must satisfy, each checked over G^4:
//   theta_s(g,h) theta_s(gh,k) = theta_s(g,hk) theta_{g^-1sg}(h,k)
//   gamma_g(a,b) gamma_g(ab,c) phi(a,b,c)
//       = gamma_g(a,bc) gamma_g(b,c) phi(g^-1ag,g^-1bg,g^-1cg)
//   theta_s(g,h) theta_t(g,h) gamma_g(s,t) gamma_h(g^-1sg,g^-1tg)
//       = theta_{st}(g,h) gamma_{gh}(s,t)
Report conjugation_cocycle_identities(const FiniteGroup& G, const Cochain3& phi,
                                      const Cochain3& theta, const Cochain3& gamma);

// Double of a group twisted by a 3-cocycle.  Basis (g, s) at index g*|G|+s,
// with product (g (x) d_s)(h (x) d_t) = [t = g^-1sg] theta_s(g,h) (gh (x) d_s),
// grouplike-with-gamma coproduct, the e-slice associator, and
// R = sum_g (e (x) d_g) (x) (g (x) 1).  The construction verifies itself and
// throws std::runtime_error with the failing report if any axiom breaks.
// cocycle/theta/gamma keep the caller's group pointer.
struct TwistedDoubleData {
    FiniteGroup group;
    Cochain3 cocycle;
    Cochain3 theta;   // at(s,g,h)
    Cochain3 gamma;   // at(g,a,b)
    QuasiTriangularQH algebra;
};

TwistedDoubleData twisted_double(const FiniteGroup& G, const Cochain3& phi,
                                 const std::string& name = "D(G)");

// Function algebra on G with pointwise product, associator from a 3-cocycle
// and diagonal braiding from an r-function.  Validates the cocycle, the
// r-function laws, and the normalization phi(t^-1,t,t^-1) phi(t,t^-1,t) = 1
// that the displayed beta relies on; runs the full verifier suite before
// returning.
QuasiTriangularQH group_function_algebra(const FiniteGroup& G, const Cochain3& phi,
                                         const Cochain2& r,
                                         const std::string& name = "k(G)");

// Group algebra of an abelian G with product twisted by a 2-cochain F:
// e_a e_b = F(a,b) e_{a+b}.  Graded by G, it lives as an algebra in the
// module category of the function algebra with associator dF, carried by
// the grading action d_b |> e_a = [b = a] e_a.  The struct owns that host.
struct GradedQuasiAlgebra {
    FiniteGroup group;
    Cochain2 cochain; // F, keeps the caller's group pointer
    std::shared_ptr<QuasiTriangularQH> host;
    LeftModule carrier;
    LinearMap product; // [V,V] -> [V]
    Tensor unit;       // e_identity
};

GradedQuasiAlgebra twisted_group_algebra(const FiniteGroup& G, const Cochain2& F,
                                         const std::string& name = "kFG");

// Checks on a graded quasialgebra: unit laws, grading of the product,
// quasiassociativity against the coboundary of F, quasicommutativity
// against F(a,b)/F(b,a), and the product being a module morphism.
Report verify_graded_quasialgebra(const GradedQuasiAlgebra& A, const VerifyPolicy& pol = {});

// The braided group algebra dual to the transmuted function algebra, living
// in the same module category through the trivializing action psi |> g =
// psi(e) g.  Structure is the displayed closed form (product gh carries
// phi(gh,(gh)^-1,gh)/(phi(g,g^-1,g) phi(h,h^-1,h)), grouplike coproduct with
// phi(g,g^-1,g), counit phi(g^-1,g,g^-1), antipode g^-1 with the squared
// factor).  host must be group_function_algebra(G, phi, r) and outlive the
// result.  Verifies the braided-group axioms and the pairing law below;
// throws std::runtime_error with the report on failure.
BraidedGroup dual_braided_group(const FiniteGroup& G, const Cochain3& phi,
                                const QuasiTriangularQH& host);

// Duality law tying the two braided groups over one host: for all s, g, h,
//   ev (R^-1 legwise) (id (x) ev (x) id) (delta (x) id (x) id)
//       = ev (id (x) mult)
// on d_s (x) g (x) h, where ev pairs d_a with alpha |> x by point evaluation,
// delta is the braided coproduct of `functions` and mult the braided product
// of `dual`.
Report verify_dual_pairing(const BraidedGroup& dual, const BraidedGroup& functions);

} // namespace qhopf
