#pragma once

#include <string>

#include "qhopf/derived.hpp"
#include "qhopf/quasihopf.hpp"

namespace qhopf {

// Left module over a quasi-Hopf algebra: a based carrier space and an action
// [H,V] -> [V]. The algebra is referenced, not owned, and must outlive the
// module. Carriers of tensor-product modules are flattened product spaces
// (leg 0 most significant), so composite indices agree with Tensor::flatten.
struct LeftModule {
    const QuasiHopfAlgebra* algebra = nullptr;
    Space space;
    LinearMap action; // [H, V] -> [V]
    std::string name;

    int dim() const { return space->dim; }
    // h (index) acting on a sparse vector over the carrier
    SparseVec act(int h, const SparseVec& v) const;
};

// A linear map between module carriers, to be checked for equivariance.
struct ModuleMorphismCandidate {
    LeftModule source;
    LeftModule target;
    LinearMap map; // [source] -> [target]
};

// tensor product of based spaces with index (a,b) -> a*dim(B)+b
Space product_space(const Space& a, const Space& b);
// tensor product of single-leg maps on the matching product spaces
LinearMap map_tensor(const LinearMap& f, const LinearMap& g);

// 1 |> v = v and (gh) |> v = g |> (h |> v); tuple spaces within the policy
// budget are exhausted, larger ones sampled. The label names the checks when
// several reports are merged.
Report verify_module(const LeftModule& V, const VerifyPolicy& pol = {},
                     const std::string& label = "module");
// f(h |> v) = h |> f(v), same budget convention
Report verify_module_morphism(const ModuleMorphismCandidate& f, const VerifyPolicy& pol = {},
                              const std::string& label = "morphism");

// carrier k, action through the counit
LeftModule trivial_module(const QuasiHopfAlgebra& H);
// carrier H, action by left multiplication
LeftModule regular_module(const QuasiHopfAlgebra& H);
// carrier H, action h |> b = h1 b S(h2)
LeftModule adjoint_module(const QuasiHopfAlgebra& H);

// h |> (v (x) w) = h1 |> v (x) h2 |> w on the product carrier
LeftModule module_tensor(const LeftModule& V, const LeftModule& W);

// (U(x)V)(x)W -> U(x)(V(x)W), (u(x)v)(x)w -> X1|>u (x) (X2|>v (x) X3|>w);
// associator_inverse is the same formula through phi_inv
ModuleMorphismCandidate associator(const LeftModule& U, const LeftModule& V, const LeftModule& W);
ModuleMorphismCandidate associator_inverse(const LeftModule& U, const LeftModule& V,
                                           const LeftModule& W);

// U(x)V -> V(x)U, u(x)v -> R2|>v (x) R1|>u; the inverse transposes back
// through R^{-1}: v(x)u -> R-1|>u (x) R-2|>v
ModuleMorphismCandidate braiding(const QuasiTriangularQH& H, const LeftModule& U,
                                 const LeftModule& V);
ModuleMorphismCandidate braiding_inverse(const QuasiTriangularQH& H, const LeftModule& U,
                                         const LeftModule& V);

// Dual module on the dual basis, (h |> f)(v) = f(S(h) |> v), together with
// the evaluation V*(x)V -> k, f(x)v -> f(alpha |> v), and the coevaluation
// k -> V(x)V*, 1 -> sum_a beta |> e_a (x) f^a. Both land in / start from the
// trivial module.
struct RigidDual {
    LeftModule dual;
    ModuleMorphismCandidate ev;   // dual (x) V -> trivial
    ModuleMorphismCandidate coev; // trivial -> V (x) dual
};
RigidDual dual_module(const LeftModule& V);

// unit constraints as explicit maps: V -> I(x)V and V -> V(x)I are the
// canonical index identifications
LinearMap left_unit_map(const LeftModule& V);  // [V] -> [I(x)V]
LinearMap right_unit_map(const LeftModule& V); // [V] -> [V(x)I]

// The two snake composites equal the identity on V and V*, and ev, coev and
// the dual action are equivariant. Checks:
//   r^-1 (id (x) ev) Phi (coev (x) id) l = id_V
//   l^-1 (ev (x) id) Phi^-1 (id (x) coev) r = id_V*
Report verify_rigidity(const LeftModule& V, const VerifyPolicy& pol = {});

// Natural family indexed by modules M: xi_M(v (x) m) = q1 psi(v) S(q2) |> m,
// where psi : V -> B is an equivariant map into the adjoint module. The q
// element is fixed at construction; components are built on demand.
struct ThetaFamily {
    const QuasiTriangularQH* algebra = nullptr;
    LeftModule source;  // V
    LinearMap psi;      // [V] -> [H]
    Tensor q_s;         // q1 (x) S(q2), precomposed
    LinearMap component(const LeftModule& M) const; // [V (x) M] -> [M]
};

// Requires psi.target to be the adjoint module and psi to be equivariant;
// throws std::invalid_argument otherwise.
ThetaFamily theta(const QuasiTriangularQH& H, const ModuleMorphismCandidate& psi);

// Recovers the equivariant map from the component at the left regular
// module: psi(v) = xi(p1 |> v (x) p2).
ModuleMorphismCandidate theta_inverse(const QuasiTriangularQH& H, const LeftModule& V,
                                      const LinearMap& xi_at_regular);

// Components at the regular module, the adjoint module and its tensor square
// are equivariant, and theta_inverse(theta(psi)) = psi on the nose.
Report verify_theta(const QuasiTriangularQH& H, const ModuleMorphismCandidate& psi,
                    const VerifyPolicy& pol = {});

} // namespace qhopf
