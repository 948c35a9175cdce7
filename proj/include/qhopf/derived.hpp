#pragma once

#include "qhopf/quasihopf.hpp"

namespace qhopf {

// Canonical elements built from the associator and antipode. f is the
// Drinfeld twist relating S to the opposite coproduct; g is its inverse;
// q and p mediate between the coproduct and the tensor-square module
// structure. antipode_inv is computed once since q needs it.
struct DerivedElements {
    Tensor big_a;       // 4 legs
    Tensor big_b;       // 4 legs
    Tensor gamma;       // 2 legs
    Tensor delta_el;    // 2 legs
    Tensor f;           // 2 legs
    Tensor g;           // 2 legs, inverse of f
    Tensor q;           // 2 legs
    Tensor p;           // 2 legs
    LinearMap antipode_inv;
};

DerivedElements derive_elements(const QuasiHopfAlgebra& H);

// Identities the derived elements satisfy: the twist relations for f and g,
// the two associator contractions equal to 1 (x) 1, and the four exchange
// laws for q and p.
Report verify_derived(const QuasiHopfAlgebra& H, const DerivedElements& d,
                      const VerifyPolicy& pol = {});

// Closed form of the inverse of R from phi, R, the antipode and alpha/beta.
Tensor r_inverse_formula(const QuasiTriangularQH& H);

// Inverse of a two-leg element under the componentwise product of H (x) H,
// computed by inverting left multiplication on the flattened square.
// Throws std::domain_error if the element is not invertible.
Tensor pair_element_inverse(const QuasiHopfAlgebra& H, const Tensor& element);

} // namespace qhopf
