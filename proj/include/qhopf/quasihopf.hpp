#pragma once

#include <string>
#include <vector>

#include "qhopf/linear_map.hpp"
#include "qhopf/tensor.hpp"
#include "qhopf/verify.hpp"

namespace qhopf {

// A finite-dimensional quasi-bialgebra presented by structure constants on a
// fixed basis. The coproduct is coassociative only up to conjugation by the
// associator phi, which lives in the triple tensor product.
struct QuasiBialgebra {
    Space space;
    std::string name;
    LinearMap mult;   // [H,H] -> [H]
    Tensor unit;      // 1 leg
    LinearMap delta;  // [H] -> [H,H]
    LinearMap counit; // [H] -> []
    Tensor phi;       // 3 legs
    Tensor phi_inv;   // 3 legs

    explicit QuasiBialgebra(const Space& h, std::string nm = "H")
        : space(h), name(std::move(nm)), mult({h, h}, {h}), unit({h}),
          delta({h}, {h, h}), counit({h}, {}), phi({h, h, h}), phi_inv({h, h, h}) {}

    int dim() const { return space->dim; }

    // multiply two elements of H^(x n) leg by leg
    Tensor product(const Tensor& a, const Tensor& b) const;
    // split leg `leg` of t with the coproduct (new legs sit at leg, leg+1)
    Tensor coproduct(const Tensor& t, int leg) const;
    // coproduct followed by swapping the two fresh legs
    Tensor op_coproduct(const Tensor& t, int leg) const;
    Tensor counit_at(const Tensor& t, int leg) const;
    // place t's legs at the given positions of an n-fold power of H, the
    // remaining slots carrying the unit
    Tensor embed(const Tensor& t, int total, const std::vector<int>& at) const;
    Tensor basis(int i) const { return basis_tensor(space, i); }
    // phi with factor j placed in slot subscripts[j] (subscripts are 1-based,
    // matching the usual phi_{312} shorthand)
    Tensor phi_at(int i, int j, int k, bool inverse = false) const;
};

// Adds the antipode triple (S, alpha, beta).
struct QuasiHopfAlgebra : QuasiBialgebra {
    LinearMap antipode; // [H] -> [H]
    Tensor alpha, beta; // 1 leg each

    explicit QuasiHopfAlgebra(const Space& h, std::string nm = "H")
        : QuasiBialgebra(h, std::move(nm)), antipode({h}, {h}), alpha({h}), beta({h}) {}

    Tensor antipode_at(const Tensor& t, int leg) const;
    // (S (x) S) of the opposite coproduct applied at leg (two fresh legs)
    Tensor s_op_coproduct(const Tensor& t, int leg) const;
};

// Adds the quasitriangular structure R with its inverse.
struct QuasiTriangularQH : QuasiHopfAlgebra {
    Tensor r, r_inv; // 2 legs each

    explicit QuasiTriangularQH(const Space& h, std::string nm = "H")
        : QuasiHopfAlgebra(h, std::move(nm)), r({h, h}), r_inv({h, h}) {}
};

// Axiom checks. Each returns a Report with one named CheckResult per law;
// tuple spaces above the policy budget are sampled with the policy seed.
Report verify_quasibialgebra(const QuasiBialgebra& H, const VerifyPolicy& pol = {});
Report verify_antipode(const QuasiHopfAlgebra& H, const VerifyPolicy& pol = {});
Report verify_quasitriangular(const QuasiTriangularQH& H, const VerifyPolicy& pol = {});

Report verify_quasihopf(const QuasiHopfAlgebra& H, const VerifyPolicy& pol = {});
Report verify_all(const QuasiTriangularQH& H, const VerifyPolicy& pol = {});

} // namespace qhopf
