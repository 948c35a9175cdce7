#pragma once

#include <memory>
#include <string>

#include "qhopf/bosonise.hpp"
#include "qhopf/constructions.hpp"
#include "qhopf/derived.hpp"

namespace qhopf {

// Which pieces of structure a morphism candidate respects.  Used both as a
// request (which checks to run) and as a record (which checks have passed).
struct MorphismChecks {
    bool algebra = false;        // f(ab) = f(a)f(b) and f(1) = 1
    bool counit = false;         // eps o f = eps
    bool coproduct = false;      // Delta o f = (f (x) f) o Delta
    bool associator = false;     // (f (x) f (x) f)(phi) = phi
    bool distinguished = false;  // f(alpha) = alpha, f(beta) = beta
    bool antipode = false;       // f o S = S o f
    bool bijective = false;      // composes with the inverse to the identity

    static MorphismChecks all() { return {true, true, true, true, true, true, true}; }
    static MorphismChecks bialgebra() { return {true, true, true, false, false, false, true}; }
};

// A linear map between two quasi-Hopf algebras together with the record of
// which structure checks have actually passed; flags in `checked` are set
// only by verify_morphism and only when the corresponding identity held on
// every tuple it visited.  `inverse` may be empty, in which case the
// bijectivity check inverts `map` itself.
struct StructureMorphism {
    const QuasiHopfAlgebra* source = nullptr;
    const QuasiHopfAlgebra* target = nullptr;
    LinearMap map;
    LinearMap inverse;
    MorphismChecks checked;
    std::string name;
};

// Run the requested checks against the structure tables of source and
// target, one named CheckResult per flag, and set m.checked flags for those
// that pass.  Tuple spaces above the policy budget are sampled with the
// policy seed; a flag is still set in that case, so callers who need the
// exhaustive guarantee keep the default budget.
Report verify_morphism(StructureMorphism& m, MorphismChecks request,
                       const VerifyPolicy& pol = {});

// Pull the target's quasitriangular structure back along m: the source
// algebra re-bundled with r = (inverse (x) inverse)(r_target) and its
// componentwise inverse.  Requires m.inverse; throws std::invalid_argument
// without it, std::domain_error if the transported r is not invertible.
QuasiTriangularQH transport_quasitriangular(const StructureMorphism& m,
                                            const Tensor& r_target);

// The square H (x) H carrying the componentwise product and the entwined
// coproduct: both ordinary coproducts decorated by five associator pairs
// and the braiding with its inverse, evaluated per column.  H must outlive
// the kernel.
class EntwinedKernel {
  public:
    explicit EntwinedKernel(const QuasiTriangularQH& H);
    int dim() const { return nh_ * nh_; }
    SparseVec mult_column(std::uint64_t i, std::uint64_t j) const;
    SparseVec delta_column(std::uint64_t i) const;

  private:
    const QuasiTriangularQH* h_;
    int nh_;
    AttachPlan y_cap_, y_sm_, w_sm_, w_cap_, r_, r_inv_, t_cap_, t_sm_, x_sm_, x_cap_;
};

// The crossed product of the covariantized host with the host itself, the
// entwined square it is isomorphic to, and the isomorphism with its inverse.
// `tabulated` mirrors the bosonisation flag: above the table budget the
// heavy structure tables (product, coproduct, antipode on both sides) stay
// empty and the two kernels supply columns on demand.  The host must
// outlive this object.
struct PairedIsomorphism {
    std::shared_ptr<Bosonisation> smash;
    std::shared_ptr<QuasiHopfAlgebra> pair;
    std::shared_ptr<CrossedKernel> smash_ops;
    std::shared_ptr<EntwinedKernel> pair_ops;
    StructureMorphism morphism; // smash -> pair
    bool tabulated = true;
};

// Build the isomorphism a (x) h |-> q1 (x1 |> a) S(q2) x2 h_1 (x) x3 h_2
// from the crossed product onto the entwined square, along with its inverse
// a (x) h |-> x1 a X1 beta S(x2 h_1 X2) (x) x3 h_2 X3.  The pair's counit,
// antipode, alpha, beta, and associator are transported along the map from
// the crossed product (its own tables are not displayed anywhere), so the
// coproduct intertwining check stays meaningful while the rest of the
// structure is transported by construction.
PairedIsomorphism entwine(const QuasiTriangularQH& H, const std::string& name = "",
                          std::uint64_t table_budget = ~0ull);

// Just the entwined square of H with full tables.
QuasiHopfAlgebra double_cross(const QuasiTriangularQH& H, const std::string& name = "");

// The grouplike crossed product over the function algebra, the twisted
// double it is isomorphic to, and the diagonal isomorphism with its inverse.
// Owns every intermediate object.
struct DoubleIsomorphism {
    std::shared_ptr<QuasiTriangularQH> functions; // pointwise algebra on G
    std::shared_ptr<Bosonisation> smash;          // group algebra x| functions
    std::shared_ptr<TwistedDoubleData> dbl;
    StructureMorphism morphism; // smash -> double
    Tensor r_smash;             // (inverse (x) inverse)(r of the double)
};

// Build g (x) d_t |-> g (x) d_t phi(g^-1,g,g^-1) / r(g,t) from the crossed
// product of the braided group algebra with the function algebra onto the
// twisted double of the same cocycle, with inverse carrying
// phi(g,g^-1,g) r(g,t).  r must satisfy the braiding-function laws for phi.
// Also transports the double's quasitriangular structure back to the
// crossed product (closed form: sum_g e (x) d_g (x) g (x) 1 with
// coefficient phi(g,g^-1,g) r(g,g)).
DoubleIsomorphism grouplike_double_iso(const FiniteGroup& G, const Cochain3& phi,
                                       const Cochain2& r, const std::string& name = "");

} // namespace qhopf
