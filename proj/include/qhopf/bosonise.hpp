#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qhopf/category.hpp"
#include "qhopf/constructions.hpp"
#include "qhopf/quasihopf.hpp"
#include "qhopf/transmute.hpp"

namespace qhopf {

// A module of a braided group inside the module category of its host: the
// carrier is an ordinary host-module and the braided action [B,V] -> [V]
// is equivariant and associative up to the associator.
struct BraidedModule {
    const BraidedGroup* braided = nullptr;
    LeftModule carrier; // category structure: host acting on V
    LinearMap action;   // [B, V] -> [V]
    std::string name;
};

// Checks: unit element acts as identity, composition law
//   b |> (c |> v) = ((x1 |> b) (x2 |> c)) |> (x3 |> v),
// and the action being a host-module morphism.
Report verify_braided_module(const BraidedModule& V, const VerifyPolicy& pol = {});

// Per-column evaluators for the crossed product, with the contraction plans
// built once.  bosonise() drives these in loops; checks on spaces too large
// to tabulate call them directly.  The braided group (or carrier/product in
// the algebra-only form) and its host must outlive the kernel.
class CrossedKernel {
  public:
    // Full form: every structure column available.
    explicit CrossedKernel(const BraidedGroup& B);
    // Algebra-only form: delta and antipode columns throw std::logic_error.
    CrossedKernel(const LeftModule& carrier, const LinearMap& product);

    int dim() const { return nb_ * nh_; }
    bool full() const { return bdelta_ != nullptr; }
    // Columns over pair indices b * dim(H) + h; delta columns are flattened
    // over the square of that space.
    SparseVec mult_column(std::uint64_t i, std::uint64_t j) const;
    SparseVec delta_column(std::uint64_t i) const;
    SparseVec counit_column(std::uint64_t i) const;
    SparseVec antipode_column(std::uint64_t i) const;

  private:
    const QuasiHopfAlgebra* h_;
    const LinearMap* act_;
    const LinearMap* bmult_;
    const LinearMap* bdelta_ = nullptr;
    const LinearMap* bcounit_ = nullptr;
    const LinearMap* banti_ = nullptr;
    Space vb_;
    Space hs_;
    int nb_;
    int nh_;
    AttachPlan m_x_;
    std::optional<AttachPlan> d_cap_, d_sm_, d_r_, d_y_cap_, d_y_sm_;
    std::optional<AttachPlan> s_r_, s_x_, s_beta_, s_cap_, s_alpha_;
};

// A braided group crossed with its host on the space B (x) H.  When built
// from a full braided group every structure map of `result` is filled and
// `full` is set; the algebra-only form fills just the product and unit.
// `tabulated` records whether the product, coproduct, and antipode tables
// were materialized eagerly; above the table budget they become lazy maps
// that compute columns through a CrossedKernel on demand and cache them.
// `braided` keeps a copy of the input (with empty coalgebra maps in the
// algebra-only case) so transferred modules can point back at it; host must
// outlive this object.
struct Bosonisation {
    BraidedGroup braided;
    const QuasiTriangularQH* host = nullptr;
    bool full = false;
    bool tabulated = true;
    QuasiHopfAlgebra result;
    LinearMap embed_b; // b |-> b (x) 1
    LinearMap embed_h; // h |-> 1_B (x) h
};

// Crossed product of a braided group with its host:
//   (b (x) h)(c (x) g) = (x1 |> b) (x2 h_1 |> c) (x) x3 h_2 g
// with the braided coproduct spread over four legs through two associator
// copies, their inverses, and one braiding; counit eps_B (x) eps; antipode
// evaluated as a sparse element before its coproduct is taken; alpha, beta
// and the associator are the host's with unit padding.  The result is an
// ordinary quasi-Hopf algebra; callers run the verifier suite on it.
// When dim^2 exceeds table_budget the product, coproduct, and antipode
// become lazy column maps and `tabulated` is cleared; unit, counit, alpha,
// beta, associator, and the embeddings are always materialized.
Bosonisation bosonise(const BraidedGroup& B, const std::string& name = "",
                      std::uint64_t table_budget = ~0ull);

// A graded quasialgebra carries no braided coproduct, so the full crossed
// product does not exist; always throws std::invalid_argument naming
// bosonise_algebra as the right entry point.
Bosonisation bosonise(const GradedQuasiAlgebra& A);

// Algebra-only crossed product: the product formula above needs nothing
// beyond the carrier action and an associative-in-the-category product, so
// any algebra in the module category can be crossed.  Associativity of the
// result follows from quasiassociativity of the input; verify_algebra
// checks it exhaustively.
Bosonisation bosonise_algebra(const LeftModule& carrier, const LinearMap& product,
                              const Tensor& unit, const std::string& name = "");

// Convenience form for a graded quasialgebra; also wires the grading host
// into the package (the generic form cannot recover it from the carrier).
Bosonisation bosonise_algebra(const GradedQuasiAlgebra& A, const std::string& name = "");

// Unit laws and associativity of a plain (mult, unit) pair on one space.
Report verify_algebra(const LinearMap& mult, const Tensor& unit,
                      const VerifyPolicy& pol = {});

// The modules of the crossed product are the braided modules of B: the two
// transfers below convert in each direction and are mutually inverse.
//   to ordinary:  (b (x) h) |> v = b |> (h |> v)
//   to braided:   h |> v = j(h) v,  b |> v = i(b) v
LeftModule module_transfer_to_ordinary(const Bosonisation& bos, const BraidedModule& V);
BraidedModule module_transfer_to_braided(const Bosonisation& bos, const LeftModule& W);

} // namespace qhopf
