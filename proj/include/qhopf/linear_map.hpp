#pragma once

#include <atomic>
#include <functional>
#include <shared_mutex>
#include <unordered_map>

#include "qhopf/tensor.hpp"

namespace qhopf {

using SparseVec = std::map<std::uint64_t, Scalar>;

void sv_add(SparseVec& v, std::uint64_t k, const Scalar& c);
SparseVec sv_scaled(const SparseVec& v, const Scalar& c);

// Linear map between tensor products of based spaces, stored column-wise and
// sparse.  Columns may be produced by a generator on demand (with a memo
// cache) so maps on dim-4096 spaces never materialize 16M columns; maps on
// small spaces are materialized eagerly, which also enables support indexes
// used to skip zero products during contraction.  Copies share storage.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::vector<Space> dom, std::vector<Space> cod);
    LinearMap(std::vector<Space> dom, std::vector<Space> cod,
              std::function<SparseVec(std::uint64_t)> gen);

    static LinearMap identity(const std::vector<Space>& v);

    // false for a default-constructed map with no domain or storage yet
    bool defined() const { return impl_ != nullptr; }

    const std::vector<Space>& dom() const;
    const std::vector<Space>& cod() const;
    std::uint64_t dom_dim() const;
    std::uint64_t cod_dim() const;

    // mutate during construction (complete maps only)
    void set_column(std::uint64_t i, SparseVec col);
    void add_entry(std::uint64_t col, std::uint64_t row, const Scalar& c);

    const SparseVec& column(std::uint64_t i) const;
    bool lazy() const;
    bool materialized() const;
    void materialize() const; // force all columns (domain must be small)

    // two-leg domain pair access: column of (a,b)
    const SparseVec& at(std::uint64_t a, std::uint64_t b) const;
    // indices a with at(a,b) != 0 / b with at(a,b) != 0; requires materialized
    const std::vector<std::uint32_t>& left_support(std::uint64_t b) const;
    const std::vector<std::uint32_t>& right_support(std::uint64_t a) const;

    Tensor apply_vec(const Tensor& t) const; // domain legs must match t exactly
    LinearMap compose(const LinearMap& inner) const; // this o inner
    Tensor to_tensor() const; // legs = cod + dom (matrix as 2-block tensor)

    friend bool operator==(const LinearMap& a, const LinearMap& b);
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

    // Gaussian elimination over the exact scalars; throws if singular.
    LinearMap inverse() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    void ensure() const;
};

// Apply m to the selected legs of t (legs listed in increasing order, matched
// to m's domain legs in order).  The codomain legs replace the selected block
// at the position of the first selected leg; all other legs keep their order.
Tensor apply_at(const LinearMap& m, const Tensor& t, const std::vector<int>& legs);

// Pointwise product of equal-shaped tensors, leg k multiplied with mults[k]
// (a [V_k, V_k] -> [V_k] map).  This is the convolution product of Sweedler
// legs: (a . b)_leg = mult(a_leg, b_leg) on every leg.
Tensor convolve(const Tensor& a, const Tensor& b, const std::vector<const LinearMap*>& mults);

// Embed t into a larger tensor product: t's legs land at `positions` (in
// order), every other slot is filled with the given unit element for that
// slot.  Classic use: R_13 from R with identity legs elsewhere.
Tensor embed_with_units(const Tensor& t, const std::vector<Space>& ambient,
                        const std::vector<int>& positions, const std::vector<Tensor>& units);

// Reinterpret the leg structure of a map without touching its entries; the
// flattened domain and codomain totals must match.  Lets a [B,B] -> [B]
// table double as a map on the flattened product space and back.
LinearMap with_legs(const LinearMap& m, std::vector<Space> dom, std::vector<Space> cod);

// ---- contraction engine ----------------------------------------------------
//
// attach() folds a decoration tensor u into a working tensor W term by term:
// each leg of u either multiplies a leg of W from the left or right (op =
// algebra multiplication on that leg), acts on a leg of W (op = module
// action [H,V]->[V]), or is appended as a new leg of W.  Listed ops apply in
// order, so two multiplications aimed at one leg compose in reading order.
// Every Sweedler copy of a structure tensor is attached independently, which
// is exactly the "repeated copies are independent summation legs" rule.

enum class Fold { LMul, RMul, Act, NewLeg };

struct AttachOp {
    int uleg;
    Fold mode;
    int wleg = -1;             // target leg of W (ignored for NewLeg)
    const LinearMap* op = nullptr; // 2-leg-domain map; null for NewLeg
};

Tensor attach(const Tensor& w, const Tensor& u, const std::vector<AttachOp>& ops);

// Reusable form of attach: the decoration u is indexed once (per-leg value
// buckets, a joint key over every op that still sees the original w value,
// and per-value admissible-u lists read off the ops' support indexes), then
// apply() folds it into any number of working tensors.  Worth it whenever
// one decoration is attached inside a loop over basis elements or pairs.
class AttachPlan {
public:
    AttachPlan(Tensor u, std::vector<AttachOp> ops);
    Tensor apply(const Tensor& w) const;

private:
    struct JoinOp {
        int op_index = -1;
        int shift = 0; // bit offset of this leg inside the joint key
        // w-leg value -> u values that pair nonzero with it (and occur in u)
        std::vector<std::vector<std::uint32_t>> surv;
        // w-leg value -> total size of the single-leg buckets over surv
        std::vector<std::uint64_t> cost;
        std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> bucket;
    };
    Tensor u_;
    std::vector<AttachOp> ops_;
    std::vector<std::pair<std::vector<int>, Scalar>> uterms_;
    std::vector<JoinOp> join_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> keyed_;
};

// Merge two legs of W through a bilinear op ([A,B] -> [C]): the result lands
// at position i, leg j disappears.  merge_act is op(i acts on j), result at
// j's position with leg i removed.
Tensor merge_mul(const Tensor& w, int i, int j, const LinearMap& op);
Tensor merge_act(const Tensor& w, int i, int j, const LinearMap& act);

} // namespace qhopf
