#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

// A finite-dimensional vector space with a distinguished ordered basis.
struct BasedSpace {
    int dim = 0;
    std::vector<std::string> labels;
    std::string name;

    BasedSpace() = default;
    BasedSpace(int d, std::string nm) : dim(d), name(std::move(nm)) {
        for (int i = 0; i < d; ++i) labels.push_back(name + "[" + std::to_string(i) + "]");
    }
    BasedSpace(int d, std::vector<std::string> lbl, std::string nm)
        : dim(d), labels(std::move(lbl)), name(std::move(nm)) {}
};

using Space = std::shared_ptr<const BasedSpace>;

inline Space make_space(int dim, std::string name) {
    return std::make_shared<BasedSpace>(dim, std::move(name));
}
inline Space make_space(int dim, std::vector<std::string> labels, std::string name) {
    return std::make_shared<BasedSpace>(dim, std::move(labels), std::move(name));
}

// Spaces are compatible when they have equal dimension; identity of the
// shared_ptr is not required so reconstructions of the same object compose.
inline bool compatible(const Space& a, const Space& b) { return a->dim == b->dim; }

// Sparse element of a tensor product of based spaces.  Entries are keyed by
// the flattened multi-index (leg 0 most significant), kept in a sorted map so
// iteration order, equality, and serialization are deterministic.  Zero
// coefficients are pruned on every write.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<Space> legs);

    static Tensor unit_scalar(const Scalar& s); // zero legs, single entry

    const std::vector<Space>& legs() const { return legs_; }
    int leg_count() const { return (int)legs_.size(); }
    const std::map<std::uint64_t, Scalar>& entries() const { return ents_; }
    std::uint64_t total_dim() const { return total_; }
    bool is_zero() const { return ents_.empty(); }

    // index helpers
    std::uint64_t flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::uint64_t flat) const;
    std::uint64_t stride(int leg) const { return strides_[leg]; }

    void add(std::uint64_t flat, const Scalar& c);
    void add(const std::vector<int>& idx, const Scalar& c);
    void set(const std::vector<int>& idx, const Scalar& c);
    Scalar at(const std::vector<int>& idx) const;
    Scalar at_flat(std::uint64_t flat) const;

    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    Tensor operator-() const;
    Tensor scaled(const Scalar& c) const;
    Tensor& operator+=(const Tensor& b);

    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    std::string str() const;
    std::size_t term_count() const { return ents_.size(); }

private:
    void rebuild_strides();
    std::vector<Space> legs_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t total_ = 1;
    std::map<std::uint64_t, Scalar> ents_;
};

// basis vector e_i of a space, as a 1-leg tensor
Tensor basis_tensor(const Space& v, int i);

// outer product, legs of a followed by legs of b
Tensor tensor_of(const Tensor& a, const Tensor& b);

// Distribute legs by position: factor j of the input goes to position
// perm[j] of the output.  With X = x1 (x) x2 (x) x3 and perm = {2,0,1},
// the result is x2 (x) x3 (x) x1 (by the "component 1 lands in slot
// perm[0]" convention).
Tensor permute_legs(const Tensor& t, const std::vector<int>& perm);

} // namespace qhopf
