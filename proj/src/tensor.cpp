#include "qhopf/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qhopf {

Tensor::Tensor(std::vector<Space> legs) : legs_(std::move(legs)) { rebuild_strides(); }

void Tensor::rebuild_strides() {
    strides_.assign(legs_.size(), 1);
    total_ = 1;
    for (int i = (int)legs_.size() - 1; i >= 0; --i) {
        strides_[i] = total_;
        std::uint64_t d = (std::uint64_t)legs_[i]->dim;
        if (d == 0) throw std::invalid_argument("Tensor: zero-dimensional leg");
        if (total_ > UINT64_MAX / d) throw std::overflow_error("Tensor: index space too large");
        total_ *= d;
    }
}

Tensor Tensor::unit_scalar(const Scalar& s) {
    Tensor t;
    if (!s.is_zero()) t.ents_.emplace(0, s);
    return t;
}

std::uint64_t Tensor::flatten(const std::vector<int>& idx) const {
    if (idx.size() != legs_.size()) throw std::invalid_argument("Tensor: index arity mismatch");
    std::uint64_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= legs_[i]->dim)
            throw std::out_of_range("Tensor: index out of range");
        f += (std::uint64_t)idx[i] * strides_[i];
    }
    return f;
}

std::vector<int> Tensor::unflatten(std::uint64_t flat) const {
    std::vector<int> idx(legs_.size());
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        idx[i] = (int)(flat / strides_[i]);
        flat %= strides_[i];
    }
    return idx;
}

void Tensor::add(std::uint64_t flat, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = ents_.try_emplace(flat, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) ents_.erase(it);
    }
}

void Tensor::add(const std::vector<int>& idx, const Scalar& c) { add(flatten(idx), c); }

void Tensor::set(const std::vector<int>& idx, const Scalar& c) {
    std::uint64_t f = flatten(idx);
    if (c.is_zero())
        ents_.erase(f);
    else
        ents_[f] = c;
}

Scalar Tensor::at(const std::vector<int>& idx) const { return at_flat(flatten(idx)); }

Scalar Tensor::at_flat(std::uint64_t flat) const {
    auto it = ents_.find(flat);
    return it == ents_.end() ? Scalar::zero() : it->second;
}

static void check_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (a.leg_count() != b.leg_count()) throw std::invalid_argument(std::string(what) + ": leg count mismatch");
    for (int i = 0; i < a.leg_count(); ++i)
        if (!compatible(a.legs()[i], b.legs()[i]))
            throw std::invalid_argument(std::string(what) + ": leg dimension mismatch");
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "Tensor+");
    Tensor r = a;
    for (const auto& [k, c] : b.ents_) r.add(k, c);
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "Tensor-");
    Tensor r = a;
    for (const auto& [k, c] : b.ents_) r.add(k, -c);
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r = *this;
    for (auto& [k, c] : r.ents_) c = -c;
    return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor r(legs_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : ents_) {
        Scalar prod = v * c;
        if (!prod.is_zero()) r.ents_.emplace(k, prod);
    }
    return r;
}

Tensor& Tensor::operator+=(const Tensor& b) {
    check_same_shape(*this, b, "Tensor+=");
    for (const auto& [k, c] : b.ents_) add(k, c);
    return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.leg_count() != b.leg_count()) return false;
    for (int i = 0; i < a.leg_count(); ++i)
        if (!compatible(a.legs()[i], b.legs()[i])) return false;
    return a.ents_ == b.ents_;
}

std::string Tensor::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ents_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        auto idx = unflatten(k);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            os << (i == 0 ? " " : " (x) ");
            os << legs_[i]->labels[idx[i]];
        }
    }
    if (first) os << "0";
    return os.str();
}

Tensor basis_tensor(const Space& v, int i) {
    Tensor t({v});
    t.add(std::vector<int>{i}, Scalar::one());
    return t;
}

Tensor tensor_of(const Tensor& a, const Tensor& b) {
    std::vector<Space> legs = a.legs();
    for (const auto& l : b.legs()) legs.push_back(l);
    Tensor r(std::move(legs));
    std::uint64_t bt = b.total_dim();
    for (const auto& [ka, ca] : a.entries())
        for (const auto& [kb, cb] : b.entries()) {
            Scalar c = ca * cb;
            if (!c.is_zero()) r.add(ka * bt + kb, c);
        }
    return r;
}

Tensor permute_legs(const Tensor& t, const std::vector<int>& perm) {
    if ((int)perm.size() != t.leg_count())
        throw std::invalid_argument("permute_legs: permutation arity mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= (int)perm.size() || seen[p])
            throw std::invalid_argument("permute_legs: not a permutation");
        seen[p] = true;
    }
    std::vector<Space> legs(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) legs[perm[j]] = t.legs()[j];
    Tensor r(std::move(legs));
    for (const auto& [k, c] : t.entries()) {
        auto idx = t.unflatten(k);
        std::vector<int> out(perm.size());
        for (std::size_t j = 0; j < perm.size(); ++j) out[perm[j]] = idx[j];
        r.add(out, c);
    }
    return r;
}

} // namespace qhopf
