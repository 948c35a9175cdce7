#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Budget for exhaustive identity checking. Tuple spaces at most
// `exhaustive_budget` are enumerated completely; larger ones are probed with
// `samples` tuples drawn from a fixed-seed generator so runs are repeatable.
struct VerifyPolicy {
    std::uint64_t exhaustive_budget = 1ull << 22;
    int samples = 500;
    std::uint64_t seed = 20240817;
};

// Enumerate (or sample) the tuple space with the given per-slot sizes.
// fn receives one tuple at a time; returns the number of tuples visited.
template <typename Fn>
std::uint64_t for_tuples(const std::vector<int>& dims, const VerifyPolicy& pol, Fn&& fn) {
    std::uint64_t total = 1;
    for (int d : dims) total *= (std::uint64_t)d;
    std::vector<int> idx(dims.size(), 0);
    if (total <= pol.exhaustive_budget) {
        for (std::uint64_t n = 0; n < total; ++n) {
            std::uint64_t rest = n;
            for (int j = (int)dims.size() - 1; j >= 0; --j) {
                idx[j] = (int)(rest % (std::uint64_t)dims[j]);
                rest /= (std::uint64_t)dims[j];
            }
            fn(idx);
        }
        return total;
    }
    std::mt19937_64 rng(pol.seed);
    for (int n = 0; n < pol.samples; ++n) {
        for (std::size_t j = 0; j < dims.size(); ++j)
            idx[j] = (int)(rng() % (std::uint64_t)dims[j]);
        fn(idx);
    }
    return (std::uint64_t)pol.samples;
}

// Record one comparison into cr; on mismatch the first differing coordinate
// is reported alongside the caller's witness string.
void check_tensor_eq(CheckResult& cr, const Tensor& lhs, const Tensor& rhs,
                     const std::string& witness);

} // namespace qhopf
