#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sod/integer.hpp"
#include "sod/partition.hpp"

namespace sod {

/// A dominant integer weight of GL(k): a weakly decreasing integer
/// sequence of length k. Negative entries are first-class; this is the
/// index of a Schur functor applied to a rank-k bundle.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> entries);

    /// Embed a partition as a GL(rank) weight, zero-padding on the right.
    static GLWeight from_partition(const Partition& p, int rank);

    int rank() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const { return entries_[static_cast<size_t>(i)]; }
    int min_entry() const;

    std::string str() const;

    bool operator==(const GLWeight& o) const { return entries_ == o.entries_; }
    std::strong_ordering operator<=>(const GLWeight& o) const {
        return entries_ <=> o.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Index of the dual representation: reverse and negate.
GLWeight dual(const GLWeight& w);

/// Tensor by the c-th power of the determinant: add c to every entry.
GLWeight det_shift(const GLWeight& w, int c);

/// Exact dimension of the irreducible GL(rank) representation with highest
/// weight w, by the Weyl product  prod_{i<j} (w_i - w_j + j - i)/(j - i).
Integer dim(const GLWeight& w);

}  // namespace sod
