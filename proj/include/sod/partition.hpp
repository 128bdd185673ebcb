#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sod {

/// A weakly decreasing sequence of nonnegative integers with a fixed
/// declared length. Trailing zeros are kept: the declared length is what
/// makes lexicographic comparison and GL(k)-weight conversion total.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Zero-pad `parts` to `length` entries. Throws if they do not fit.
    static Partition padded(std::vector<int> parts, int length);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Part at 0-based index i, 0 beyond the declared length.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// |alpha|, the number of boxes.
    long long weight() const;

    /// Number of nonzero parts.
    int rows() const;

    bool is_zero() const { return rows() == 0; }

    /// True if at most k nonzero parts, each at most b.
    bool fits_box(int k, int b) const { return rows() <= k && part(0) <= b; }

    std::string str() const;  // "(2,1,0)"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

/// Equality of shapes, ignoring trailing zeros.
bool same_shape(const Partition& a, const Partition& b);

/// Conjugate (transposed diagram): alpha*_j = #{i : alpha_i >= j}.
/// Declared length of the result is alpha_1.
Partition conjugate(const Partition& p);

/// First-difference comparison. Throws on declared-length mismatch.
std::strong_ordering lex_compare(const Partition& p, const Partition& q);

/// All partitions with at most k parts, each part at most b, zero-padded to
/// length k, in strictly decreasing lexicographic order. C(k+b, k) entries.
std::vector<Partition> enumerate_box(int k, int b);

}  // namespace sod
