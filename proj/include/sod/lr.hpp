#pragma once

#include <map>

#include "sod/gl_weight.hpp"
#include "sod/integer.hpp"
#include "sod/partition.hpp"

namespace sod {

/// Decreasing lexicographic order on weights of equal rank.
struct DecLexWeight {
    bool operator()(const GLWeight& a, const GLWeight& b) const {
        return a.entries() > b.entries();
    }
};

/// A finite multiset of GL(k) weights with positive multiplicities,
/// kept sorted in decreasing lex order.
class WeightMultiset {
public:
    explicit WeightMultiset(int rank) : rank_(rank) {}

    void add(const GLWeight& w, long long mult);
    long long multiplicity(const GLWeight& w) const;

    int rank() const { return rank_; }
    const std::map<GLWeight, long long, DecLexWeight>& entries() const {
        return entries_;
    }
    size_t size() const { return entries_.size(); }

    /// Sum of mult * dim over all entries, exact.
    Integer total_dim() const;

    bool operator==(const WeightMultiset& o) const {
        return rank_ == o.rank_ && entries_ == o.entries_;
    }

private:
    int rank_ = 0;
    std::map<GLWeight, long long, DecLexWeight> entries_;
};

/// Littlewood-Richardson coefficient c^c_{a,b}: the number of semistandard
/// skew tableaux of shape c/a and content b whose reverse reading word is a
/// lattice word. Zero when |a| + |b| != |c| or a is not contained in c.
long long lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

/// Decomposition of S^u (x) S^v into irreducibles of GL(k): shift both
/// weights into partitions, run LR, drop summands with more than k rows,
/// shift back. Throws on rank mismatch.
WeightMultiset tensor_decompose(const GLWeight& u, const GLWeight& v);

/// Decomposition of Hom(S^alpha R, S^alpha' R) = S^{alpha dual} (x) S^alpha'
/// as GL(k) functors. Both partitions must fit declared length k.
WeightMultiset hom_decompose(const Partition& alpha, const Partition& alpha_prime, int k);

}  // namespace sod
