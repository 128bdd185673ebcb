#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sod/integer.hpp"
#include "sod/partition.hpp"

namespace sod {

/// Degree-m graded piece of the Koszul resolution of the diagonal of
/// Gr(k,n): the conjugate pairs (alpha, alpha*) over box partitions of
/// weight m. `alpha` has declared length k, `alpha_conjugate` length n-k.
struct KoszulTerm {
    int m = 0;
    long long twist = 0;  // the tensor power of the algebra acting on the pair
    std::vector<std::pair<Partition, Partition>> pairs;
};

/// Terms for m = 0 .. k(n-k); their union is exactly the k x (n-k) box.
std::vector<KoszulTerm> koszul_terms(int k, int n);

/// Dimension shadow of the Cauchy identity
///   Lambda^m(V (x) W) = sum_{|alpha| = m} S^alpha V (x) S^{alpha*} W.
struct CauchyCheck {
    Integer lhs;  // C(dimV * dimW, m)
    Integer rhs;  // sum of dim S^alpha(V) * dim S^{alpha*}(W)
    bool equal = false;
};

CauchyCheck cauchy_dimension_check(int dim_v, int dim_w, int m);

/// |alpha|, reduced mod the order of the Brauer class when supplied.
long long twist_class(const Partition& alpha, std::optional<int> period = {});

}  // namespace sod
