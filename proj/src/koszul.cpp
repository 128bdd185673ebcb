#include "sod/koszul.hpp"

#include <stdexcept>

#include "sod/gl_weight.hpp"

namespace sod {

std::vector<KoszulTerm> koszul_terms(int k, int n) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("koszul_terms requires 1 <= k < n");
    const int top = k * (n - k);
    std::vector<KoszulTerm> terms(static_cast<size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
        terms[static_cast<size_t>(m)].m = m;
        terms[static_cast<size_t>(m)].twist = m;
    }
    // Bucketing the decreasing-lex box enumeration keeps every term sorted.
    for (const Partition& alpha : enumerate_box(k, n - k)) {
        auto m = static_cast<size_t>(alpha.weight());
        Partition conj = Partition::padded(conjugate(alpha).parts(), n - k);
        terms[m].pairs.emplace_back(alpha, std::move(conj));
    }
    return terms;
}

CauchyCheck cauchy_dimension_check(int dim_v, int dim_w, int m) {
    if (dim_v < 1 || dim_w < 1)
        throw std::invalid_argument("cauchy_dimension_check requires positive dimensions");
    if (m < 0) throw std::invalid_argument("exterior power degree must be nonnegative");
    CauchyCheck check;
    check.lhs = binomial(static_cast<long long>(dim_v) * dim_w, m);
    check.rhs = 0;
    for (const Partition& alpha : enumerate_box(dim_v, dim_w)) {
        if (alpha.weight() != m) continue;
        check.rhs += dim(GLWeight::from_partition(alpha, dim_v)) *
                     dim(GLWeight::from_partition(conjugate(alpha), dim_w));
    }
    check.equal = check.lhs == check.rhs;
    return check;
}

long long twist_class(const Partition& alpha, std::optional<int> period) {
    long long w = alpha.weight();
    if (period) {
        if (*period < 1) throw std::invalid_argument("period must be positive");
        w %= *period;
    }
    return w;
}

}  // namespace sod
