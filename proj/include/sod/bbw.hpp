#pragma once

#include <optional>
#include <vector>

#include "sod/integer.hpp"
#include "sod/lr.hpp"

namespace sod {

/// An irreducible homogeneous bundle on Gr(k,n), written against the
/// tautological sequence 0 -> R -> E -> T -> 0: `delta` is the Schur index
/// on the rank n-k quotient T, `gamma` the index on the rank k subbundle R.
struct HomogeneousBundleWeight {
    GLWeight delta;  // quotient slot, rank n-k
    GLWeight gamma;  // subbundle slot, rank k
    int n = 0;

    HomogeneousBundleWeight(GLWeight delta_, GLWeight gamma_, int n_);
};

/// The single nonzero cohomology group an irreducible bundle can have.
/// `weight` is a dominant GL(n) weight (a Schur functor of the ambient
/// bundle); only its dimension carries contractual meaning.
struct Cohomology {
    int degree = 0;
    GLWeight weight;
    Integer dimension;
};

/// Bott's alternative: acyclic (nullopt) or exactly one group.
using CohomologyResult = std::optional<Cohomology>;

/// Borel-Bott-Weil for Gr(k,n). Concatenate (delta | gamma) into a length-n
/// vector, add rho = (n-1, ..., 0); a repeated entry means acyclic, otherwise
/// the inversion count of the shifted vector is the cohomological degree and
/// the sorted vector minus rho is the output weight.
CohomologyResult bbw(const HomogeneousBundleWeight& w);

struct PushforwardSummand {
    GLWeight beta;  // rank k summand of the Hom bundle
    long long mult = 0;
    CohomologyResult result;
};

/// Rq_* Hom(S^alpha R, S^alpha' R), summand by summand.
struct PushforwardReport {
    Partition alpha;
    Partition alpha_prime;
    int k = 0;
    int n = 0;
    std::vector<PushforwardSummand> summands;
    bool is_acyclic = true;
};

/// Decompose Hom(S^alpha R, S^alpha' R) into irreducibles and push each
/// forward via bbw. Both partitions must fit in the k x (n-k) box.
PushforwardReport pushforward_hom(const Partition& alpha, const Partition& alpha_prime,
                                  int k, int n);

/// Full cohomology table of O(d) on P^m; the independent oracle used to
/// pin the bbw conventions.
struct LineBundleCohomology {
    long long d = 0;
    int m = 0;
    std::vector<Integer> h;  // h[i] = dim H^i, size m+1
};

LineBundleCohomology line_bundle_oracle(long long d, int m);

}  // namespace sod
