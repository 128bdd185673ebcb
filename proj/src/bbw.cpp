#include "sod/bbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace sod {

HomogeneousBundleWeight::HomogeneousBundleWeight(GLWeight delta_, GLWeight gamma_, int n_)
    : delta(std::move(delta_)), gamma(std::move(gamma_)), n(n_) {
    if (delta.rank() + gamma.rank() != n)
        throw std::invalid_argument("slot ranks must add up to n");
    if (gamma.rank() < 1 || delta.rank() < 1)
        throw std::invalid_argument("both slots must be nonempty (1 <= k < n)");
}

CohomologyResult bbw(const HomogeneousBundleWeight& w) {
    const int n = w.n;
    std::vector<int> u;
    u.reserve(static_cast<size_t>(n));
    u.insert(u.end(), w.delta.entries().begin(), w.delta.entries().end());
    u.insert(u.end(), w.gamma.entries().begin(), w.gamma.entries().end());
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] += n - 1 - i;  // + rho

    std::vector<int> sorted = u;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;  // a repeat: the bundle is acyclic

    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u[static_cast<size_t>(i)] < u[static_cast<size_t>(j)]) ++inversions;

    for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] -= n - 1 - i;  // - rho
    GLWeight out(std::move(sorted));
    Integer d = dim(out);
    return Cohomology{inversions, std::move(out), std::move(d)};
}

PushforwardReport pushforward_hom(const Partition& alpha, const Partition& alpha_prime,
                                  int k, int n) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("pushforward_hom requires 1 <= k < n");
    if (!alpha.fits_box(k, n - k) || !alpha_prime.fits_box(k, n - k))
        throw std::invalid_argument("partition does not fit the k x (n-k) box");

    PushforwardReport report;
    report.alpha = Partition::padded(alpha.parts(), k);
    report.alpha_prime = Partition::padded(alpha_prime.parts(), k);
    report.k = k;
    report.n = n;

    const GLWeight zero_delta = GLWeight(std::vector<int>(static_cast<size_t>(n - k), 0));
    for (const auto& [beta, mult] : hom_decompose(alpha, alpha_prime, k).entries()) {
        PushforwardSummand s;
        s.beta = beta;
        s.mult = mult;
        s.result = bbw(HomogeneousBundleWeight(zero_delta, beta, n));
        if (s.result) report.is_acyclic = false;
        report.summands.push_back(std::move(s));
    }
    return report;
}

LineBundleCohomology line_bundle_oracle(long long d, int m) {
    if (m < 1) throw std::invalid_argument("projective dimension must be >= 1");
    LineBundleCohomology table;
    table.d = d;
    table.m = m;
    table.h.assign(static_cast<size_t>(m) + 1, Integer(0));
    if (d >= 0) table.h[0] = binomial(d + m, m);
    if (d <= -m - 1) table.h[static_cast<size_t>(m)] = binomial(-d - 1, m);
    return table;
}

}  // namespace sod
