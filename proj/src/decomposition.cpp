#include "sod/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sod {

std::vector<Block> blocks(int k, int n, std::optional<int> period, BlockOrder order) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("blocks requires 1 <= k < n");
    std::vector<Partition> box = enumerate_box(k, n - k);
    if (order == BlockOrder::increasing_lex)
        std::reverse(box.begin(), box.end());
    std::vector<Block> out;
    out.reserve(box.size());
    for (size_t i = 0; i < box.size(); ++i)
        out.push_back({box[i], static_cast<int>(i), twist_class(box[i], period)});
    return out;
}

SemiorthReport verify_semiorthogonality(int k, int n, const VerifyOptions& options) {
    SemiorthReport report;
    report.k = k;
    report.n = n;
    report.order = options.order;
    report.direction = options.direction;
    report.period = options.period;
    report.blocks = blocks(k, n, options.period, options.order);

    const int b = static_cast<int>(report.blocks.size());
    report.matrix.reserve(static_cast<size_t>(b) * b);
    for (int from = 0; from < b; ++from) {
        for (int to = 0; to < b; ++to) {
            PairEntry entry;
            entry.from = from;
            entry.to = to;
            entry.required = options.direction == HomDirection::later_to_earlier
                                 ? from > to
                                 : from < to;
            entry.report = pushforward_hom(report.blocks[static_cast<size_t>(from)].alpha,
                                           report.blocks[static_cast<size_t>(to)].alpha, k, n);
            if (entry.required && !entry.report.is_acyclic)
                report.violations.push_back({report.blocks[static_cast<size_t>(from)].alpha,
                                             report.blocks[static_cast<size_t>(to)].alpha,
                                             from, to});
            report.matrix.push_back(std::move(entry));
        }
    }
    report.pass = report.violations.empty();
    return report;
}

RankAudit k_rank_audit(int k, int n) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("k_rank_audit requires 1 <= k < n");
    RankAudit audit;
    audit.block_count = static_cast<long long>(enumerate_box(k, n - k).size());
    audit.expected = binomial(n, k);
    audit.equal = Integer(audit.block_count) == audit.expected;
    return audit;
}

DiagonalResolutionSummary diagonal_resolution_summary(int k, int n) {
    DiagonalResolutionSummary summary;
    summary.length = k * (n - k);
    summary.terms = koszul_terms(k, n);
    summary.generator_count = binomial(n, k);

    // Every term partition must be a block and every block must appear in
    // exactly one term.
    std::map<std::vector<int>, int> seen;
    for (const Block& block : blocks(k, n)) seen[block.alpha.parts()] = 0;
    bool ok = true;
    for (const KoszulTerm& term : summary.terms)
        for (const auto& [alpha, conj] : term.pairs) {
            auto it = seen.find(alpha.parts());
            if (it == seen.end() || !same_shape(conjugate(alpha), conj)) {
                ok = false;
            } else {
                ++it->second;
            }
        }
    for (const auto& [alpha, count] : seen) ok = ok && count == 1;
    summary.bijection_ok = ok;
    return summary;
}

}  // namespace sod
