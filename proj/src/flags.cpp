#include "sod/flags.hpp"

#include <stdexcept>

namespace sod {

namespace {

void check_ks(const std::vector<int>& ks, int n) {
    if (ks.empty()) throw std::invalid_argument("flag ranks must be nonempty");
    if (ks.front() < 1) throw std::invalid_argument("flag ranks must start at 1 or more");
    for (size_t i = 1; i < ks.size(); ++i)
        if (ks[i - 1] >= ks[i])
            throw std::invalid_argument("flag ranks must be strictly increasing");
    if (ks.back() >= n) throw std::invalid_argument("flag ranks must stay below n");
}

}  // namespace

std::vector<FlagBlock> flag_blocks(const std::vector<int>& ks, int n,
                                   std::optional<int> period) {
    check_ks(ks, n);
    const size_t m = ks.size();
    std::vector<std::vector<Partition>> levels(m);
    for (size_t i = 0; i < m; ++i) {
        int ambient = i + 1 < m ? ks[i + 1] : n;
        levels[i] = enumerate_box(ks[i], ambient - ks[i]);
    }

    // Level 1 is the lexicographic major coordinate of the concatenated
    // tuple, so the plain product order is already decreasing lex.
    std::vector<FlagBlock> out;
    std::vector<Partition> cur(m);
    auto rec = [&](auto&& self, size_t level) -> void {
        if (level == m) {
            FlagBlock block;
            block.alphas = cur;
            block.position = static_cast<int>(out.size());
            long long w = 0;
            for (const Partition& p : cur) w += p.weight();
            block.twist = period ? w % *period : w;
            out.push_back(std::move(block));
            return;
        }
        for (const Partition& p : levels[level]) {
            cur[level] = p;
            self(self, level + 1);
        }
    };
    if (period && *period < 1) throw std::invalid_argument("period must be positive");
    rec(rec, 0);
    return out;
}

FlagRankAudit flag_rank_audit(const std::vector<int>& ks, int n) {
    check_ks(ks, n);
    FlagRankAudit audit;
    audit.count = static_cast<long long>(flag_blocks(ks, n).size());
    audit.expected = 1;
    for (size_t i = 0; i < ks.size(); ++i) {
        int ambient = i + 1 < ks.size() ? ks[i + 1] : n;
        audit.expected *= binomial(ambient, ks[i]);
    }
    audit.equal = Integer(audit.count) == audit.expected;
    return audit;
}

SemiorthReport relative_semiorth_check(const std::vector<int>& ks, int n, int level) {
    check_ks(ks, n);
    if (level < 1 || level > static_cast<int>(ks.size()))
        throw std::invalid_argument("level out of range");
    size_t i = static_cast<size_t>(level - 1);
    int ambient = i + 1 < ks.size() ? ks[i + 1] : n;
    return verify_semiorthogonality(ks[i], ambient);
}

FlagReport verify_flag(const std::vector<int>& ks, int n, std::optional<int> period) {
    FlagReport report;
    report.ks = ks;
    report.n = n;
    report.period = period;
    report.blocks = flag_blocks(ks, n, period);
    report.pass = true;
    for (int level = 1; level <= static_cast<int>(ks.size()); ++level) {
        report.levels.push_back(relative_semiorth_check(ks, n, level));
        report.pass = report.pass && report.levels.back().pass;
    }
    return report;
}

}  // namespace sod
