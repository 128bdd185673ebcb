#pragma once

#include <optional>
#include <vector>

#include "sod/bbw.hpp"
#include "sod/koszul.hpp"
#include "sod/partition.hpp"

namespace sod {

/// One block S(alpha) of the decomposition of Gr(k,n), at its position in
/// the chosen enumeration order.
struct Block {
    Partition alpha;
    int position = 0;
    long long twist = 0;
};

enum class BlockOrder { decreasing_lex, increasing_lex };

/// Which Hom direction has to vanish. The canonical condition is
/// "no morphisms from later blocks into earlier ones".
enum class HomDirection { later_to_earlier, earlier_to_later };

std::vector<Block> blocks(int k, int n, std::optional<int> period = {},
                          BlockOrder order = BlockOrder::decreasing_lex);

/// One cell of the verification matrix: the pushforward of
/// Hom(S^{alpha_from} R, S^{alpha_to} R).
struct PairEntry {
    int from = 0;
    int to = 0;
    bool required = false;  // counted toward the verdict
    PushforwardReport report;
};

struct Violation {
    Partition from;
    Partition to;
    int from_position = 0;
    int to_position = 0;
};

struct SemiorthReport {
    int k = 0;
    int n = 0;
    BlockOrder order = BlockOrder::decreasing_lex;
    HomDirection direction = HomDirection::later_to_earlier;
    std::optional<int> period;
    std::vector<Block> blocks;
    std::vector<PairEntry> matrix;  // all ordered pairs, diagonal included
    bool pass = false;
    std::vector<Violation> violations;
};

struct VerifyOptions {
    BlockOrder order = BlockOrder::decreasing_lex;
    HomDirection direction = HomDirection::later_to_earlier;
    std::optional<int> period;
};

/// Fill the full pairwise pushforward matrix and check that every required
/// direction vanishes. Non-vanishings in the opposite direction are
/// recorded but never fail the verdict; the diagonal entries document
/// exceptionality and are likewise informational.
SemiorthReport verify_semiorthogonality(int k, int n, const VerifyOptions& options = {});

struct RankAudit {
    long long block_count = 0;
    Integer expected;  // C(n, k)
    bool equal = false;
};

RankAudit k_rank_audit(int k, int n);

/// Cross-link of the Koszul terms with the block list: the resolution has
/// length k(n-k) and its term partitions enumerate the blocks exactly once.
struct DiagonalResolutionSummary {
    int length = 0;
    std::vector<KoszulTerm> terms;
    Integer generator_count;  // C(n, k)
    bool bijection_ok = false;
};

DiagonalResolutionSummary diagonal_resolution_summary(int k, int n);

}  // namespace sod
