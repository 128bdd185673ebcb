#pragma once

#include <optional>
#include <vector>

#include "sod/decomposition.hpp"

namespace sod {

/// A block of the flag decomposition for Fl(k_1, ..., k_m; n): one
/// partition per level, level i living in the k_i x (k_{i+1} - k_i) box
/// (with k_{m+1} = n).
struct FlagBlock {
    std::vector<Partition> alphas;
    int position = 0;
    long long twist = 0;  // sum of level twists
};

/// Cartesian product of the per-level box enumerations, in decreasing lex
/// order on the concatenated tuples. Count = prod C(k_{i+1}, k_i).
std::vector<FlagBlock> flag_blocks(const std::vector<int>& ks, int n,
                                   std::optional<int> period = {});

struct FlagRankAudit {
    long long count = 0;
    Integer expected;
    bool equal = false;
};

FlagRankAudit flag_rank_audit(const std::vector<int>& ks, int n);

/// The level-i factor of the flag decomposition is a relative
/// Gr(k_i, k_{i+1}); its semiorthogonality matrix is exactly the matrix of
/// that grassmannian. Level is 1-based.
SemiorthReport relative_semiorth_check(const std::vector<int>& ks, int n, int level);

struct FlagReport {
    std::vector<int> ks;
    int n = 0;
    std::optional<int> period;
    std::vector<FlagBlock> blocks;
    std::vector<SemiorthReport> levels;
    bool pass = false;  // conjunction over levels
};

FlagReport verify_flag(const std::vector<int>& ks, int n, std::optional<int> period = {});

}  // namespace sod
