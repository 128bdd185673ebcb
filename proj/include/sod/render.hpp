#pragma once

#include <string>

#include "sod/flags.hpp"

namespace sod {

// Plain-text twins of the JSON reports, for terminals.

std::string render_blocks(const std::vector<Block>& blocks, int k, int n);
std::string render_semiorth(const SemiorthReport& report);
std::string render_pushforward(const PushforwardReport& report);
std::string render_cohomology(const HomogeneousBundleWeight& w, const CohomologyResult& r);
std::string render_koszul(const std::vector<KoszulTerm>& terms, int k, int n);
std::string render_flag_blocks(const std::vector<FlagBlock>& blocks,
                               const std::vector<int>& ks, int n);
std::string render_flag_report(const FlagReport& report);

}  // namespace sod
