#pragma once

#include <json.hpp>

#include "sod/flags.hpp"

namespace sod {

using nlohmann::json;

// Keys come out sorted (nlohmann objects are ordered maps), so dumps are
// byte-identical across runs for identical inputs.

json integer_to_json(const Integer& v);  // number when it fits, decimal string otherwise

json partition_to_json(const Partition& p);
json weight_to_json(const GLWeight& w);
json multiset_to_json(const WeightMultiset& ms);
json cohomology_to_json(const CohomologyResult& r);
json pushforward_to_json(const PushforwardReport& r);
json koszul_term_to_json(const KoszulTerm& t);
json block_to_json(const Block& b);
json semiorth_to_json(const SemiorthReport& r);
json flag_report_to_json(const FlagReport& r);

}  // namespace sod
