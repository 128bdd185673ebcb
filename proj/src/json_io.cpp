#include "sod/json_io.hpp"

#include <limits>

namespace sod {

json integer_to_json(const Integer& v) {
    // Stay within the range JSON consumers can hold exactly in a double.
    static const Integer kMax = (Integer(1) << 53) - 1;
    if (v >= -kMax && v <= kMax) return v.convert_to<long long>();
    return v.str();
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json weight_to_json(const GLWeight& w) { return json(w.entries()); }

json multiset_to_json(const WeightMultiset& ms) {
    json arr = json::array();
    for (const auto& [w, m] : ms.entries())
        arr.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
    return arr;
}

json cohomology_to_json(const CohomologyResult& r) {
    if (!r) return {{"acyclic", true}};
    return {{"acyclic", false},
            {"degree", r->degree},
            {"weight", weight_to_json(r->weight)},
            {"dim", integer_to_json(r->dimension)}};
}

json pushforward_to_json(const PushforwardReport& r) {
    json summands = json::array();
    for (const PushforwardSummand& s : r.summands) {
        json item = {{"beta", weight_to_json(s.beta)}, {"mult", s.mult}};
        item["degree"] = s.result ? json(s.result->degree) : json(nullptr);
        item["dim"] = s.result ? integer_to_json(s.result->dimension) : json(nullptr);
        summands.push_back(std::move(item));
    }
    return {{"alpha", partition_to_json(r.alpha)},
            {"alpha_prime", partition_to_json(r.alpha_prime)},
            {"acyclic", r.is_acyclic},
            {"summands", std::move(summands)}};
}

json koszul_term_to_json(const KoszulTerm& t) {
    json pairs = json::array();
    for (const auto& [alpha, conj] : t.pairs)
        pairs.push_back({{"alpha", partition_to_json(alpha)}, {"conj", partition_to_json(conj)}});
    return {{"m", t.m}, {"twist", t.twist}, {"pairs", std::move(pairs)}};
}

json block_to_json(const Block& b) {
    return {{"alpha", partition_to_json(b.alpha)},
            {"position", b.position},
            {"twist", b.twist}};
}

json semiorth_to_json(const SemiorthReport& r) {
    json blocks = json::array();
    for (const Block& b : r.blocks) blocks.push_back(block_to_json(b));
    json matrix = json::array();
    for (const PairEntry& e : r.matrix)
        matrix.push_back({{"from", e.from},
                          {"to", e.to},
                          {"required", e.required},
                          {"report", pushforward_to_json(e.report)}});
    json violations = json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"from", partition_to_json(v.from)},
                              {"to", partition_to_json(v.to)},
                              {"from_position", v.from_position},
                              {"to_position", v.to_position}});
    return {{"k", r.k},
            {"n", r.n},
            {"order", r.order == BlockOrder::decreasing_lex ? "desc" : "asc"},
            {"period", r.period ? json(*r.period) : json(nullptr)},
            {"blocks", std::move(blocks)},
            {"matrix", std::move(matrix)},
            {"verdict", r.pass ? "pass" : "fail"},
            {"violations", std::move(violations)}};
}

json flag_report_to_json(const FlagReport& r) {
    json blocks = json::array();
    for (const FlagBlock& b : r.blocks) {
        json alphas = json::array();
        for (const Partition& p : b.alphas) alphas.push_back(partition_to_json(p));
        blocks.push_back({{"alphas", std::move(alphas)}, {"twist", b.twist}});
    }
    json levels = json::array();
    for (const SemiorthReport& level : r.levels) levels.push_back(semiorth_to_json(level));
    return {{"ks", r.ks},
            {"n", r.n},
            {"period", r.period ? json(*r.period) : json(nullptr)},
            {"blocks", std::move(blocks)},
            {"levels", std::move(levels)},
            {"verdict", r.pass ? "pass" : "fail"}};
}

}  // namespace sod
