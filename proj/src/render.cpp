#include "sod/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sod {

namespace {

std::string tuple_str(const std::vector<Partition>& alphas) {
    std::string s;
    for (size_t i = 0; i < alphas.size(); ++i) {
        if (i > 0) s += " ";
        s += alphas[i].str();
    }
    return s;
}

char matrix_mark(const PairEntry& e) {
    if (e.report.is_acyclic) return '.';
    if (e.required) return 'X';
    if (e.from == e.to) {
        // Exceptional diagonal: a single group in degree 0 of dimension 1.
        int nonzero = 0;
        bool unit = false;
        for (const auto& s : e.report.summands)
            if (s.result) {
                ++nonzero;
                unit = s.result->degree == 0 && s.result->dimension == 1 && s.mult == 1;
            }
        if (nonzero == 1 && unit) return 'E';
    }
    return '+';
}

}  // namespace

std::string render_blocks(const std::vector<Block>& blocks, int k, int n) {
    std::ostringstream os;
    os << "Gr(" << k << "," << n << "): " << blocks.size() << " blocks\n";
    os << " pos  alpha" << std::string(static_cast<size_t>(std::max(2 * k, 5)), ' ')
       << "twist\n";
    for (const Block& b : blocks)
        os << std::setw(4) << b.position << "  " << std::setw(2 * k + 8) << std::left
           << b.alpha.str() << std::right << std::setw(3) << b.twist << "\n";
    return os.str();
}

std::string render_semiorth(const SemiorthReport& report) {
    std::ostringstream os;
    os << render_blocks(report.blocks, report.k, report.n);
    os << "order: " << (report.order == BlockOrder::decreasing_lex ? "decreasing" : "increasing")
       << " lex\n\n";

    const int b = static_cast<int>(report.blocks.size());
    os << "vanishing matrix (row = Hom source, column = Hom target)\n    ";
    for (int j = 0; j < b; ++j) os << std::setw(3) << j;
    os << "\n";
    for (int i = 0; i < b; ++i) {
        os << std::setw(4) << i;
        for (int j = 0; j < b; ++j) {
            const PairEntry& e = report.matrix[static_cast<size_t>(i * b + j)];
            os << "  " << matrix_mark(e);
        }
        os << "\n";
    }
    os << "legend: . acyclic | E exceptional (deg 0, dim 1) | + nonzero, allowed | X violation\n\n";

    int required = 0, required_ok = 0, informational = 0;
    for (const PairEntry& e : report.matrix) {
        if (e.required) {
            ++required;
            if (e.report.is_acyclic) ++required_ok;
        } else if (e.from != e.to && !e.report.is_acyclic) {
            ++informational;
        }
    }
    os << "required vanishings: " << required_ok << "/" << required
       << " hold; informational non-vanishings: " << informational << "\n";
    for (const Violation& v : report.violations)
        os << "violation: Hom(" << v.from.str() << " -> " << v.to.str() << ") at positions ("
           << v.from_position << "," << v.to_position << ")\n";
    os << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_pushforward(const PushforwardReport& report) {
    std::ostringstream os;
    os << "Rq_* Hom(S^" << report.alpha.str() << " R, S^" << report.alpha_prime.str()
       << " R) on Gr(" << report.k << "," << report.n << ")\n";
    os << "  beta" << std::string(static_cast<size_t>(2 * report.k + 6), ' ')
       << "mult  result\n";
    for (const PushforwardSummand& s : report.summands) {
        os << "  " << std::setw(2 * report.k + 10) << std::left << s.beta.str() << std::right
           << std::setw(4) << s.mult << "  ";
        if (s.result)
            os << "H^" << s.result->degree << " dim " << s.result->dimension;
        else
            os << "acyclic";
        os << "\n";
    }
    os << "acyclic: " << (report.is_acyclic ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_cohomology(const HomogeneousBundleWeight& w, const CohomologyResult& r) {
    std::ostringstream os;
    os << "bbw(delta=" << w.delta.str() << ", gamma=" << w.gamma.str() << ", n=" << w.n
       << "): ";
    if (r)
        os << "H^" << r->degree << " = S^" << r->weight.str() << " E, dim " << r->dimension;
    else
        os << "acyclic";
    os << "\n";
    return os.str();
}

std::string render_koszul(const std::vector<KoszulTerm>& terms, int k, int n) {
    std::ostringstream os;
    os << "Koszul resolution of the diagonal, Gr(" << k << "," << n << "), length "
       << k * (n - k) << "\n";
    for (const KoszulTerm& t : terms) {
        os << "  m=" << std::setw(2) << t.m << " twist " << std::setw(2) << t.twist << ":";
        for (const auto& [alpha, conj] : t.pairs)
            os << "  " << alpha.str() << "|" << conj.str();
        os << "\n";
    }
    return os.str();
}

std::string render_flag_blocks(const std::vector<FlagBlock>& blocks,
                               const std::vector<int>& ks, int n) {
    std::ostringstream os;
    os << "Fl(";
    for (size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
    os << "; " << n << "): " << blocks.size() << " blocks\n";
    for (const FlagBlock& b : blocks)
        os << std::setw(4) << b.position << "  " << tuple_str(b.alphas) << "  twist "
           << b.twist << "\n";
    return os.str();
}

std::string render_flag_report(const FlagReport& report) {
    std::ostringstream os;
    os << render_flag_blocks(report.blocks, report.ks, report.n);
    for (size_t i = 0; i < report.levels.size(); ++i) {
        int ambient = i + 1 < report.ks.size() ? report.ks[i + 1] : report.n;
        os << "level " << i + 1 << ": Gr(" << report.ks[i] << "," << ambient << ") "
           << (report.levels[i].pass ? "PASS" : "FAIL") << "\n";
    }
    os << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace sod
