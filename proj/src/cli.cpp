#include "sod/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sod/json_io.hpp"
#include "sod/render.hpp"

namespace sod {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Partition parse_partition(const std::string& s) { return Partition(parse_int_list(s)); }

GLWeight parse_weight(const std::string& s) { return GLWeight(parse_int_list(s)); }

void emit(std::ostream& out, bool as_json, const json& j, const std::string& table) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << table;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"semiorthogonal block decompositions of grassmannians and flag varieties"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of a table");

    int exit_code = 0;

    // blocks k n
    {
        auto* cmd = app.add_subcommand("blocks", "list the lex-ordered blocks of Gr(k,n)");
        cmd->fallthrough();
        auto k = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto period = std::make_shared<int>(0);
        cmd->add_option("k", *k, "subbundle rank")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        auto* p = cmd->add_option("--period", *period, "order of the Brauer class");
        cmd->callback([&, k, n, period, p] {
            std::optional<int> per;
            if (p->count()) per = *period;
            auto list = blocks(*k, *n, per);
            json j = {{"k", *k},
                      {"n", *n},
                      {"period", per ? json(*per) : json(nullptr)},
                      {"blocks", json::array()}};
            for (const Block& b : list) j["blocks"].push_back(block_to_json(b));
            emit(out, as_json, j, render_blocks(list, *k, *n));
        });
    }

    // verify k n [--order asc|desc] [--period p]
    {
        auto* cmd = app.add_subcommand("verify", "verify semiorthogonality for Gr(k,n)");
        cmd->fallthrough();
        auto k = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto order = std::make_shared<std::string>("desc");
        auto period = std::make_shared<int>(0);
        cmd->add_option("k", *k, "subbundle rank")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        cmd->add_option("--order", *order, "block order: desc (canonical) or asc (diagnostic)")
            ->check(CLI::IsMember({"asc", "desc"}));
        auto* p = cmd->add_option("--period", *period, "order of the Brauer class");
        cmd->callback([&, k, n, order, period, p] {
            VerifyOptions options;
            options.order = *order == "asc" ? BlockOrder::increasing_lex
                                            : BlockOrder::decreasing_lex;
            if (p->count()) options.period = *period;
            SemiorthReport report = verify_semiorthogonality(*k, *n, options);
            emit(out, as_json, semiorth_to_json(report), render_semiorth(report));
            if (!report.pass) exit_code = 1;
        });
    }

    // flag-blocks ks n
    {
        auto* cmd = app.add_subcommand("flag-blocks", "list the blocks of Fl(k1,...,km; n)");
        cmd->fallthrough();
        auto ks = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto period = std::make_shared<int>(0);
        cmd->add_option("ks", *ks, "comma-separated flag ranks")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        auto* p = cmd->add_option("--period", *period, "order of the Brauer class");
        cmd->callback([&, ks, n, period, p] {
            std::optional<int> per;
            if (p->count()) per = *period;
            auto ranks = parse_int_list(*ks);
            auto list = flag_blocks(ranks, *n, per);
            json j = {{"ks", ranks},
                      {"n", *n},
                      {"period", per ? json(*per) : json(nullptr)},
                      {"blocks", json::array()}};
            for (const FlagBlock& b : list) {
                json alphas = json::array();
                for (const Partition& a : b.alphas) alphas.push_back(partition_to_json(a));
                j["blocks"].push_back({{"alphas", std::move(alphas)}, {"twist", b.twist}});
            }
            emit(out, as_json, j, render_flag_blocks(list, ranks, *n));
        });
    }

    // flag-verify ks n
    {
        auto* cmd =
            app.add_subcommand("flag-verify", "verify every level of Fl(k1,...,km; n)");
        cmd->fallthrough();
        auto ks = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto period = std::make_shared<int>(0);
        cmd->add_option("ks", *ks, "comma-separated flag ranks")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        auto* p = cmd->add_option("--period", *period, "order of the Brauer class");
        cmd->callback([&, ks, n, period, p] {
            std::optional<int> per;
            if (p->count()) per = *period;
            FlagReport report = verify_flag(parse_int_list(*ks), *n, per);
            emit(out, as_json, flag_report_to_json(report), render_flag_report(report));
            if (!report.pass) exit_code = 1;
        });
    }

    // bbw --delta .. --gamma .. --n ..
    {
        auto* cmd = app.add_subcommand("bbw", "cohomology of one homogeneous bundle");
        cmd->fallthrough();
        auto delta = std::make_shared<std::string>();
        auto gamma = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--delta", *delta, "quotient-slot weight, comma-separated")->required();
        cmd->add_option("--gamma", *gamma, "subbundle-slot weight, comma-separated")->required();
        cmd->add_option("--n", *n, "ambient rank")->required();
        cmd->callback([&, delta, gamma, n] {
            HomogeneousBundleWeight w(parse_weight(*delta), parse_weight(*gamma), *n);
            CohomologyResult r = bbw(w);
            json j = {{"delta", weight_to_json(w.delta)},
                      {"gamma", weight_to_json(w.gamma)},
                      {"n", w.n},
                      {"result", cohomology_to_json(r)}};
            emit(out, as_json, j, render_cohomology(w, r));
        });
    }

    // hom alpha alpha' k n
    {
        auto* cmd =
            app.add_subcommand("hom", "pushforward of Hom(S^alpha R, S^alpha' R) on Gr(k,n)");
        cmd->fallthrough();
        auto a = std::make_shared<std::string>();
        auto ap = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        cmd->add_option("alpha", *a, "source partition")->required();
        cmd->add_option("alpha_prime", *ap, "target partition")->required();
        cmd->add_option("k", *k, "subbundle rank")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        cmd->callback([&, a, ap, k, n] {
            PushforwardReport report =
                pushforward_hom(parse_partition(*a), parse_partition(*ap), *k, *n);
            emit(out, as_json, pushforward_to_json(report), render_pushforward(report));
        });
    }

    // lr a b c
    {
        auto* cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^c_{a,b}");
        cmd->fallthrough();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto c = std::make_shared<std::string>();
        cmd->add_option("a", *a, "first partition")->required();
        cmd->add_option("b", *b, "second partition")->required();
        cmd->add_option("c", *c, "outer partition")->required();
        cmd->callback([&, a, b, c] {
            Partition pa = parse_partition(*a), pb = parse_partition(*b), pc = parse_partition(*c);
            long long m = lr_coefficient(pa, pb, pc);
            json j = {{"a", partition_to_json(pa)},
                      {"b", partition_to_json(pb)},
                      {"c", partition_to_json(pc)},
                      {"coefficient", m}};
            emit(out, as_json, j, std::to_string(m) + "\n");
        });
    }

    // cauchy dimV dimW m
    {
        auto* cmd = app.add_subcommand("cauchy", "exterior-power dimension identity check");
        cmd->fallthrough();
        auto dv = std::make_shared<int>(0);
        auto dw = std::make_shared<int>(0);
        auto m = std::make_shared<int>(0);
        cmd->add_option("dimV", *dv, "dimension of V")->required();
        cmd->add_option("dimW", *dw, "dimension of W")->required();
        cmd->add_option("m", *m, "exterior power degree")->required();
        cmd->callback([&, dv, dw, m] {
            CauchyCheck check = cauchy_dimension_check(*dv, *dw, *m);
            json j = {{"dimV", *dv},
                      {"dimW", *dw},
                      {"m", *m},
                      {"lhs", integer_to_json(check.lhs)},
                      {"rhs", integer_to_json(check.rhs)},
                      {"equal", check.equal}};
            std::ostringstream os;
            os << "C(" << *dv * *dw << "," << *m << ") = " << check.lhs
               << " vs Schur sum = " << check.rhs << ": "
               << (check.equal ? "equal" : "NOT EQUAL") << "\n";
            emit(out, as_json, j, os.str());
            if (!check.equal) exit_code = 1;
        });
    }

    // koszul k n
    {
        auto* cmd = app.add_subcommand("koszul", "graded terms of the diagonal Koszul resolution");
        cmd->fallthrough();
        auto k = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        cmd->add_option("k", *k, "subbundle rank")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        cmd->callback([&, k, n] {
            auto terms = koszul_terms(*k, *n);
            json j = {{"k", *k}, {"n", *n}, {"length", *k * (*n - *k)}, {"terms", json::array()}};
            for (const KoszulTerm& t : terms) j["terms"].push_back(koszul_term_to_json(t));
            emit(out, as_json, j, render_koszul(terms, *k, *n));
        });
    }

    // rank-audit k n
    {
        auto* cmd = app.add_subcommand("rank-audit", "block count versus C(n,k)");
        cmd->fallthrough();
        auto k = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        cmd->add_option("k", *k, "subbundle rank")->required();
        cmd->add_option("n", *n, "ambient rank")->required();
        cmd->callback([&, k, n] {
            RankAudit audit = k_rank_audit(*k, *n);
            json j = {{"k", *k},
                      {"n", *n},
                      {"block_count", audit.block_count},
                      {"expected", integer_to_json(audit.expected)},
                      {"equal", audit.equal}};
            std::ostringstream os;
            os << "blocks " << audit.block_count << ", expected C(" << *n << "," << *k
               << ") = " << audit.expected << ": " << (audit.equal ? "equal" : "NOT EQUAL")
               << "\n";
            emit(out, as_json, j, os.str());
            if (!audit.equal) exit_code = 1;
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace sod
