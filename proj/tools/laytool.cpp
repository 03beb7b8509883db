#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "laygraph/audit.hpp"
#include "laygraph/certify.hpp"
#include "laygraph/cnf.hpp"
#include "laygraph/io.hpp"
#include "laygraph/search.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;
constexpr int kExitIo = 66;

using namespace laygraph;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

PageSpec make_spec(int stacks, int queues) {
    if (stacks < 0 || queues < 0 || stacks + queues < 1)
        throw CLI::ValidationError("--stacks/--queues", "need s, q >= 0 and s + q >= 1");
    return {stacks, queues};
}

std::string one_line(const LinearLayout& layout) {
    std::ostringstream ss;
    ss << "order";
    for (int v : layout.order()) ss << " " << v;
    ss << " |";
    for (const auto& [e, p] : layout.pages())
        ss << " (" << e.u << "," << e.v << ")=" << p.name();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"mixed stack/queue linear layouts: generate, solve, verify, audit, certify"};
    app.require_subcommand(1);

    // gen gkl
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->require_subcommand(1);
    auto* gen_gkl = gen->add_subcommand("gkl", "build G(k,l) and emit .lg with generations");
    int k = 1, ell = 1;
    std::uint64_t max_vertices = 1'000'000;
    std::string out_path;
    gen_gkl->add_option("--k", k, "depth")->required();
    gen_gkl->add_option("--ell", ell, "attachments per edge")->required();
    gen_gkl->add_option("--max-vertices", max_vertices, "refuse larger builds");
    gen_gkl->add_option("-o,--output", out_path, "output file (default stdout)");

    // size gkl
    auto* size = app.add_subcommand("size", "closed-form sizes");
    size->require_subcommand(1);
    auto* size_gkl = size->add_subcommand("gkl", "print V= and E= of G(k,l) without building");
    size_gkl->add_option("--k", k, "depth")->required();
    size_gkl->add_option("--ell", ell, "attachments per edge")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide whether a layout exists");
    std::string graph_path, cert_path, model_path;
    int stacks = 0, queues = 0, threads = 1;
    std::uint64_t budget = 50'000'000;
    bool deterministic = false;
    solve_cmd->add_option("file", graph_path, ".lg input")->required();
    solve_cmd->add_option("--stacks", stacks, "stack pages")->required();
    solve_cmd->add_option("--queues", queues, "queue pages")->required();
    solve_cmd->add_option("--budget", budget, "node budget");
    solve_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--deterministic", deterministic, "reproducible output (always on)");
    solve_cmd->add_option("-o,--output", out_path, "write certificate (.ll)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a layout certificate");
    verify_cmd->add_option("file", graph_path, ".lg input")->required();
    verify_cmd->add_option("cert", cert_path, ".ll certificate")->required();
    verify_cmd->add_option("--stacks", stacks, "stack pages")->required();
    verify_cmd->add_option("--queues", queues, "queue pages")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustively enumerate valid layouts");
    bool all = false, count_only = false;
    int cap = 7;
    oracle_cmd->add_option("file", graph_path, ".lg input")->required();
    oracle_cmd->add_option("--stacks", stacks, "stack pages")->required();
    oracle_cmd->add_option("--queues", queues, "queue pages")->required();
    oracle_cmd->add_flag("--all", all, "do not canonicalize modulo order reversal");
    oracle_cmd->add_flag("--count-only", count_only, "print only the count");
    oracle_cmd->add_option("--cap", cap, "vertex cap");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "audit lemma statements on a certificate");
    std::string lemmas;
    audit_cmd->add_option("file", graph_path, ".lg input with generation labels")->required();
    audit_cmd->add_option("cert", cert_path, ".ll certificate")->required();
    audit_cmd->add_option("--lemmas", lemmas, "comma-separated subset of 1,2,3,4,cor1,5")
        ->required();

    // gadget
    auto* gadget_cmd = app.add_subcommand("gadget", "certify a proof-step scaffold");
    std::string case_name;
    int gadget_ell = -1;
    bool verbose = false;
    gadget_cmd
        ->add_option("--case", case_name,
                     "smiley, p1, p1a, p2, l4c1..l4c4, t1c1..t1c6")
        ->required();
    gadget_cmd->add_option("--ell", gadget_ell, "free attachments (smiley/p1/p1a/p2 only)");
    gadget_cmd->add_flag("--verbose", verbose, "print every placement outcome");

    // export-cnf
    auto* export_cmd = app.add_subcommand("export-cnf", "emit a DIMACS encoding");
    export_cmd->add_option("file", graph_path, ".lg input")->required();
    export_cmd->add_option("--stacks", stacks, "stack pages")->required();
    export_cmd->add_option("--queues", queues, "queue pages")->required();
    export_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    // import-model
    auto* import_cmd = app.add_subcommand("import-model", "decode a SAT model into a .ll");
    import_cmd->add_option("file", graph_path, ".lg input")->required();
    import_cmd->add_option("model", model_path, "solver model file")->required();
    import_cmd->add_option("--stacks", stacks, "stack pages")->required();
    import_cmd->add_option("--queues", queues, "queue pages")->required();
    import_cmd->add_option("-o,--output", out_path, "write certificate (.ll)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen_gkl->parsed()) {
        TwoTree tree = build_gkl({k, ell}, max_vertices);
        if (out_path.empty()) {
            write_lg(std::cout, tree);
        } else {
            auto out = open_out(out_path);
            write_lg(out, tree);
        }
        return 0;
    }

    if (size_gkl->parsed()) {
        GklSize s = gkl_size({k, ell});
        std::cout << "V=" << s.vertices << " E=" << s.edges << "\n";
        return 0;
    }

    if (solve_cmd->parsed()) {
        Graph graph = read_lg_file(graph_path).graph;
        SolveResult r = solve(graph, make_spec(stacks, queues), budget, true);
        std::cerr << "nodes " << r.stats.nodes << " seconds " << r.stats.seconds << "\n";
        switch (r.status) {
            case SolveStatus::Sat:
                std::cout << "status Sat\n";
                if (!out_path.empty()) write_ll_file(out_path, *r.layout);
                return 0;
            case SolveStatus::Unsat: std::cout << "status Unsat\n"; return 1;
            case SolveStatus::BudgetExceeded: std::cout << "status BudgetExceeded\n"; return 2;
        }
    }

    if (verify_cmd->parsed()) {
        Graph graph = read_lg_file(graph_path).graph;
        LinearLayout layout = read_ll_file(cert_path);
        ValidationReport report;
        try {
            report = validate(graph, layout, make_spec(stacks, queues));
        } catch (const LayoutStructureError& e) {
            std::cout << "invalid: " << e.what() << "\n";
            return 1;
        }
        if (report.ok()) {
            std::cout << "valid\n";
            return 0;
        }
        for (const auto& v : report.violations)
            std::cout << "violation (" << v.e.u << "," << v.e.v << ") (" << v.f.u << ","
                      << v.f.v << ") " << v.page.name() << "\n";
        return 1;
    }

    if (oracle_cmd->parsed()) {
        Graph graph = read_lg_file(graph_path).graph;
        std::uint64_t count = 0;
        enumerate_all(
            graph, make_spec(stacks, queues),
            [&](const LinearLayout& l) {
                ++count;
                if (!count_only) std::cout << one_line(l) << "\n";
            },
            !all, cap);
        std::cout << "count " << count << "\n";
        return count > 0 ? 0 : 1;
    }

    if (audit_cmd->parsed()) {
        LabeledGraph lg = read_lg_file(graph_path);
        TwoTree tree = lg.to_two_tree();
        LinearLayout layout = read_ll_file(cert_path);
        bool all_passed = true;
        std::stringstream ids(lemmas);
        std::string id;
        bool any = false;
        while (std::getline(ids, id, ',')) {
            if (id.empty()) continue;
            any = true;
            AuditReport report = audit_by_id(id, tree, layout);
            write_report(std::cout, report);
            all_passed = all_passed && report.passed();
        }
        if (!any) throw CLI::ValidationError("--lemmas", "empty list");
        return all_passed ? 0 : 1;
    }

    if (gadget_cmd->parsed()) {
        StepReport report;
        if (auto id = parse_case_id(case_name)) {
            if (gadget_ell != -1)
                throw CLI::ValidationError("--ell", "not applicable to claim cases");
            report = certify_claim(*id);
        } else if (case_name == "smiley") {
            report = certify_step(smiley_scaffold(gadget_ell == -1 ? 3 : gadget_ell));
        } else if (case_name == "p1" || case_name == "p1a" || case_name == "p2") {
            PatternName name = case_name == "p1"    ? PatternName::P1
                               : case_name == "p1a" ? PatternName::P1a
                                                    : PatternName::P2;
            report = certify_step(pattern_scaffold(name, gadget_ell == -1 ? 5 : gadget_ell));
        } else {
            throw CLI::ValidationError("--case", "unknown case '" + case_name + "'");
        }
        write_step_report(std::cout, report, !verbose);
        return report.certified() ? 0 : 1;
    }

    if (export_cmd->parsed()) {
        Graph graph = read_lg_file(graph_path).graph;
        Cnf cnf = encode(graph, make_spec(stacks, queues));
        if (out_path.empty()) {
            write_dimacs(std::cout, cnf);
        } else {
            auto out = open_out(out_path);
            write_dimacs(out, cnf);
        }
        return 0;
    }

    if (import_cmd->parsed()) {
        Graph graph = read_lg_file(graph_path).graph;
        PageSpec spec = make_spec(stacks, queues);
        Cnf cnf = encode(graph, spec);
        std::ifstream in(model_path);
        if (!in) throw std::runtime_error("cannot open '" + model_path + "' for reading");
        auto model = read_model(in, cnf.variable_count);
        if (!model) {
            std::cout << "unsat model\n";
            return 1;
        }
        LinearLayout layout = decode(graph, spec, cnf, *model);
        if (out_path.empty())
            write_ll(std::cout, layout);
        else
            write_ll_file(out_path, layout);
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const laygraph::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.find("cannot open") != std::string::npos ? kExitIo : kExitUsage;
    }
}
