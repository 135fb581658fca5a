// Command-line front end: analyzers, solvers, generators and verification
// over the hypergraph / psi / graph text formats.
//
// Exit codes: 0 success, 1 no-solution / not-applicable / invalid answer,
// 2 usage or input error, 3 internal assertion failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsvc/hsvc.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hsvc::invalid_input("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw hsvc::invalid_input("cannot open file '" + path + "' for writing");
    out << content;
}

std::string one_based(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i] + 1);
    }
    return out;
}

std::vector<int> parse_solution_list(const std::string& text)
{
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty())
            continue;
        try {
            const int v = std::stoi(tok);
            if (v < 1)
                throw hsvc::invalid_input("solution elements are 1-based, got " + tok);
            out.push_back(v - 1);
        } catch (const std::invalid_argument&) {
            throw hsvc::invalid_input("cannot parse solution element '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw hsvc::invalid_input("solution element '" + tok + "' out of range");
        }
    }
    return out;
}

int cmd_vcdim(const std::string& path, std::optional<int> cap, bool with_dual)
{
    const hsvc::SetSystem f = hsvc::parse_hypergraph(read_file(path));
    const hsvc::VcReport report = hsvc::vc_dimension(f, cap);
    std::cout << "vc: " << report.vc_dim << "\n";
    std::cout << "witness: " << one_based(report.witness) << "\n";
    if (report.capped)
        std::cout << "vc_capped: true\n";
    if (with_dual) {
        const hsvc::SetSystem d = hsvc::dual(f);
        const hsvc::VcReport dual_report = hsvc::vc_dimension(d, cap);
        std::cout << "dual_vc: " << dual_report.vc_dim << "\n";
        if (dual_report.capped)
            std::cout << "dual_vc_capped: true\n";
    }
    return 0;
}

int cmd_classify(const std::string& path, int alpha)
{
    const hsvc::SetSystem f = hsvc::parse_hypergraph(read_file(path));
    const hsvc::AlphaBetaProfile profile = hsvc::alpha_beta_profile(f, alpha);
    std::cout << "alpha: " << profile.alpha << "\n";
    std::cout << "beta: " << profile.beta << "\n";
    std::cout << "witness: " << one_based(profile.witness) << "\n";
    return 0;
}

int cmd_solve(const std::string& path, const std::string& algo, bool no_guard,
              const std::string& trace_path)
{
    const hsvc::SetSystem f = hsvc::parse_hypergraph(read_file(path));
    hsvc::SolveResult result;
    hsvc::PreprocessOptions options;
    options.guard = !no_guard;
    if (algo == "auto")
        result = hsvc::solve_auto(f);
    else if (algo == "vc1")
        result = hsvc::solve_vc1(f, !no_guard);
    else if (algo == "dualvc1")
        result = hsvc::solve_dual_vc1(f, !no_guard);
    else if (algo == "sys35")
        result = hsvc::solve_35(f, options);
    else if (algo == "brute")
        result = hsvc::brute_force_min_hitting_set(f);
    else if (algo == "greedy")
        result = hsvc::greedy_hitting_set(f);
    else
        throw hsvc::invalid_input("unknown algorithm '" + algo + "'");

    std::cout << "status: " << hsvc::to_string(result.status) << "\n";
    if (result.solution) {
        std::cout << "size: " << result.solution->size() << "\n";
        std::cout << "elements: " << one_based(result.solution->elements) << "\n";
    }
    std::cout << "algorithm: " << result.algorithm << "\n";
    std::cout << "exact: " << (result.exact ? "true" : "false") << "\n";
    if (!result.failure.empty())
        std::cout << "reason: " << result.failure << "\n";
    if (!trace_path.empty())
        write_file(trace_path, hsvc::format_trace(result.trace));
    return result.status == hsvc::SolveStatus::Solved ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& solution_text)
{
    const hsvc::SetSystem f = hsvc::parse_hypergraph(read_file(path));
    std::vector<int> solution = parse_solution_list(solution_text);
    for (int e : solution)
        if (e >= f.universe_size())
            throw hsvc::invalid_input("solution element " + std::to_string(e + 1) + " out of range");
    if (hsvc::verify_hitting_set(f, solution)) {
        std::cout << "status: valid\n";
        std::cout << "size: " << solution.size() << "\n";
        return 0;
    }
    std::cout << "status: invalid\n";
    for (int s = 0; s < f.set_count(); ++s) {
        bool hit = false;
        for (int e : solution)
            if (f.member(s, e))
                hit = true;
        if (!hit) {
            std::cout << "missed_set: " << s + 1 << "\n";
            break;
        }
    }
    return 1;
}

int cmd_gen_psi(const std::string& psi_path, const std::string& out_path, const std::string& layout_path)
{
    const hsvc::PsiInstance input = hsvc::parse_psi(read_file(psi_path));
    const hsvc::PsiInstance normalized = hsvc::normalize_psi(input);
    const hsvc::PsiReduction reduction = hsvc::psi_to_hitting_set(normalized);
    write_file(out_path, hsvc::serialize_hypergraph(reduction.system));
    if (!layout_path.empty())
        write_file(layout_path, hsvc::serialize_layout(reduction.layout));
    std::cout << "t: " << normalized.pattern.vertex_count() << "\n";
    std::cout << "k: " << normalized.pattern.edge_count() << "\n";
    std::cout << "n: " << reduction.system.universe_size() << "\n";
    std::cout << "m: " << reduction.system.set_count() << "\n";
    std::cout << "budget: " << reduction.layout.budget << "\n";
    std::cout << "paper_budget: " << reduction.layout.paper_budget << "\n";
    return 0;
}

int cmd_gen_vc36(const std::string& graph_path, const std::string& out_path)
{
    const hsvc::SimpleGraph g = hsvc::parse_graph(read_file(graph_path));
    const auto [split, offset] = hsvc::split_edges_triangle_free(g);
    const hsvc::SetSystem system = hsvc::vertex_cover_system(split);
    write_file(out_path, hsvc::serialize_hypergraph(system));
    std::cout << "offset: " << offset << "\n";
    std::cout << "n: " << system.universe_size() << "\n";
    std::cout << "m: " << system.set_count() << "\n";
    return 0;
}

int cmd_extract(const std::string& path, const std::string& layout_path, const std::string& solution_text)
{
    const hsvc::SetSystem f = hsvc::parse_hypergraph(read_file(path));
    const hsvc::ReductionLayout layout = hsvc::parse_layout(read_file(layout_path));
    std::vector<int> solution = parse_solution_list(solution_text);
    hsvc::HittingSet hs{hsvc::canonical_elements(std::move(solution), f.universe_size(), "solution")};
    const std::vector<int> assignment = hsvc::extract_embedding({f, layout}, hs);
    std::cout << "assignment: " << one_based(assignment) << "\n";
    return 0;
}

int cmd_matching(const std::string& graph_path, bool with_cover)
{
    const hsvc::SimpleGraph g = hsvc::parse_graph(read_file(graph_path));
    const hsvc::Matching matching = hsvc::max_matching(g);
    std::cout << "matching_size: " << matching.size() << "\n";
    std::cout << "matching: " << one_based(matching.edge_ids) << "\n";
    if (with_cover) {
        try {
            const std::vector<int> cover = hsvc::min_edge_cover(g);
            std::cout << "edge_cover_size: " << cover.size() << "\n";
            std::cout << "edge_cover: " << one_based(cover) << "\n";
        } catch (const hsvc::no_cover_error& e) {
            std::cout << "status: no_cover\n";
            std::cout << "vertex: " << e.vertex + 1 << "\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Hitting Set solvers and analyzers for set systems of low VC-dimension"};
    app.require_subcommand(1);

    std::string file, out_path, layout_path, solution_text, trace_path, graph_path;
    std::optional<int> cap;
    bool with_dual = false, no_guard = false, with_cover = false;
    int alpha = 3;
    std::string algo = "auto";

    auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of a hypergraph file");
    vcdim->add_option("file", file)->required();
    vcdim->add_option("--cap", cap, "cap the shattering search");
    vcdim->add_flag("--dual", with_dual, "also report the dual VC-dimension");

    auto* classify = app.add_subcommand("classify", "(alpha,beta) projection profile");
    classify->add_option("file", file)->required();
    classify->add_option("--alpha", alpha, "subset size bound")->required();

    auto* solve = app.add_subcommand("solve", "minimum hitting set");
    solve->add_option("file", file)->required();
    solve->add_option("--algo", algo, "auto|vc1|dualvc1|sys35|brute|greedy");
    solve->add_flag("--no-guard", no_guard, "skip the applicability guard");
    solve->add_option("--trace", trace_path, "write the preprocessing trace to a file");

    auto* verify = app.add_subcommand("verify", "check a hitting set");
    verify->add_option("file", file)->required();
    verify->add_option("--solution", solution_text, "comma-separated 1-based elements")->required();

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gen_psi = gen->add_subcommand("psi", "hitting set instance from a psi file");
    gen_psi->add_option("file", file)->required();
    gen_psi->add_option("-o,--output", out_path)->required();
    gen_psi->add_option("--layout", layout_path, "write the layout sidecar");
    auto* gen_vc36 = gen->add_subcommand("vc36", "(3,6)-system from a graph via edge splitting");
    gen_vc36->add_option("file", graph_path)->required();
    gen_vc36->add_option("-o,--output", out_path)->required();

    auto* extract = app.add_subcommand("extract", "read an embedding out of a reduction solution");
    extract->add_option("file", file)->required();
    extract->add_option("--layout", layout_path)->required();
    extract->add_option("--solution", solution_text)->required();

    auto* matching = app.add_subcommand("matching", "maximum matching of an edge-list file");
    matching->add_option("file", graph_path)->required();
    matching->add_flag("--cover", with_cover, "also report a minimum edge cover");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vcdim->parsed())
            return cmd_vcdim(file, cap, with_dual);
        if (classify->parsed())
            return cmd_classify(file, alpha);
        if (solve->parsed())
            return cmd_solve(file, algo, no_guard, trace_path);
        if (verify->parsed())
            return cmd_verify(file, solution_text);
        if (gen->parsed() && gen_psi->parsed())
            return cmd_gen_psi(file, out_path, layout_path);
        if (gen->parsed() && gen_vc36->parsed())
            return cmd_gen_vc36(graph_path, out_path);
        if (extract->parsed())
            return cmd_extract(file, layout_path, solution_text);
        if (matching->parsed())
            return cmd_matching(graph_path, with_cover);
    } catch (const hsvc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const hsvc::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hsvc::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
