// sedg: construct, verify and search signed edge-dominated graphs.
//
// Exit codes: 0 success, 1 domain error (invalid parameters, guard refusal),
// 2 I/O or file-parse error. Results go to stdout as stable key=value lines;
// diagnostics go to stderr.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sedg/blowup.hpp"
#include "sedg/constructions.hpp"
#include "sedg/edge_list_io.hpp"
#include "sedg/exact_solver.hpp"
#include "sedg/extremal.hpp"
#include "sedg/optimization.hpp"
#include "sedg/pell.hpp"
#include "sedg/signed_graph.hpp"

namespace {

struct GlobalOpts {
    std::string out;
    std::string csv;
    bool quiet = false;
    int workers = 0;  // 0: subcommand default
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

void print_report_tables(const sedg::SignedGraph& g, const sedg::SedReport& rep, bool quiet) {
    if (quiet) return;
    std::printf("%8s %8s\n", "vertex", "s_v");
    for (int v = 0; v < g.vertex_count(); ++v)
        std::printf("%8d %8d\n", v, rep.vertex_sums[static_cast<std::size_t>(v)]);
    std::printf("%8s %6s %6s %6s %10s\n", "edge", "u", "v", "w", "nbhd_sum");
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const sedg::Edge& e = g.edges()[i];
        std::printf("%8zu %6d %6d %6d %10d\n", i, e.u, e.v, e.w, rep.edge_neighborhood_sums[i]);
    }
}

void emit_graph(const sedg::SignedGraph& g, const GlobalOpts& go, bool report, bool quiet) {
    if (report) {
        const sedg::SedReport rep = sedg::verify_sed(g);
        std::printf("n=%d m=%zu s=%" PRId64 " is_sed=%s\n", g.vertex_count(), g.edge_count(),
                    rep.total_weight, bool_str(rep.is_sed));
        print_report_tables(g, rep, quiet);
    }
    if (!go.out.empty())
        sedg::save_edge_list(go.out, g);
    else if (!report)
        sedg::write_edge_list(std::cout, g);
}

sedg::MinimaxSystem system_from_token(const std::string& tok) {
    if (tok == "a") return sedg::MinimaxSystem::yk;
    if (tok == "b1") return sedg::MinimaxSystem::g_high_k;
    if (tok == "b2") return sedg::MinimaxSystem::g_low_k;
    if (tok == "c1") return sedg::MinimaxSystem::h_high_k;
    if (tok == "c2") return sedg::MinimaxSystem::h_low_k;
    throw std::invalid_argument("unknown system token: " + tok);
}

void print_certificate(const sedg::MinimaxCertificate& c) {
    std::printf("system=%s min=%.10f argmin=%.6f,%.6f floor=%.10f passed=%s grid=%g\n",
                sedg::to_string(c.system), c.min_value, c.argmin[0], c.argmin[1], c.floor,
                bool_str(c.passed), c.grid_step);
}

int run(int argc, char** argv) {
    CLI::App app{"signed edge domination toolkit"};
    app.require_subcommand(1);
    GlobalOpts go;
    app.add_option("--out", go.out, "write resulting graph to FILE (edge-list format)");
    app.add_option("--csv", go.csv, "directory for CSV curve output");
    app.add_flag("--quiet", go.quiet, "suppress everything but the final result line");
    app.add_option("--workers", go.workers, "worker thread count");
    app.fallthrough();

    // construct
    auto* construct = app.add_subcommand("construct", "generate one of the graph families");
    construct->require_subcommand(1);
    construct->fallthrough();

    int pell_index = 1;
    bool rep_t2 = false;
    auto* c_t2 = construct->add_subcommand("theorem2", "Pell-parameterized extremal SED-pair");
    c_t2->add_option("--pell-index", pell_index, "1-based Pell solution index")->required();
    c_t2->add_flag("--report", rep_t2, "print the SED report");

    sedg::CirculantBipartiteSpec cb;
    int cb_weight = 1;
    bool rep_cb = false;
    auto* c_cb = construct->add_subcommand("circulant-bipartite", "banded circulant bipartite");
    c_cb->add_option("--a", cb.x_blocks, "X-side block count")->required();
    c_cb->add_option("--b", cb.y_blocks, "Y-side block count")->required();
    c_cb->add_option("--k", cb.band, "band width")->required();
    c_cb->add_option("--l", cb.block_size, "block size")->required();
    c_cb->add_option("--weight", cb_weight, "edge weight, +1 or -1");
    c_cb->add_flag("--report", rep_cb, "print the SED report");

    sedg::CirculantSpec cu;
    int cu_weight = 1;
    bool rep_cu = false;
    auto* c_cu = construct->add_subcommand("circulant", "banded circulant");
    c_cu->add_option("--a", cu.block_size, "block size")->required();
    c_cu->add_option("--k", cu.band, "band width")->required();
    c_cu->add_option("--l", cu.half_blocks, "half block count")->required();
    c_cu->add_option("--weight", cu_weight, "edge weight, +1 or -1");
    c_cu->add_flag("--report", rep_cu, "print the SED report");

    int kn = 1, kn_weight = 1;
    bool rep_kn = false;
    auto* c_kn = construct->add_subcommand("complete", "complete graph");
    c_kn->add_option("--n", kn, "vertex count")->required();
    c_kn->add_option("--weight", kn_weight, "edge weight, +1 or -1");
    c_kn->add_flag("--report", rep_kn, "print the SED report");

    // verify
    std::string verify_in;
    bool rep_verify = false;
    auto* verify = app.add_subcommand("verify", "check the SED condition of a graph file");
    verify->add_option("--in", verify_in, "input edge-list file")->required();
    verify->add_flag("--report", rep_verify, "print per-vertex and per-edge tables");

    // blowup
    std::string blow_in;
    int blow_k = 1;
    bool blow_apex = false;
    auto* blow = app.add_subcommand("blowup", "k-blow-up of a graph file");
    blow->add_option("--in", blow_in, "input edge-list file")->required();
    blow->add_option("--k", blow_k, "multiplicity")->required();
    blow->add_flag("--apex", blow_apex, "afterwards add an apex joined to all by +1");

    // extremal
    int ex_n = 0;
    std::int64_t ex_e = -1;
    bool ex_all = false, ex_oracle = false;
    auto* extremal = app.add_subcommand("extremal", "quasi-complete / quasi-star degree sums");
    extremal->add_option("--n", ex_n, "vertex count")->required();
    auto* opt_e = extremal->add_option("--e", ex_e, "edge count");
    extremal->add_flag("--all-e", ex_all, "whole row 0..C(n,2)")->excludes(opt_e);
    extremal->add_flag("--oracle", ex_oracle, "also run the exhaustive oracle (n <= 7)");

    // optimize
    std::string opt_system = "all";
    double opt_grid = 1e-3;
    auto* optimize = app.add_subcommand("optimize", "certify the minimax floors");
    optimize->add_option("--system", opt_system, "a, b1, b2, c1, c2 or all")
        ->check(CLI::IsMember({"a", "b1", "b2", "c1", "c2", "all"}));
    optimize->add_option("--grid", opt_grid, "coarse grid step (default 1e-3)");

    // gn
    int gn_n = 1;
    std::string gn_mode = "all";
    std::string gn_witness;
    auto* gn = app.add_subcommand("gn", "exact g(n) by exhaustive search");
    gn->add_option("--n", gn_n, "order")->required();
    gn->add_option("--mode", gn_mode, "all or restricted")
        ->check(CLI::IsMember({"all", "restricted"}));
    gn->add_option("--witness", gn_witness, "write a minimizing graph to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad flags are domain errors
    }

    if (c_t2->parsed()) {
        const sedg::PellExtremal pe = sedg::pell_extremal(sedg::pell_solution(pell_index));
        emit_graph(pe.graph, go, rep_t2, go.quiet);
    } else if (c_cb->parsed()) {
        emit_graph(sedg::circulant_bipartite(cb, cb_weight), go, rep_cb, go.quiet);
    } else if (c_cu->parsed()) {
        emit_graph(sedg::circulant_unipartite(cu, cu_weight), go, rep_cu, go.quiet);
    } else if (c_kn->parsed()) {
        emit_graph(sedg::complete_graph(kn, kn_weight), go, rep_kn, go.quiet);
    } else if (verify->parsed()) {
        const sedg::SignedGraph g = sedg::load_edge_list(verify_in);
        const sedg::SedReport rep = sedg::verify_sed(g);
        std::printf("is_sed=%s total=%" PRId64 "\n", bool_str(rep.is_sed), rep.total_weight);
        if (rep_verify) print_report_tables(g, rep, go.quiet);
    } else if (blow->parsed()) {
        sedg::SignedGraph g = sedg::blow_up(sedg::load_edge_list(blow_in), blow_k);
        if (blow_apex) g = sedg::apex_augment(g);
        if (!go.out.empty())
            sedg::save_edge_list(go.out, g);
        else
            sedg::write_edge_list(std::cout, g);
    } else if (extremal->parsed()) {
        const std::int64_t max_e = sedg::choose2(ex_n);
        std::int64_t lo = ex_e, hi = ex_e;
        if (ex_all) {
            lo = 0;
            hi = max_e;
        } else if (ex_e < 0) {
            throw std::invalid_argument("extremal: give --e or --all-e");
        }
        if (!go.quiet)
            std::printf("%10s %12s %12s %12s%s\n", "e", "qc", "qs", "F",
                        ex_oracle ? "       oracle" : "");
        for (std::int64_t e = lo; e <= hi; ++e) {
            const std::int64_t qc = sedg::sum_deg_sq(sedg::quasi_complete(ex_n, e));
            const std::int64_t qs = sedg::sum_deg_sq(sedg::quasi_star(ex_n, e));
            std::printf("%10" PRId64 " %12" PRId64 " %12" PRId64 " %12" PRId64, e, qc, qs,
                        std::max(qc, qs));
            if (ex_oracle)
                std::printf(" %12" PRId64, sedg::max_sum_deg_sq_brute(ex_n, e));
            std::printf("\n");
        }
    } else if (optimize->parsed()) {
        std::vector<sedg::MinimaxCertificate> certs;
        if (opt_system == "all")
            certs = sedg::certify_all_floors(opt_grid);
        else
            certs.push_back(sedg::certify_floor(system_from_token(opt_system), opt_grid));
        bool all_passed = true;
        for (const auto& c : certs) {
            print_certificate(c);
            all_passed = all_passed && c.passed;
        }
        if (!go.csv.empty()) {
            sedg::write_curves_csv(go.csv);
            if (!go.quiet) std::fprintf(stderr, "curves written to %s\n", go.csv.c_str());
        }
        if (!all_passed) throw std::domain_error("a floor certificate failed");
    } else if (gn->parsed()) {
        sedg::SearchConfig cfg;
        cfg.n = gn_n;
        cfg.mode = gn_mode == "all" ? sedg::SearchMode::all_graphs : sedg::SearchMode::restricted;
        if (go.workers > 0) cfg.workers = go.workers;
        const sedg::SearchResult res = sedg::solve_g(cfg);
        std::printf("n=%d g=%" PRId64 " nodes=%" PRIu64 " mode=%s\n", res.n, res.g_value,
                    res.nodes_explored, gn_mode.c_str());
        if (!gn_witness.empty() && res.witness) sedg::save_edge_list(gn_witness, *res.witness);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sedg::ParseError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    } catch (const std::ios_base::failure& ex) {
        std::fprintf(stderr, "i/o error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
}
