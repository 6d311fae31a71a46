// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sedg/blowup.hpp"
#include "sedg/constructions.hpp"
#include "sedg/edge_list_io.hpp"
#include "sedg/exact_solver.hpp"
#include "sedg/extremal.hpp"
#include "sedg/optimization.hpp"
#include "sedg/pell.hpp"
#include "test_support.hpp"

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

void require_runtime(double seconds, double limit) {
    require(seconds < limit, "runtime " + std::to_string(seconds) + "s exceeds " +
                                 std::to_string(limit) + "s");
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. extremal family at (3,2): exact order, sums, total, SED verdict
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t p = 3, q = 2;
    const sedg::PellExtremal pe = sedg::pell_extremal({p, q});
    require(pe.graph.vertex_count() == 61, "order != 61");
    require(pe.graph.vertex_count() == 4 * p * (p + q) + 1, "order formula");
    const auto rep = sedg::verify_sed(pe.graph);
    require(rep.is_sed, "not a SED-pair");
    const std::int64_t sa = 1, sb = 2 * p * p - 2 * q * q, sc = 1 - 2 * q * q,
                       sx = 4 * p * (p + q);
    require(sb == 10 && sc == -7 && sx == 60, "symbolic sums");
    for (int v = 0; v < pe.graph.vertex_count(); ++v) {
        const std::int64_t want = pe.a_block.contains(v)   ? sa
                                  : pe.b_block.contains(v) ? sb
                                  : pe.c_block.contains(v) ? sc
                                                           : sx;
        require(rep.vertex_sums[static_cast<std::size_t>(v)] == want,
                "vertex sum mismatch at " + std::to_string(v));
    }
    require(rep.total_weight == -2 * p * p * q * q + 4 * p * p + 5 * p * q, "total formula");
    require(rep.total_weight == -6, "total != -6");
    require_runtime(elapsed_since(t0), 1.0);
}

// 2. weight/n^2 ratios decrease toward -1/(8(1+sqrt2)^2)
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sols = sedg::pell_solutions(3);
    std::vector<double> ratios;
    for (const auto& s : sols) ratios.push_back(sedg::pell_extremal_stats(s).ratio);
    require(ratios[0] > ratios[1] && ratios[1] > ratios[2], "ratios not strictly decreasing");
    const double limit = -1.0 / (8.0 * (1.0 + std::sqrt(2.0)) * (1.0 + std::sqrt(2.0)));
    require(std::abs(ratios[2] - limit) <= 3e-3,
            "(99,70) ratio " + std::to_string(ratios[2]) + " not within 3e-3 of limit");
    require_runtime(elapsed_since(t0), 5.0);
}

// 3. (y,k) minimax: floor -1/25 at (1/5, 2/5); balance curve equalizes
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = sedg::certify_floor(sedg::MinimaxSystem::yk, 1e-3);
    require(std::abs(cert.min_value + 1.0 / 25.0) <= 1e-8, "min != -1/25 within 1e-8");
    require(std::abs(cert.argmin[0] - 0.2) <= 1e-4 && std::abs(cert.argmin[1] - 0.4) <= 1e-4,
            "argmin not at (1/5, 2/5)");
    require(cert.passed, "certificate not marked passed");
    for (int i = 0; i <= 1000; ++i) {
        const double y = 0.01 + 0.98 * i / 1000.0;
        const double k = sedg::yk_balance_k(y);
        const double b1 = y * y - k * k / 2.0;
        const double b2 = -y * (1.0 - k - y) / 2.0;
        require(std::abs(b1 - b2) <= 1e-10, "balance curve off at y=" + std::to_string(y));
    }
    require_runtime(elapsed_since(t0), 10.0);
}

// 4. g-branch: low-K closed form, floor -1/54 at (1, 1/3), high-K curves clear
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i <= 1000; ++i) {
        const double a = 0.5 + 0.5 * i / 1000.0;
        const double lhs = sedg::q_low_k(sedg::WeightCurve::g, a,
                                         sedg::low_k_argmin(sedg::WeightCurve::g, a));
        require(std::abs(lhs - sedg::low_k_argmin_value(sedg::WeightCurve::g, a)) <= 1e-10,
                "closed-form identity off at alpha=" + std::to_string(a));
    }
    const auto cert = sedg::certify_floor(sedg::MinimaxSystem::g_low_k, 1e-3);
    require(std::abs(cert.min_value + 1.0 / 54.0) <= 1e-8, "low-K min != -1/54 within 1e-8");
    require(std::abs(cert.argmin[0] - 1.0) <= 1e-4 && std::abs(cert.argmin[1] - 1.0 / 3.0) <= 1e-4,
            "low-K argmin not at (1, 1/3)");
    for (int i = 0; i <= 1000; ++i) {
        const double a = 0.5 + 0.5 * i / 1000.0;
        require(sedg::q_high_k(sedg::WeightCurve::g, a, 0.5) > -1.0 / 54.0 + 1e-3,
                "q(alpha,1/2) too low at alpha=" + std::to_string(a));
        require(sedg::q_high_k(sedg::WeightCurve::g, a, 1.0) > -1.0 / 54.0 + 1e-3,
                "q(alpha,1) too low at alpha=" + std::to_string(a));
    }
    require(sedg::certify_floor(sedg::MinimaxSystem::g_high_k, 1e-3).passed,
            "high-K certificate failed");
    require_runtime(elapsed_since(t0), 30.0);
}

// 5. h-branch: every examined branch clears -1/54 by 1e-4; CSV curves sane
void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    const double floor54 = -1.0 / 54.0;
    for (int i = 1; i <= 1000; ++i) {
        const double a = 0.5 * i / 1000.0;
        const double k2 = sedg::stationary_roots_high_k(sedg::WeightCurve::h, a).k2;
        if (k2 > 0.5)
            require(sedg::q_high_k(sedg::WeightCurve::h, a, k2) - floor54 > 1e-4,
                    "K2 branch too low at alpha=" + std::to_string(a));
        require(sedg::q_high_k(sedg::WeightCurve::h, a, 0.5) - floor54 > 1e-4,
                "K=1/2 branch too low at alpha=" + std::to_string(a));
        require(sedg::q_high_k(sedg::WeightCurve::h, a, 1.0) - floor54 > 1e-4,
                "K=1 branch too low at alpha=" + std::to_string(a));
        require(sedg::low_k_argmin_value(sedg::WeightCurve::h, a) - floor54 > 1e-4,
                "K0 branch too low at alpha=" + std::to_string(a));
    }
    require(sedg::certify_floor(sedg::MinimaxSystem::h_high_k, 1e-3).passed, "h high-K failed");
    require(sedg::certify_floor(sedg::MinimaxSystem::h_low_k, 1e-3).passed, "h low-K failed");

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "sedg_acceptance_curves";
    fs::remove_all(dir);
    sedg::write_curves_csv(dir.string());
    const auto check_curve = [](const fs::path& file, double min_allowed, int* sign_changes) {
        std::ifstream in(file);
        require(in.good(), "missing curve " + file.string());
        std::string line;
        require(static_cast<bool>(std::getline(in, line)), "empty curve");
        bool first = true, prev = false;
        double prev_v = 0.0;
        int changes = 0;
        while (std::getline(in, line)) {
            const auto comma = line.rfind(',');
            const double v = std::stod(line.substr(comma + 1));
            require(std::isfinite(v), "non-finite value in " + file.string());
            require(v > min_allowed, "value " + std::to_string(v) + " too low in " + file.string());
            if (!first)  // smooth: no jumps between adjacent samples
                require(std::abs(v - prev_v) < 0.02, "jump in " + file.string());
            const bool pos = v > 0.0;
            if (!first && pos != prev) ++changes;
            prev = pos;
            prev_v = v;
            first = false;
        }
        if (sign_changes) *sign_changes = changes;
    };
    check_curve(dir / "h_high_k_root2.csv", 1e-4, nullptr);
    check_curve(dir / "h_high_k_half.csv", 1e-4, nullptr);
    check_curve(dir / "h_low_k_interior.csv", 1e-4, nullptr);
    int changes = 0;
    check_curve(dir / "h_root2_minus_half.csv", -1.0, &changes);
    require(changes == 1, "K2 - 1/2 should change sign exactly once");
    fs::remove_all(dir);
    require_runtime(elapsed_since(t0), 30.0);
}

// 6. crossover of the normalized curves
void criterion_6() {
    for (int i = 2; i <= 9; ++i) {
        const double lo = 0.05 * i;         // 0.10 .. 0.45
        const double hi = 0.05 * i + 0.45;  // 0.55 .. 0.90
        require(sedg::g_curve(lo) < sedg::h_curve(lo), "g < h fails below 1/2");
        require(sedg::g_curve(hi) > sedg::h_curve(hi), "g > h fails above 1/2");
    }
    for (int i = 1; i < 1000; ++i) {
        const double a = i / 1000.0;
        const double t = std::sqrt(1.0 - a);
        const double gap = sedg::h_curve(a) * sedg::h_curve(a) - sedg::g_curve(a) * sedg::g_curve(a);
        const double factored = t * t * (1.0 - t) * (1.0 - t) * (2.0 * t * t - 1.0);
        require(std::abs(gap - factored) <= 1e-12, "factored identity off at alpha");
        sedg::crossover_gap(a);  // self-checking variant must not throw
    }
}

// 7. degree-square maximum vs the exhaustive oracle at full desk scale
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 6; ++n)
        for (std::int64_t e = 0; e <= sedg::choose2(n); ++e)
            require(sedg::max_sum_deg_sq(n, e) == sedg::max_sum_deg_sq_brute(n, e),
                    "F mismatch at n=" + std::to_string(n) + " e=" + std::to_string(e));
    require_runtime(elapsed_since(t0), 60.0);
}

// 8. exact g(n) through n = 6, bounds in both modes, pruning soundness
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<sedg::SearchResult> results;
    for (int n = 1; n <= 6; ++n) {
        for (const auto mode : {sedg::SearchMode::all_graphs, sedg::SearchMode::restricted}) {
            sedg::SearchConfig cfg;
            cfg.n = n;
            cfg.mode = mode;
            cfg.workers = n == 6 ? 8 : 1;
            const auto res = sedg::solve_g(cfg);
            require(res.witness && sedg::verify_sed(*res.witness).is_sed, "witness invalid");
            require(sedg::verify_sed(*res.witness).total_weight == res.g_value, "witness total");
            results.push_back(res);
            if (n == 3) require(res.g_value == 0, "g(3) != 0");
            if (n <= 4)
                require(res.g_value ==
                            testsupport::naive_g(n, mode == sedg::SearchMode::restricted),
                        "pruned != unpruned at n=" + std::to_string(n));
        }
    }
    require(!sedg::check_lower_bounds(results).has_value(), "a lower bound failed");
    require_runtime(elapsed_since(t0), 600.0);
}

// 9. blow-up identities over every SED-pair of order <= 4
void criterion_9() {
    for (int n = 1; n <= 4; ++n) {
        testsupport::for_each_sed_pair(n, [&](const testsupport::RawGraph& rg) {
            const sedg::SignedGraph g = testsupport::to_graph(rg);
            const std::int64_t s = testsupport::raw_total(rg);
            for (const int k : {2, 3}) {
                const sedg::SignedGraph b = sedg::blow_up(g, k);
                const auto rep = sedg::verify_sed(b);
                for (const int nb : rep.edge_neighborhood_sums)
                    require(nb >= 0, "blown-up neighborhood sum < 0");
                const auto aug = sedg::verify_sed(sedg::apex_augment(b));
                require(aug.is_sed, "apex augmentation broke the SED condition");
                require(aug.total_weight == static_cast<std::int64_t>(k) * k * s +
                                                static_cast<std::int64_t>(n) * k,
                        "k^2 s + n k identity failed");
            }
        });
    }
}

// 10. round-trips and parallel determinism
void criterion_10() {
    std::mt19937 rng(271828);
    namespace fs = std::filesystem;
    const fs::path file = fs::temp_directory_path() / "sedg_acceptance_roundtrip.sed";
    for (int trial = 0; trial < 100; ++trial) {
        const sedg::SignedGraph g = testsupport::random_graph(rng);
        const std::string text = sedg::to_edge_list(g);
        sedg::save_edge_list(file.string(), g);
        std::ifstream in(file, std::ios::binary);
        std::ostringstream disk;
        disk << in.rdbuf();
        require(disk.str() == text, "file bytes differ from canonical form");
        require(sedg::to_edge_list(sedg::load_edge_list(file.string())) == text,
                "round-trip not bit-exact");
    }
    fs::remove(file);

    std::int64_t base = 0;
    for (const int w : {1, 2, 4, 8}) {
        sedg::SearchConfig cfg;
        cfg.n = 5;
        cfg.workers = w;
        const std::int64_t g = sedg::solve_g(cfg).g_value;
        if (w == 1)
            base = g;
        else
            require(g == base, "worker count changed g(5)");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
        {"extremal family (3,2): order 61, sums (1,10,-7,60), total -6, SED", criterion_1},
        {"weight ratios decrease toward -1/(8(1+sqrt2)^2), (99,70) within 3e-3", criterion_2},
        {"(y,k) minimax floor -1/25 at (1/5,2/5); balance curve within 1e-10", criterion_3},
        {"g-branch: closed form within 1e-10, floor -1/54 at (1,1/3), curves clear", criterion_4},
        {"h-branch: all branches clear -1/54 by 1e-4; CSV curves finite/sane", criterion_5},
        {"g/h crossover at 1/2 with factored identity within 1e-12", criterion_6},
        {"F(n,e) equals exhaustive oracle for all n <= 6", criterion_7},
        {"exact g(n) through n=6 consistent with both lower bounds", criterion_8},
        {"blow-up and apex identities over all SED-pairs of order <= 4", criterion_9},
        {"bit-exact round-trips; worker count does not change g(5)", criterion_10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            criteria[i].second();
        } catch (const std::exception& ex) {
            verdict = "FAIL";
            detail = std::string(" -- ") + ex.what();
            ++failures;
        }
        std::printf("criterion %02zu %s (%6.2fs) %s%s\n", i + 1, verdict.c_str(),
                    elapsed_since(t0), criteria[i].first, detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
