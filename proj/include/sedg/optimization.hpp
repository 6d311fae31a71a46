#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedg/extremal.hpp"

namespace sedg {

// ---------------------------------------------------------------------------
// (y,k) system: minimize max(y^2 - k^2/2, -y(1-k-y)/2) over [0,1]^2.
// The floor is -1/25, attained at (1/5, 2/5).
// ---------------------------------------------------------------------------

inline double yk_objective(double y, double k) {
    return std::max(y * y - k * k / 2.0, -y * (1.0 - k - y) / 2.0);
}

/// The k that equalizes the two branches of yk_objective for a given y.
inline double yk_balance_k(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("yk_balance_k: y outside [0,1]");
    return (-y + std::sqrt(5.0 * y * y + 4.0 * y)) / 2.0;
}

/// Value of the rescaled one-variable objective along the balance curve:
/// T(y) = y - y (y + sqrt(5y^2+4y)) / 2.  max T = T(1/5) = 2/25, and the
/// two-variable minimum is -max T / 2.
inline double yk_balanced_value(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("yk_balanced_value: y outside [0,1]");
    return y - y * (y + std::sqrt(5.0 * y * y + 4.0 * y)) / 2.0;
}

/// Closed-form derivative of yk_balanced_value; the factor (5y-1) places the
/// single interior maximum at y = 1/5.
inline double yk_balanced_value_derivative(double y) {
    if (y <= 0.0 || y > 1.0)
        throw std::domain_error("yk_balanced_value_derivative: y outside (0,1]");
    const double r = std::sqrt(5.0 * y * y + 4.0 * y);
    return -((y + r) * (5.0 * y - 1.0) * (y + 1.0)) / (r * (r + 1.0));
}

// ---------------------------------------------------------------------------
// Weighted (alpha, K) systems. The weight curve W is g_curve on [1/2, 1]
// and h_curve on [0, 1/2] (they cross at alpha = 1/2). Each branch splits
// at K = 1/2:
//   high-K (K >= 1/2):  q(a,K) = a/2 K^2 - sqrt(W)/2 sqrt(1-K) K^(3/2)
//   low-K  (K <= 1/2):  q(a,K) = a/2 K^2 - sqrt(W) (1-K) K^2
// The global floor -1/54 is attained by the g/low-K branch at (1, 1/3).
// ---------------------------------------------------------------------------

enum class WeightCurve { g, h };

inline double weight_curve(WeightCurve w, double alpha) {
    return w == WeightCurve::g ? g_curve(alpha) : h_curve(alpha);
}

inline double q_high_k(WeightCurve w, double alpha, double big_k) {
    if (big_k < 0.0 || big_k > 1.0) throw std::domain_error("q_high_k: K outside [0,1]");
    const double root_w = std::sqrt(weight_curve(w, alpha));
    return alpha / 2.0 * big_k * big_k -
           root_w / 2.0 * std::sqrt(1.0 - big_k) * std::pow(big_k, 1.5);
}

/// d q_high_k / dK in closed form (used as a finite-difference oracle).
inline double q_high_k_dk(WeightCurve w, double alpha, double big_k) {
    if (big_k <= 0.0 || big_k >= 1.0) throw std::domain_error("q_high_k_dk: K outside (0,1)");
    const double root_w = std::sqrt(weight_curve(w, alpha));
    return alpha * big_k -
           root_w / 4.0 * std::sqrt(big_k) * (3.0 - 4.0 * big_k) / std::sqrt(1.0 - big_k);
}

/// Both roots of the stationarity quadratic
/// (a^2 + W) K^2 - (3W/2 + a^2) K + 9W/16 = 0 of the high-K branch.
/// k1 always exceeds 3/4 (and is spurious: squaring introduced it).
struct StationaryRoots {
    double k1 = 0.0;
    double k2 = 0.0;
};

inline StationaryRoots stationary_roots_high_k(WeightCurve w, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw std::domain_error("stationary_roots_high_k: alpha outside (0,1]");
    const double wv = weight_curve(w, alpha);
    const double a2 = alpha * alpha;
    const double disc = 0.75 * wv * a2 + a2 * a2;
    const double den = 2.0 * (a2 + wv);
    return StationaryRoots{(1.5 * wv + a2 + std::sqrt(disc)) / den,
                           (1.5 * wv + a2 - std::sqrt(disc)) / den};
}

inline double q_low_k(WeightCurve w, double alpha, double big_k) {
    if (big_k < 0.0 || big_k > 1.0) throw std::domain_error("q_low_k: K outside [0,1]");
    const double root_w = std::sqrt(weight_curve(w, alpha));
    return alpha / 2.0 * big_k * big_k - root_w * (1.0 - big_k) * big_k * big_k;
}

inline double q_low_k_dk(WeightCurve w, double alpha, double big_k) {
    const double root_w = std::sqrt(weight_curve(w, alpha));
    return alpha * big_k - 2.0 * root_w * big_k + 3.0 * root_w * big_k * big_k;
}

/// Interior stationary point of the low-K branch:
/// K0 = 2/3 - alpha / (3 sqrt(W)). Undefined where W vanishes.
inline double low_k_argmin(WeightCurve w, double alpha) {
    const double root_w = std::sqrt(weight_curve(w, alpha));
    if (root_w <= 0.0) throw std::domain_error("low_k_argmin: weight curve vanishes");
    return 2.0 / 3.0 - alpha / (3.0 * root_w);
}

/// Closed form of the low-K branch value at its stationary point:
/// q(alpha, K0) = sqrt(W)/54 * (alpha/sqrt(W) - 2)^3.
inline double low_k_argmin_value(WeightCurve w, double alpha) {
    const double root_w = std::sqrt(weight_curve(w, alpha));
    if (root_w <= 0.0) throw std::domain_error("low_k_argmin_value: weight curve vanishes");
    const double ratio = alpha / root_w - 2.0;
    return root_w / 54.0 * ratio * ratio * ratio;
}

// ---------------------------------------------------------------------------
// Grid + refinement certification
// ---------------------------------------------------------------------------

enum class MinimaxSystem { yk, g_high_k, g_low_k, h_high_k, h_low_k };

inline const char* to_string(MinimaxSystem s) {
    switch (s) {
        case MinimaxSystem::yk: return "yk";
        case MinimaxSystem::g_high_k: return "g_high_k";
        case MinimaxSystem::g_low_k: return "g_low_k";
        case MinimaxSystem::h_high_k: return "h_high_k";
        case MinimaxSystem::h_low_k: return "h_low_k";
    }
    return "?";
}

struct MinimaxCertificate {
    MinimaxSystem system = MinimaxSystem::yk;
    double grid_step = 0.0;
    double refined_tolerance = 0.0;
    double min_value = 0.0;
    std::vector<double> argmin;  // (y,k) or (alpha,K)
    double floor = 0.0;          // -1/25 or -1/54
    bool passed = false;
};

namespace detail {

struct Rect {
    double x0, x1, y0, y1;
};

struct Found {
    double x = 0.0, y = 0.0, value = 0.0;
};

// Deterministic lattice minimum: row-major scan, strict improvement, so ties
// resolve to the lexicographically smallest point.
template <class F>
Found lattice_min(const F& f, const Rect& r, int nx, int ny) {
    Found best;
    bool first = true;
    for (int i = 0; i <= nx; ++i) {
        const double x = r.x0 + (r.x1 - r.x0) * i / nx;
        for (int j = 0; j <= ny; ++j) {
            const double y = r.y0 + (r.y1 - r.y0) * j / ny;
            const double v = f(x, y);
            if (first || v < best.value) {
                best = Found{x, y, v};
                first = false;
            }
        }
    }
    return best;
}

template <class F>
Found grid_then_refine(const F& f, const Rect& r, double step, double target) {
    const int nx = std::max(1, static_cast<int>(std::ceil((r.x1 - r.x0) / step)));
    const int ny = std::max(1, static_cast<int>(std::ceil((r.y1 - r.y0) / step)));
    Found best = lattice_min(f, r, nx, ny);
    double hx = (r.x1 - r.x0) / nx, hy = (r.y1 - r.y0) / ny;
    while (hx > target || hy > target) {
        Rect box{std::max(r.x0, best.x - hx), std::min(r.x1, best.x + hx),
                 std::max(r.y0, best.y - hy), std::min(r.y1, best.y + hy)};
        const Found cand = lattice_min(f, box, 32, 32);
        if (cand.value < best.value) best = cand;
        hx *= 0.25;
        hy *= 0.25;
    }
    return best;
}

}  // namespace detail

constexpr double kFloorYk = -1.0 / 25.0;
constexpr double kFloorWeighted = -1.0 / 54.0;

/// Certifies the floor of one system by a coarse lattice scan followed by
/// local refinement down to a 1e-9 box. Pass rules:
///   yk        min == -1/25 within 1e-8, argmin == (1/5, 2/5) within 1e-4
///   g_low_k   min == -1/54 within 1e-8, argmin == (1, 1/3)   within 1e-4
///   g_high_k  min >= -1/54 + 1e-3 (strictly above the floor)
///   h_high_k, h_low_k   min >= -1/54 + 1e-4
inline MinimaxCertificate certify_floor(MinimaxSystem system, double grid_step = 1e-3) {
    if (grid_step <= 0.0) throw std::invalid_argument("certify_floor: grid step must be > 0");
    MinimaxCertificate cert;
    cert.system = system;
    cert.grid_step = grid_step;
    cert.refined_tolerance = 1e-9;

    detail::Rect rect{};
    std::function<double(double, double)> f;
    switch (system) {
        case MinimaxSystem::yk:
            rect = {0.0, 1.0, 0.0, 1.0};
            f = [](double y, double k) { return yk_objective(y, k); };
            break;
        case MinimaxSystem::g_high_k:
            rect = {0.5, 1.0, 0.5, 1.0};
            f = [](double a, double k) { return q_high_k(WeightCurve::g, a, k); };
            break;
        case MinimaxSystem::g_low_k:
            rect = {0.5, 1.0, 0.0, 0.5};
            f = [](double a, double k) { return q_low_k(WeightCurve::g, a, k); };
            break;
        case MinimaxSystem::h_high_k:
            rect = {0.0, 0.5, 0.5, 1.0};
            f = [](double a, double k) { return q_high_k(WeightCurve::h, a, k); };
            break;
        case MinimaxSystem::h_low_k:
            rect = {0.0, 0.5, 0.0, 0.5};
            f = [](double a, double k) { return q_low_k(WeightCurve::h, a, k); };
            break;
    }

    const detail::Found best = detail::grid_then_refine(f, rect, grid_step, cert.refined_tolerance);
    cert.min_value = best.value;
    cert.argmin = {best.x, best.y};

    switch (system) {
        case MinimaxSystem::yk:
            cert.floor = kFloorYk;
            cert.passed = std::abs(cert.min_value - kFloorYk) <= 1e-8 &&
                          std::abs(best.x - 0.2) <= 1e-4 && std::abs(best.y - 0.4) <= 1e-4;
            break;
        case MinimaxSystem::g_low_k:
            cert.floor = kFloorWeighted;
            cert.passed = std::abs(cert.min_value - kFloorWeighted) <= 1e-8 &&
                          std::abs(best.x - 1.0) <= 1e-4 && std::abs(best.y - 1.0 / 3.0) <= 1e-4;
            break;
        case MinimaxSystem::g_high_k:
            cert.floor = kFloorWeighted;
            cert.passed = cert.min_value >= kFloorWeighted + 1e-3;
            break;
        case MinimaxSystem::h_high_k:
        case MinimaxSystem::h_low_k:
            cert.floor = kFloorWeighted;
            cert.passed = cert.min_value >= kFloorWeighted + 1e-4;
            break;
    }
    return cert;
}

inline std::vector<MinimaxCertificate> certify_all_floors(double grid_step = 1e-3) {
    return {certify_floor(MinimaxSystem::yk, grid_step),
            certify_floor(MinimaxSystem::g_high_k, grid_step),
            certify_floor(MinimaxSystem::g_low_k, grid_step),
            certify_floor(MinimaxSystem::h_high_k, grid_step),
            certify_floor(MinimaxSystem::h_low_k, grid_step)};
}

// ---------------------------------------------------------------------------
// CSV sample curves (one file per curve, columns "alpha,value" or
// "y,k,value", 6 decimals, LF endings). Values of the q-curves are shifted
// by +1/54 so positivity is the statement being plotted.
// ---------------------------------------------------------------------------

namespace detail {

inline void write_csv(const std::filesystem::path& file, const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << header << '\n';
    char buf[64];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.6f", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace detail

/// Writes the seven sample curves into `dir` (created if needed):
///   yk_balance.csv            y, balance k, objective value along the curve
///   g_high_k_half.csv         q_g(a,1/2)+1/54       on [1/2,1]
///   g_low_k_interior.csv      q_g(a,K0)+1/54        on [1/2,1]
///   h_high_k_root2.csv        q_h(a,K2)+1/54        where K2 > 1/2
///   h_root2_minus_half.csv    K2(a)-1/2             on (0,1/2]
///   h_high_k_half.csv         q_h(a,1/2)+1/54       on [0,1/2]
///   h_low_k_interior.csv      q_h(a,K0)+1/54        on (0,1/2]
inline void write_curves_csv(const std::string& dir, int samples = 500) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    fs::create_directories(root);
    const double shift = 1.0 / 54.0;

    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= samples; ++i) {
        const double y = static_cast<double>(i) / samples;
        const double k = yk_balance_k(y);
        rows.push_back({y, k, yk_objective(y, k)});
    }
    detail::write_csv(root / "yk_balance.csv", "y,k,value", rows);

    rows.clear();
    for (int i = 0; i <= samples; ++i) {
        const double a = 0.5 + 0.5 * i / samples;
        rows.push_back({a, q_high_k(WeightCurve::g, a, 0.5) + shift});
    }
    detail::write_csv(root / "g_high_k_half.csv", "alpha,value", rows);

    rows.clear();
    for (int i = 0; i <= samples; ++i) {
        const double a = 0.5 + 0.5 * i / samples;
        rows.push_back({a, low_k_argmin_value(WeightCurve::g, a) + shift});
    }
    detail::write_csv(root / "g_low_k_interior.csv", "alpha,value", rows);

    rows.clear();
    for (int i = 1; i <= samples; ++i) {
        const double a = 0.5 * i / samples;
        const double k2 = stationary_roots_high_k(WeightCurve::h, a).k2;
        if (k2 > 0.5) rows.push_back({a, q_high_k(WeightCurve::h, a, k2) + shift});
    }
    detail::write_csv(root / "h_high_k_root2.csv", "alpha,value", rows);

    rows.clear();
    for (int i = 1; i <= samples; ++i) {
        const double a = 0.5 * i / samples;
        rows.push_back({a, stationary_roots_high_k(WeightCurve::h, a).k2 - 0.5});
    }
    detail::write_csv(root / "h_root2_minus_half.csv", "alpha,value", rows);

    rows.clear();
    for (int i = 0; i <= samples; ++i) {
        const double a = 0.5 * i / samples;
        rows.push_back({a, q_high_k(WeightCurve::h, a, 0.5) + shift});
    }
    detail::write_csv(root / "h_high_k_half.csv", "alpha,value", rows);

    rows.clear();
    for (int i = 1; i <= samples; ++i) {
        const double a = 0.5 * i / samples;
        rows.push_back({a, low_k_argmin_value(WeightCurve::h, a) + shift});
    }
    detail::write_csv(root / "h_low_k_interior.csv", "alpha,value", rows);
}

}  // namespace sedg
