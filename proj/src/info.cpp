#include "spbox/info.hpp"

#include <cmath>
#include <functional>
#include <utility>

namespace spbox {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double xlog2x(double q) { return q > 0.0 ? q * std::log2(q) : 0.0; }

}  // namespace

double binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("binary_entropy: q must lie in [0, 1]");
    return -xlog2x(q) - xlog2x(1.0 - q);
}

double randomness_R(const SpParameter& p) { return binary_entropy(p.value()); }

double capacity_C(const SpParameter& p) { return 1.0 - binary_entropy(p.value()); }

double mutual_information(const Joint2x2& joint) {
    double sum = 0.0;
    for (const auto& row : joint) {
        for (double v : row) {
            if (!(v >= 0.0)) throw std::invalid_argument("mutual_information: negative entry");
            sum += v;
        }
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("mutual_information: joint distribution does not sum to 1");

    const std::array<double, 2> px{joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
    const std::array<double, 2> pb{joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
    double info = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double v = joint[i][j];
            if (v > 0.0) info += v * std::log2(v / (px[i] * pb[j]));
        }
    }
    return info;
}

namespace {

// joint P(x, b) induced by feeding input distribution (q, 1-q) into the
// x -> b channel of the box at fixed Bob input y
Joint2x2 induced_joint(const BoxTable& table, int y, double q) {
    Joint2x2 joint{};
    const std::array<double, 2> px{q, 1.0 - q};
    for (int x = 0; x < 2; ++x) {
        for (int b = 0; b < 2; ++b) {
            const double channel = table.at(x, y, 0, b) + table.at(x, y, 1, b);
            joint[x][b] = px[x] * channel;
        }
    }
    return joint;
}

// golden-section maximization of a concave function on [lo, hi]
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double x_tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

double channel_capacity_search(const SpParameter& p, int y) {
    detail::require_bit(y, "y");
    const BoxTable table = sp_box_table(p);
    auto info_of = [&](double q) { return mutual_information(induced_joint(table, y, q)); };
    return golden_section_max(info_of, 0.0, 1.0, 1e-10);
}

ComplementarityReport complementarity(const SpParameter& p) {
    const double r = randomness_R(p);
    const double c = capacity_C(p);
    return {p.value(), r, c, r + c};
}

EnsembleDistribution::EnsembleDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::domain_error("EnsembleDistribution: no atoms");
    double total = 0.0;
    for (const Atom& atom : atoms_) {
        if (!(atom.p >= 0.5 && atom.p <= 1.0))
            throw std::domain_error("EnsembleDistribution: atom p outside [1/2, 1]");
        if (!(atom.weight >= 0.0))
            throw std::domain_error("EnsembleDistribution: negative weight");
        total += atom.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error("EnsembleDistribution: weights do not sum to 1");
}

EnsembleAverages ensemble_averages(const EnsembleDistribution& dist) {
    double avg_r = 0.0;
    double avg_c = 0.0;
    for (const auto& atom : dist.atoms()) {
        const double h = binary_entropy(atom.p);
        avg_r += atom.weight * h;
        avg_c += atom.weight * (1.0 - h);
    }
    return {avg_r, avg_c, avg_r + avg_c};
}

double leggett_average_entropy(const PolarizationPurity& mu) {
    const double m = mu.value();
    if (m < 1e-4) return 1.0 - m * m / (6.0 * kLn2);
    const double plus = (1.0 + m) * (1.0 + m) * std::log1p(m);
    const double minus = m == 1.0 ? 0.0 : (1.0 - m) * (1.0 - m) * std::log1p(-m);
    return 1.0 - (plus - minus - 2.0 * m) / (4.0 * m * kLn2);
}

namespace {

// adaptive Simpson with the usual Richardson acceptance test
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double leggett_entropy_quadrature(const PolarizationPurity& mu) {
    const double m = mu.value();
    auto integrand = [m](double theta) {
        return binary_entropy(0.5 * (1.0 + m * std::cos(theta))) * 0.5 * std::sin(theta);
    };
    return integrate(integrand, 0.0, M_PI, 1e-12);
}

ConeCost cone_simulation_cost(double theta_rad) {
    if (!(theta_rad >= 0.0 && theta_rad <= M_PI))
        throw std::domain_error("cone_simulation_cost: theta must lie in [0, pi]");
    const double c = std::cos(0.5 * theta_rad);
    const double p = c * c;
    return {theta_rad, p, 1.0 - binary_entropy(p)};
}

}  // namespace spbox
