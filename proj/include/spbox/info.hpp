#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "spbox/box.hpp"

namespace spbox {

// joint[x][b] = P(x, b)
using Joint2x2 = std::array<std::array<double, 2>, 2>;

// (p, R, C, R+C) for one box parameter; total is 1 up to rounding
struct ComplementarityReport {
    double p;
    double randomness;
    double capacity;
    double total;
};

struct EnsembleAverages {
    double avg_randomness;
    double avg_capacity;
    double total;
};

// Discrete representation of a distribution over box parameters: atoms
// (p_i, w_i) with p_i in [1/2, 1], w_i >= 0, sum w_i = 1 within 1e-12.
// Continuous densities enter through caller-chosen quadrature nodes.
class EnsembleDistribution {
public:
    struct Atom {
        double p;
        double weight;
    };

    explicit EnsembleDistribution(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

// Bloch-vector length of a local mixed polarization state, in [0, 1].
class PolarizationPurity {
public:
    explicit PolarizationPurity(double mu) : mu_(mu) {
        if (!(mu >= 0.0 && mu <= 1.0))
            throw std::domain_error("PolarizationPurity: mu must lie in [0, 1]");
    }

    double value() const noexcept { return mu_; }

private:
    double mu_;
};

struct ConeCost {
    double theta_rad;
    double p;          // box parameter driving the restricted simulation
    double cost_bits;  // 1 - H(cos^2(theta/2))
};

// H(q) = -q log2 q - (1-q) log2(1-q), with 0 log 0 = 0
double binary_entropy(double q);

// local-output randomness R(p) = H(p), in bits
double randomness_R(const SpParameter& p);

// communication capacity C(p) = 1 - H(p), in bits (closed form)
double capacity_C(const SpParameter& p);

// mutual information of a 2x2 joint distribution, in bits; throws
// std::invalid_argument if entries are negative or do not sum to 1
// within 1e-9
double mutual_information(const Joint2x2& joint);

// Independent route to the capacity: builds P(b|x, y) from the exact box
// table and maximizes I(x:b) over Alice's input distribution by scalar
// search on P(x=0) to tolerance 1e-10. For y=1 this reproduces 1 - H(p);
// for y=0 it vanishes.
double channel_capacity_search(const SpParameter& p, int y);

ComplementarityReport complementarity(const SpParameter& p);

// avg_R = sum w_i H(p_i), avg_C = sum w_i (1 - H(p_i)); total is 1
EnsembleAverages ensemble_averages(const EnsembleDistribution& dist);

// Average output entropy over all polarization measurement directions of a
// mixed state with Bloch length mu:
//   R(mu) = 1 - [(1+mu)^2 ln(1+mu) - (1-mu)^2 ln(1-mu) - 2 mu] / (4 mu ln 2).
// Below mu = 1e-4 the series 1 - mu^2/(6 ln 2) is used; the closed form is
// 0/0 at mu = 0 and loses precision near it. At mu = 1 the (1-mu)^2 ln(1-mu)
// term is 0.
double leggett_average_entropy(const PolarizationPurity& mu);

// The same sphere average by direct numerical quadrature of
// int_0^pi H((1 + mu cos t)/2) (sin t)/2 dt; cross-check for the closed form.
double leggett_entropy_quadrature(const PolarizationPurity& mu);

// Classical-communication cost of simulating the singlet with both
// observables restricted to cones of half-angle theta about the local
// polarization axes, plus the box parameter p = cos^2(theta/2) realizing it.
ConeCost cone_simulation_cost(double theta_rad);

}  // namespace spbox
