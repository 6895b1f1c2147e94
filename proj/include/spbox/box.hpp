#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "spbox/rng.hpp"

namespace spbox {

// Weight p of the a=0 branch of the S^p family. Only [1/2, 1] is admitted;
// the complementarity analysis is confined to that range.
class SpParameter {
public:
    explicit SpParameter(double p) : p_(p) {
        if (!(p >= 0.5 && p <= 1.0))
            throw std::domain_error("SpParameter: p must lie in [1/2, 1]");
    }

    double value() const noexcept { return p_; }

private:
    double p_;
};

// Exact conditional distribution P(a,b|x,y) of a bipartite box with binary
// inputs and outputs. Stores all 16 entries so that signaling and CHSH
// diagnostics and convex mixtures apply to arbitrary boxes, not only S^p.
struct BoxTable {
    std::array<double, 16> probs{};

    static constexpr std::size_t index(int x, int y, int a, int b) noexcept {
        return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
    }

    double at(int x, int y, int a, int b) const { return probs[index(x, y, a, b)]; }
    double& at(int x, int y, int a, int b) { return probs[index(x, y, a, b)]; }

    double row_sum(int x, int y) const {
        return at(x, y, 0, 0) + at(x, y, 0, 1) + at(x, y, 1, 0) + at(x, y, 1, 1);
    }

    // throws std::invalid_argument unless every entry is in [0,1] and each
    // (x,y) row sums to 1 within `tol`
    void validate(double tol = 1e-12) const;
};

struct BoxOutputs {
    int a;
    int b;
};

// Coefficients of the convex split of S^p into the deterministic 1-cbit box
// and the PR box: weight_cbit = 2p-1, weight_pr = 2(1-p).
struct Decomposition {
    double weight_cbit;
    double weight_pr;
};

// Largest change of one party's output marginal induced by the other
// party's input choice; (0,0) means the box is non-signaling.
struct SignalingDeviation {
    double alice_to_bob;
    double bob_to_alice;
};

// P(a,b|x,y) of the S^p box: outputs satisfy a XOR b = x AND y with
// certainty, and a = 0 with probability p independent of the inputs.
double sp_box_probability(const SpParameter& p, int x, int y, int a, int b);

// full 16-entry table of the S^p box
BoxTable sp_box_table(const SpParameter& p);

// the p = 1/2 member: a XOR b = xy with uniform marginals (non-signaling)
BoxTable pr_box_table();

// the p = 1 member: a = 0 always and b = xy, so input x is delivered to Bob
// whenever y = 1
BoxTable one_cbit_box_table();

Decomposition decompose(const SpParameter& p);

// entrywise convex mixture w1*t1 + w2*t2
BoxTable mix_tables(double w1, const BoxTable& t1, double w2, const BoxTable& t2);

SignalingDeviation signaling_deviation(const BoxTable& table);

// E(0,0) + E(0,1) + E(1,0) - E(1,1) with E(x,y) = P(a=b|x,y) - P(a!=b|x,y);
// the algebraic maximum 4 is reached by every S^p
double chsh_value(const BoxTable& table);

namespace detail {
inline int require_bit(int v, const char* name) {
    if (v != 0 && v != 1) throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    return v;
}
}  // namespace detail

// One draw from S^p. Consumes exactly one uniform variate, drawn before any
// branching, so the per-sample randomness budget is fixed.
inline BoxOutputs sample_sp_box(const SpParameter& p, int x, int y, Rng& rng) {
    detail::require_bit(x, "x");
    detail::require_bit(y, "y");
    const double u = rng.uniform();
    const int a = u < p.value() ? 0 : 1;
    return {a, a ^ (x & y)};
}

}  // namespace spbox
