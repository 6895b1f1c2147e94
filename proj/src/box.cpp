#include "spbox/box.hpp"

#include <algorithm>
#include <cmath>

namespace spbox {

void BoxTable::validate(double tol) const {
    for (double v : probs) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("BoxTable: entry outside [0, 1]");
    }
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (std::abs(row_sum(x, y) - 1.0) > tol)
                throw std::invalid_argument("BoxTable: row (x,y) does not sum to 1");
        }
    }
}

double sp_box_probability(const SpParameter& p, int x, int y, int a, int b) {
    detail::require_bit(x, "x");
    detail::require_bit(y, "y");
    detail::require_bit(a, "a");
    detail::require_bit(b, "b");
    const int delta_ab = a ^ b ^ 1;
    const int support = (x & y) ^ delta_ab;  // 1 iff a XOR b = xy
    const double amplitude = a == 0 ? p.value() : 1.0 - p.value();
    return support * amplitude;
}

BoxTable sp_box_table(const SpParameter& p) {
    BoxTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) t.at(x, y, a, b) = sp_box_probability(p, x, y, a, b);
    return t;
}

BoxTable pr_box_table() { return sp_box_table(SpParameter(0.5)); }

BoxTable one_cbit_box_table() { return sp_box_table(SpParameter(1.0)); }

Decomposition decompose(const SpParameter& p) {
    return {2.0 * p.value() - 1.0, 2.0 * (1.0 - p.value())};
}

BoxTable mix_tables(double w1, const BoxTable& t1, double w2, const BoxTable& t2) {
    BoxTable out;
    for (std::size_t i = 0; i < out.probs.size(); ++i)
        out.probs[i] = w1 * t1.probs[i] + w2 * t2.probs[i];
    return out;
}

namespace {

// marginal P(b|x,y) = sum_a P(a,b|x,y)
double bob_marginal(const BoxTable& t, int b, int x, int y) {
    return t.at(x, y, 0, b) + t.at(x, y, 1, b);
}

double alice_marginal(const BoxTable& t, int a, int x, int y) {
    return t.at(x, y, a, 0) + t.at(x, y, a, 1);
}

}  // namespace

SignalingDeviation signaling_deviation(const BoxTable& table) {
    table.validate();
    double alice_to_bob = 0.0;
    double bob_to_alice = 0.0;
    for (int out = 0; out < 2; ++out) {
        for (int fixed = 0; fixed < 2; ++fixed) {
            alice_to_bob = std::max(
                alice_to_bob,
                std::abs(bob_marginal(table, out, 0, fixed) - bob_marginal(table, out, 1, fixed)));
            bob_to_alice = std::max(
                bob_to_alice, std::abs(alice_marginal(table, out, fixed, 0) -
                                       alice_marginal(table, out, fixed, 1)));
        }
    }
    return {alice_to_bob, bob_to_alice};
}

double chsh_value(const BoxTable& table) {
    table.validate();
    auto correlator = [&](int x, int y) {
        return table.at(x, y, 0, 0) + table.at(x, y, 1, 1) - table.at(x, y, 0, 1) -
               table.at(x, y, 1, 0);
    };
    return correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
}

}  // namespace spbox
