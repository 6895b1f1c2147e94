#pragma once

#include <cmath>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spbox/box.hpp"
#include "spbox/geometry.hpp"
#include "spbox/rng.hpp"

namespace spbox {

// Sign bit with the closed-at-zero convention: 1 for z >= 0, 0 for z < 0.
// The convention also covers the measure-zero case of a vanishing dot
// product with a degenerate lambda1 + lambda2, so every round is total.
inline int sgn_bit(double z) {
    if (!std::isfinite(z)) throw std::domain_error("sgn_bit: non-finite argument");
    return z >= 0.0 ? 1 : 0;
}

// The shared randomness of one round: two independent uniform directions.
// The derived sums lambda1 +/- lambda2 are recomputed where needed and are
// deliberately left unnormalized; only the sign of their dot products enters.
struct HiddenVariablePair {
    UnitVector lambda1;
    UnitVector lambda2;
};

// Consumes exactly four variates (two per vector).
inline HiddenVariablePair sample_hidden_pair(Rng& rng) {
    UnitVector l1 = sample_unit_vector(rng);
    UnitVector l2 = sample_unit_vector(rng);
    return {l1, l2};
}

// Alice's box input: sgn(A.lambda1) XOR sgn(A.lambda2)
inline int alice_input(const UnitVector& a_setting, const HiddenVariablePair& hidden) {
    return sgn_bit(a_setting.dot(hidden.lambda1)) ^ sgn_bit(a_setting.dot(hidden.lambda2));
}

// Alice's announced outcome: a XOR sgn(A.lambda1)
inline int alice_output(int a, const UnitVector& a_setting, const HiddenVariablePair& hidden) {
    detail::require_bit(a, "a");
    return a ^ sgn_bit(a_setting.dot(hidden.lambda1));
}

// Bob's box input: sgn(B.(lambda1+lambda2)) XOR sgn(B.(lambda1-lambda2))
inline int bob_input(const UnitVector& b_setting, const HiddenVariablePair& hidden) {
    const Vec3 lambda_plus = hidden.lambda1.vec() + hidden.lambda2.vec();
    const Vec3 lambda_minus = hidden.lambda1.vec() - hidden.lambda2.vec();
    return sgn_bit(b_setting.dot(lambda_plus)) ^ sgn_bit(b_setting.dot(lambda_minus));
}

// Bob's announced outcome: b XOR sgn(B.(lambda1+lambda2)) XOR 1
inline int bob_output(int b, const UnitVector& b_setting, const HiddenVariablePair& hidden) {
    detail::require_bit(b, "b");
    const Vec3 lambda_plus = hidden.lambda1.vec() + hidden.lambda2.vec();
    return b ^ sgn_bit(b_setting.dot(lambda_plus)) ^ 1;
}

// Everything one simulation round produces. Two identities hold for every
// transcript: a XOR b = x AND y, and
// v_a XOR v_b = xy XOR sgn(A.lambda1) XOR sgn(B.(lambda1+lambda2)) XOR 1.
struct RoundTranscript {
    HiddenVariablePair hidden;
    UnitVector a_setting;
    UnitVector b_setting;
    int x;
    int y;
    int a;
    int b;
    int v_a;
    int v_b;
};

// Debug fault injection: drops the trailing bit flip from Bob's announced
// outcome, which breaks the singlet correlation in a detectable way.
struct RoundOptions {
    bool drop_bob_inversion = false;
};

// Executes one full round: samples the hidden pair, encodes the box inputs,
// draws from S^p, decodes the announced outcomes. Consumes exactly five
// variates (four for the hidden pair, one for the box draw). Settings are
// caller-supplied; the engine never chooses them.
RoundTranscript run_round(const SpParameter& p, const UnitVector& a_setting,
                          const UnitVector& b_setting, Rng& rng, const RoundOptions& opts = {});

// Serializes a transcript as one JSON-lines record with fields
// (lambda1, lambda2, A, B, x, y, a, b, vA, vB).
std::string transcript_jsonl(const RoundTranscript& t);
void append_transcript_jsonl(std::ostream& os, const RoundTranscript& t);

}  // namespace spbox
