#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spbox/box.hpp"
#include "spbox/geometry.hpp"
#include "spbox/protocol.hpp"

namespace spbox {

// Monte Carlo estimate of E[v_a XOR v_b | A, B] against the analytic target.
struct CorrelationEstimate {
    double mean;
    double std_error;  // sqrt(mean (1-mean) / n), the Bernoulli plug-in error
    std::int64_t n_rounds;
    double target;

    // (mean - target) / std_error; 0 when the estimator is degenerate and
    // exactly on target, +/-inf when degenerate and off target
    double z_score() const;
};

// analytic probability of v_a XOR v_b = 1 for the singlet: (1 + A.B)/2
double singlet_target(const UnitVector& a_setting, const UnitVector& b_setting);

// Runs n independent protocol rounds and reports the fraction with
// v_a XOR v_b = 1. Round i draws from the substream keyed by (seed, i) and
// results are merged as integer counts, so the outcome is bit-identical for
// any worker count.
CorrelationEstimate estimate_correlation(const SpParameter& p, const UnitVector& a_setting,
                                         const UnitVector& b_setting, std::int64_t n_rounds,
                                         std::uint64_t seed, int n_threads = 1,
                                         const RoundOptions& opts = {});

enum class SweepGeometry {
    fixed_plane,   // A = +z, B in the x-z plane at the cell angle
    random_plane,  // per cell: random A, random plane through A at the cell angle
};

struct SweepCell {
    double p;
    double angle_rad;
    CorrelationEstimate estimate;
    double z;
};

struct SweepResult {
    std::vector<SweepCell> rows;

    // all |z| <= z_limit, and at most soft_budget of the cells with
    // |z| > z_soft (multiple-testing allowance)
    bool statistically_acceptable(double z_limit = 4.0, double z_soft = 3.0,
                                  double soft_budget = 0.02) const;
};

// One correlation estimate per (p, angle) cell. Cell c uses the master seed
// derived from (seed, c), so the grid layout alone fixes every substream.
SweepResult sweep(const std::vector<double>& p_values, const std::vector<double>& angles_rad,
                  std::int64_t n_per_cell, std::uint64_t seed, int n_threads = 1,
                  SweepGeometry geometry = SweepGeometry::fixed_plane,
                  const RoundOptions& opts = {});

// CSV with fixed columns: p,angle_rad,n,mean,std_error,target,z
void write_sweep_csv(std::ostream& os, const SweepResult& result);
std::string sweep_csv(const SweepResult& result);

// JSON document {"schema": 1, "rows": [...]} with the same fields per row
std::string sweep_json(const SweepResult& result);

// Replays the first n_rounds transcripts of the given cell (identical
// substreams) and appends them as JSON lines; for auditing failed cells.
void dump_cell_transcripts(std::ostream& os, const SpParameter& p, double angle_rad,
                           std::int64_t n_rounds, std::uint64_t seed, std::uint64_t cell_index,
                           SweepGeometry geometry = SweepGeometry::fixed_plane,
                           const RoundOptions& opts = {});

// Frequency of v_a = sgn(A.lambda1) over box randomness at one fixed hidden
// pair; equals p regardless of the pair or the settings.
struct ConditionalBiasRow {
    double p_hat;
    double deviation;    // p_hat - p
    double entropy_hat;  // H(p_hat), empirical output entropy
};

struct ConditionalBiasReport {
    double p;
    std::int64_t n_rounds_per_lambda;
    std::vector<ConditionalBiasRow> rows;

    double max_abs_deviation() const;
    // every row within n_sigma * sqrt(p(1-p)/n); degenerate p = 1 requires
    // exact agreement
    bool within_sigma(double n_sigma = 4.0) const;
};

ConditionalBiasReport conditional_bias_test(const SpParameter& p, int n_lambda,
                                            std::int64_t n_rounds_per_lambda, std::uint64_t seed);

}  // namespace spbox
