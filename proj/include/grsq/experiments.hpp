#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grsq/code.hpp"

namespace grsq {

enum class AlphaChoice { MinBitwidth, Integers1ToN, Custom };

std::string_view to_string(AlphaChoice a);
AlphaChoice alpha_choice_from_string(std::string_view s);

/// Locators for a given choice and length.
std::vector<Rat> pick_alphas(AlphaChoice choice, std::size_t n, std::span<const Rat> custom);

struct ExperimentConfig {
    std::size_t trials = 100;
    std::vector<std::size_t> n_values;
    std::optional<std::size_t> fixed_k;  // default rule: k = max(1, n/3)
    std::size_t info_bits = 100;
    std::size_t error_bits = 32;
    std::size_t tau = 0;    // 0 = encode only
    bool tau_max = false;   // override: tau = floor((n-k)/2)
    AlphaChoice alpha_choice = AlphaChoice::MinBitwidth;
    std::vector<Rat> custom_alphas;
    Preset preset = Preset::VPrimeOne;
    GeneratorKind gen = GeneratorKind::Vandermonde;
    std::uint64_t seed = 0;

    std::size_t k_for(std::size_t n) const;
    std::size_t tau_for(std::size_t n) const;
};

struct StatRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t trial = 0;
    std::size_t lambda_u = 0;
    std::size_t lambda_c = 0;
    std::size_t lambda_s = 0;
    AlphaChoice alpha_choice = AlphaChoice::MinBitwidth;
    Preset preset = Preset::VPrimeOne;
    GeneratorKind gen = GeneratorKind::Vandermonde;
    bool decode_ok = true;
    std::uint64_t time_us = 0;
};

/// Per-n means over the trial rows, kept exact as (sum, count) pairs.
struct StatSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t trials = 0;
    std::uint64_t sum_lambda_u = 0;
    std::uint64_t sum_lambda_c = 0;
    std::uint64_t sum_lambda_s = 0;
    std::uint64_t ok_count = 0;
    std::uint64_t sum_time_us = 0;
};

/// One trial per (n, trial index): sample u, encode, and when tau >= 1 also
/// corrupt and decode, re-verifying exact recovery. The RNG stream is
/// derived from (seed, n, trial), so runs are reproducible row by row.
std::vector<StatRow> run_stats(const ExperimentConfig& cfg);

std::vector<StatSummary> summarize(std::span<const StatRow> rows);

/// Exact mean sum/count rendered with six fixed decimals (floor rounding).
std::string format_mean(std::uint64_t sum, std::uint64_t count);

/// Header: n,k,trial,lambda_u,lambda_c,lambda_s,alpha_choice,preset,genkind,
/// decode_ok,time_us. Summary rows carry "mean" in the trial column.
void write_stats_csv(std::ostream& os, std::span<const StatRow> rows, bool with_summary = true);

struct TrendPoint {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t tau = 0;
    std::size_t trials = 0;
    std::uint64_t mean_time_us = 0;
    bool all_ok = true;
};

/// Times decode over the configured n values at fixed error bit width and
/// maximal radius unless the config fixes tau.
std::vector<TrendPoint> run_runtime_trend(const ExperimentConfig& cfg);

/// True when every doubling step satisfies t2 <= noise_factor * ratio^slope
/// * t1 with ratio = n2/n1 (log-log slope check).
bool trend_within_slope(std::span<const TrendPoint> points, double slope_limit,
                        double noise_factor = 2.0);

void write_trend_csv(std::ostream& os, std::span<const TrendPoint> points);

}  // namespace grsq
