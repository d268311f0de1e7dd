#include "grsq/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "grsq/bitwidth.hpp"
#include "grsq/codec.hpp"
#include "grsq/sampling.hpp"

namespace grsq {

std::string_view to_string(AlphaChoice a) {
    switch (a) {
        case AlphaChoice::MinBitwidth: return "min";
        case AlphaChoice::Integers1ToN: return "1..n";
        case AlphaChoice::Custom: return "custom";
    }
    throw std::logic_error("unreachable");
}

AlphaChoice alpha_choice_from_string(std::string_view s) {
    if (s == "min") return AlphaChoice::MinBitwidth;
    if (s == "1..n") return AlphaChoice::Integers1ToN;
    if (s == "custom") return AlphaChoice::Custom;
    throw std::invalid_argument("unknown alpha choice: '" + std::string(s) + "'");
}

std::vector<Rat> pick_alphas(AlphaChoice choice, std::size_t n, std::span<const Rat> custom) {
    switch (choice) {
        case AlphaChoice::MinBitwidth: return enumerate_min_locators(n);
        case AlphaChoice::Integers1ToN: {
            std::vector<Rat> a(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = Rat(static_cast<long>(i) + 1);
            return a;
        }
        case AlphaChoice::Custom: return {custom.begin(), custom.end()};
    }
    throw std::logic_error("unreachable");
}

std::size_t ExperimentConfig::k_for(std::size_t n) const {
    std::size_t k = fixed_k ? *fixed_k : std::max<std::size_t>(1, n / 3);
    if (k >= n) throw std::invalid_argument("need k < n");
    return k;
}

std::size_t ExperimentConfig::tau_for(std::size_t n) const {
    std::size_t radius = (n - k_for(n)) / 2;
    if (tau_max) return radius;
    if (tau > radius) throw std::invalid_argument("tau exceeds the decoding radius");
    return tau;
}

std::vector<StatRow> run_stats(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("need trials >= 1");
    std::vector<StatRow> rows;
    rows.reserve(cfg.trials * cfg.n_values.size());
    for (std::size_t n : cfg.n_values) {
        const std::size_t k = cfg.k_for(n);
        const std::size_t tau = cfg.tau_for(n);
        GrsCode code = make_code(n, k, pick_alphas(cfg.alpha_choice, n, cfg.custom_alphas), cfg.preset);
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            Rng rng(derive_stream(cfg.seed, n, trial));
            std::vector<Rat> u(k);
            for (Rat& x : u) x = sample_rational(cfg.info_bits, rng);
            std::vector<Rat> c = encode(code, cfg.gen, u);

            StatRow row;
            row.n = n;
            row.k = k;
            row.trial = trial;
            row.lambda_u = bitwidth(u);
            row.lambda_c = bitwidth(c);
            row.alpha_choice = cfg.alpha_choice;
            row.preset = cfg.preset;
            row.gen = cfg.gen;
            if (tau >= 1) {
                ErrorPattern pattern = sample_error_pattern(n, tau, cfg.error_bits, rng);
                std::vector<Rat> r = corrupt(c, pattern);
                auto t0 = std::chrono::steady_clock::now();
                try {
                    DecodeOutcome out = decode(code, r);
                    row.decode_ok = out.codeword == c && out.error == pattern.to_vector(n);
                    row.lambda_s = out.report.measured.at("s");
                } catch (const DecodeFailure&) {
                    row.decode_ok = false;
                }
                auto t1 = std::chrono::steady_clock::now();
                row.time_us = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<StatSummary> summarize(std::span<const StatRow> rows) {
    std::vector<StatSummary> out;
    for (const StatRow& row : rows) {
        if (out.empty() || out.back().n != row.n || out.back().k != row.k) {
            out.push_back(StatSummary{row.n, row.k, 0, 0, 0, 0, 0, 0});
        }
        StatSummary& s = out.back();
        s.trials += 1;
        s.sum_lambda_u += row.lambda_u;
        s.sum_lambda_c += row.lambda_c;
        s.sum_lambda_s += row.lambda_s;
        s.ok_count += row.decode_ok ? 1 : 0;
        s.sum_time_us += row.time_us;
    }
    return out;
}

std::string format_mean(std::uint64_t sum, std::uint64_t count) {
    if (count == 0) throw std::invalid_argument("mean of empty set");
    std::uint64_t whole = sum / count;
    std::uint64_t rem = sum % count;
    std::uint64_t frac = rem * 1000000ULL / count;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%llu.%06llu", static_cast<unsigned long long>(whole),
                  static_cast<unsigned long long>(frac));
    return buf;
}

void write_stats_csv(std::ostream& os, std::span<const StatRow> rows, bool with_summary) {
    os << "n,k,trial,lambda_u,lambda_c,lambda_s,alpha_choice,preset,genkind,decode_ok,time_us\n";
    for (const StatRow& r : rows) {
        os << r.n << ',' << r.k << ',' << r.trial << ',' << r.lambda_u << ',' << r.lambda_c << ','
           << r.lambda_s << ',' << to_string(r.alpha_choice) << ',' << to_string(r.preset) << ','
           << to_string(r.gen) << ',' << (r.decode_ok ? 1 : 0) << ',' << r.time_us << "\n";
    }
    if (!with_summary || rows.empty()) return;
    for (const StatSummary& s : summarize(rows)) {
        os << s.n << ',' << s.k << ",mean," << format_mean(s.sum_lambda_u, s.trials) << ','
           << format_mean(s.sum_lambda_c, s.trials) << ',' << format_mean(s.sum_lambda_s, s.trials)
           << ',' << to_string(rows.front().alpha_choice) << ',' << to_string(rows.front().preset)
           << ',' << to_string(rows.front().gen) << ',' << format_mean(s.ok_count, s.trials) << ','
           << format_mean(s.sum_time_us, s.trials) << "\n";
    }
}

std::vector<TrendPoint> run_runtime_trend(const ExperimentConfig& cfg) {
    std::vector<TrendPoint> points;
    for (std::size_t n : cfg.n_values) {
        const std::size_t k = cfg.k_for(n);
        const std::size_t tau = cfg.tau_max || cfg.tau == 0 ? (n - k) / 2 : cfg.tau_for(n);
        GrsCode code = make_code(n, k, pick_alphas(cfg.alpha_choice, n, cfg.custom_alphas), cfg.preset);
        TrendPoint point{n, k, tau, cfg.trials, 0, true};
        std::uint64_t total_us = 0;
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            Rng rng(derive_stream(cfg.seed, n, trial));
            std::vector<Rat> u(k);
            for (Rat& x : u) x = sample_rational(cfg.info_bits, rng);
            std::vector<Rat> c = encode(code, cfg.gen, u);
            ErrorPattern pattern = sample_error_pattern(n, tau, cfg.error_bits, rng);
            std::vector<Rat> r = corrupt(c, pattern);
            auto t0 = std::chrono::steady_clock::now();
            try {
                DecodeOutcome out = decode(code, r);
                point.all_ok = point.all_ok && out.codeword == c;
            } catch (const DecodeFailure&) {
                point.all_ok = false;
            }
            auto t1 = std::chrono::steady_clock::now();
            total_us += static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
        }
        point.mean_time_us = total_us / cfg.trials;
        points.push_back(point);
    }
    return points;
}

bool trend_within_slope(std::span<const TrendPoint> points, double slope_limit,
                        double noise_factor) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        double ratio = static_cast<double>(points[i].n) / static_cast<double>(points[i - 1].n);
        double allowed = noise_factor * std::pow(ratio, slope_limit) *
                         static_cast<double>(std::max<std::uint64_t>(points[i - 1].mean_time_us, 1));
        if (static_cast<double>(points[i].mean_time_us) > allowed) return false;
    }
    return true;
}

void write_trend_csv(std::ostream& os, std::span<const TrendPoint> points) {
    os << "n,k,tau,trials,mean_time_us,all_ok\n";
    for (const TrendPoint& p : points)
        os << p.n << ',' << p.k << ',' << p.tau << ',' << p.trials << ',' << p.mean_time_us << ','
           << (p.all_ok ? 1 : 0) << "\n";
}

}  // namespace grsq
