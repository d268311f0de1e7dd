#include "grsq/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace grsq {

std::string_view to_string(Preset p) {
    switch (p) {
        case Preset::VPrimeOne: return "vprime1";
        case Preset::CauchyUnit: return "cauchyunit";
        case Preset::VOne: return "v1";
        case Preset::Custom: return "custom";
    }
    throw std::logic_error("unreachable");
}

std::string_view to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Vandermonde: return "vandermonde";
        case GeneratorKind::CauchySystematic: return "cauchy";
    }
    throw std::logic_error("unreachable");
}

Preset preset_from_string(std::string_view s) {
    if (s == "vprime1") return Preset::VPrimeOne;
    if (s == "cauchyunit") return Preset::CauchyUnit;
    if (s == "v1") return Preset::VOne;
    if (s == "custom") return Preset::Custom;
    throw std::invalid_argument("unknown preset: '" + std::string(s) + "'");
}

GeneratorKind generator_kind_from_string(std::string_view s) {
    if (s == "vandermonde") return GeneratorKind::Vandermonde;
    if (s == "cauchy") return GeneratorKind::CauchySystematic;
    throw std::invalid_argument("unknown generator kind: '" + std::string(s) + "'");
}

mpz_class locator_level(const Rat& x) {
    mpz_class num = abs(x.num());
    mpz_class den = x.den();
    return std::max(num, den);
}

std::vector<Rat> enumerate_min_locators(std::size_t n) {
    if (n == 0) return {};
    std::vector<Rat> out;
    out.reserve(n);
    for (unsigned long level = 1; out.size() < n; ++level) {
        std::vector<Rat> positives;
        if (level == 1) {
            positives.emplace_back(1);
        } else {
            for (unsigned long q = 1; q < level; ++q)
                if (std::gcd(level, q) == 1) {
                    positives.emplace_back(static_cast<long>(q), static_cast<long>(level));
                    positives.emplace_back(static_cast<long>(level), static_cast<long>(q));
                }
        }
        std::sort(positives.begin(), positives.end());
        for (const Rat& x : positives) {
            out.push_back(x);
            if (out.size() == n) break;
            out.push_back(-x);
            if (out.size() == n) break;
        }
    }
    return out;
}

std::vector<Rat> weights(std::span<const Rat> alphas) {
    std::vector<Rat> w(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Rat prod(1);
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            if (j == i) continue;
            Rat diff = alphas[i] - alphas[j];
            if (diff.is_zero()) throw std::invalid_argument("repeated locator");
            prod *= diff;
        }
        w[i] = prod.inv();
    }
    return w;
}

namespace {

void validate_shape(std::size_t n, std::size_t k, std::span<const Rat> alphas) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (alphas.size() != n) throw std::invalid_argument("need n locators");
    for (const Rat& a : alphas)
        if (a.is_zero()) throw std::invalid_argument("zero locator");
    std::vector<Rat> sorted(alphas.begin(), alphas.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated locator");
}

GrsCode finish(std::size_t n, std::size_t k, std::vector<Rat> alphas, std::vector<Rat> v,
               std::vector<Rat> v_prime, Preset preset) {
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].is_zero() || v_prime[i].is_zero())
            throw std::invalid_argument("zero column multiplier");
    GrsCode code{n, k, std::move(alphas), std::move(v), std::move(v_prime), preset};
#ifndef NDEBUG
    if (!verify_system_eq1(code)) throw std::logic_error("column multipliers violate the kernel system");
#endif
    return code;
}

}  // namespace

GrsCode make_code(std::size_t n, std::size_t k, std::vector<Rat> alphas, Preset preset) {
    validate_shape(n, k, alphas);
    std::vector<Rat> w = weights(alphas);
    std::vector<Rat> v, v_prime;
    switch (preset) {
        case Preset::VPrimeOne:
            v_prime.assign(n, Rat(1));
            v = std::move(w);
            break;
        case Preset::VOne:
            v.assign(n, Rat(1));
            v_prime = std::move(w);
            break;
        case Preset::CauchyUnit: {
            v.resize(n);
            v_prime.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                Rat prod(1);
                for (std::size_t t = k; t < n; ++t) {
                    if (t == i) continue;
                    prod *= alphas[i] - alphas[t];
                }
                v[i] = prod.inv();
                v_prime[i] = w[i] / v[i];
            }
            break;
        }
        case Preset::Custom:
            throw std::invalid_argument("custom preset needs an explicit v or v'");
    }
    return finish(n, k, std::move(alphas), std::move(v), std::move(v_prime), preset);
}

GrsCode make_code_with_v(std::size_t n, std::size_t k, std::vector<Rat> alphas, std::vector<Rat> v) {
    validate_shape(n, k, alphas);
    if (v.size() != n) throw std::invalid_argument("need n multipliers");
    std::vector<Rat> w = weights(alphas);
    std::vector<Rat> v_prime(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) throw std::invalid_argument("zero column multiplier");
        v_prime[i] = w[i] / v[i];
    }
    return finish(n, k, std::move(alphas), std::move(v), std::move(v_prime), Preset::Custom);
}

GrsCode make_code_with_v_prime(std::size_t n, std::size_t k, std::vector<Rat> alphas,
                               std::vector<Rat> v_prime) {
    validate_shape(n, k, alphas);
    if (v_prime.size() != n) throw std::invalid_argument("need n multipliers");
    std::vector<Rat> w = weights(alphas);
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v_prime[i].is_zero()) throw std::invalid_argument("zero column multiplier");
        v[i] = w[i] / v_prime[i];
    }
    return finish(n, k, std::move(alphas), std::move(v), std::move(v_prime), Preset::Custom);
}

namespace {

RatMatrix vandermonde_times_diag(std::span<const Rat> alphas, std::span<const Rat> diag,
                                 std::size_t rows) {
    RatMatrix m(rows, alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Rat acc = diag[i];
        for (std::size_t r = 0; r < rows; ++r) {
            m.at(r, i) = acc;
            if (r + 1 < rows) acc *= alphas[i];
        }
    }
    return m;
}

}  // namespace

RatMatrix generator_vandermonde(const GrsCode& code) {
    return vandermonde_times_diag(code.alphas, code.v_prime, code.k);
}

RatMatrix parity_check(const GrsCode& code) {
    return vandermonde_times_diag(code.alphas, code.v, code.n - code.k);
}

RatMatrix generator_cauchy(const GrsCode& code) {
    const std::size_t n = code.n, k = code.k;
    std::vector<Rat> c(k), d(n - k);
    for (std::size_t i = 0; i < k; ++i) {
        Rat prod(1);
        for (std::size_t t = 0; t < k; ++t) {
            if (t == i) continue;
            prod *= code.alphas[i] - code.alphas[t];
        }
        c[i] = (code.v_prime[i] * prod).inv();
    }
    for (std::size_t j = 0; j < n - k; ++j) {
        Rat prod(1);
        for (std::size_t t = 0; t < k; ++t) prod *= code.alphas[j + k] - code.alphas[t];
        d[j] = code.v_prime[j + k] * prod;
    }
    RatMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        g.at(i, i) = Rat(1);
        // The t = i factor of d_j is alpha_{j+k} - alpha_i, so the Cauchy
        // denominator must read b_j - a_i for row i to stay in the kernel of
        // the parity check: row i interpolates the Lagrange basis polynomial
        // of alpha_i through the generator multipliers.
        for (std::size_t j = 0; j < n - k; ++j)
            g.at(i, j + k) = c[i] * d[j] / (code.alphas[j + k] - code.alphas[i]);
    }
    return g;
}

RatMatrix generator(const GrsCode& code, GeneratorKind kind) {
    return kind == GeneratorKind::Vandermonde ? generator_vandermonde(code) : generator_cauchy(code);
}

bool verify_system_eq1(const GrsCode& code) {
    std::vector<Rat> pow(code.n, Rat(1));
    for (std::size_t r = 0; r + 1 < code.n; ++r) {
        Rat sum;
        for (std::size_t i = 0; i < code.n; ++i) {
            sum += pow[i] * code.v[i] * code.v_prime[i];
            pow[i] *= code.alphas[i];
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

}  // namespace grsq
