#include "grsq/codec.hpp"

#include <algorithm>
#include <utility>

#include "grsq/bitwidth.hpp"
#include "grsq/eea.hpp"
#include "grsq/matrix.hpp"

namespace grsq {

ErrorPattern ErrorPattern::from_vector(std::span<const Rat> e) {
    ErrorPattern p;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_zero()) continue;
        p.positions.push_back(i);
        p.values.push_back(e[i]);
    }
    return p;
}

std::vector<Rat> ErrorPattern::to_vector(std::size_t n) const {
    if (positions.size() != values.size())
        throw std::invalid_argument("error pattern arrays differ in length");
    std::vector<Rat> e(n);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= n) throw std::invalid_argument("error position out of range");
        if (values[i].is_zero()) throw std::invalid_argument("zero error value");
        e[positions[i]] = values[i];
    }
    return e;
}

std::vector<Rat> encode(const GrsCode& code, GeneratorKind kind, std::span<const Rat> u) {
    if (u.size() != code.k) throw std::invalid_argument("information word length must be k");
    return row_times_matrix(u, generator(code, kind));
}

std::vector<Rat> corrupt(std::span<const Rat> c, const ErrorPattern& e) {
    std::vector<Rat> r(c.begin(), c.end());
    std::vector<Rat> ev = e.to_vector(c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += ev[i];
    return r;
}

std::vector<Rat> syndrome(const GrsCode& code, std::span<const Rat> r) {
    if (r.size() != code.n) throw std::invalid_argument("received word length must be n");
    std::vector<Rat> s(code.distance() - 1);
    std::vector<Rat> pow(code.n);
    for (std::size_t j = 0; j < code.n; ++j) pow[j] = r[j] * code.v[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < code.n; ++j) acc += pow[j];
        s[i] = std::move(acc);
        if (i + 1 < s.size())
            for (std::size_t j = 0; j < code.n; ++j) pow[j] *= code.alphas[j];
    }
    return s;
}

RatPoly syndrome_poly(std::span<const Rat> s) {
    return RatPoly(std::vector<Rat>(s.begin(), s.end()));
}

mpz_class common_denominator_xi(const RatPoly& s) {
    mpz_class xi(1);
    for (const Rat& c : s.coeffs()) mpz_lcm(xi.get_mpz_t(), xi.get_mpz_t(), c.den().get_mpz_t());
    return xi;
}

KeyEqSolution solve_key_equation(const RatPoly& s_poly, std::size_t d) {
    if (s_poly.is_zero()) throw std::invalid_argument("zero syndrome polynomial");
    if (d < 2 || s_poly.deg() > static_cast<int>(d) - 2)
        throw std::invalid_argument("syndrome polynomial too long for the distance");
    const Rat t_stop(static_cast<long>(d) - 1, 2);
    // Within the decoding radius deg S >= (d-1)/2 always holds; a shorter S
    // means the weight promise was broken.
    if (Rat(static_cast<long>(s_poly.deg())) < t_stop)
        throw DecodeFailure("syndrome degree below the stop threshold");

    mpz_class xi = common_denominator_xi(s_poly);
    std::vector<mpz_class> a(d), b(static_cast<std::size_t>(s_poly.deg()) + 1);
    a.back() = xi;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Rat& c = s_poly.coeff(i);
        b[i] = c.num() * (xi / c.den());
    }
    std::vector<mpz_class> t_scaled = detail::eea_stop_cofactor_scaled(a, b, t_stop);

    if (t_scaled.empty() || t_scaled.front() == 0)
        throw DecodeFailure("key equation has no admissible solution");
    std::vector<Rat> lam(t_scaled.size());
    Rat c0 = Rat(t_scaled.front()).inv();
    for (std::size_t i = 0; i < t_scaled.size(); ++i) lam[i] = Rat(t_scaled[i]) * c0;
    RatPoly locator(std::move(lam));

    // r_h = s_h a + t_h b and deg r_h < d-1 give Omega = (Lambda * S) mod
    // x^(d-1) exactly.
    RatPoly evaluator = (locator * s_poly).truncated(d - 1);
    if (evaluator.deg() >= locator.deg())
        throw DecodeFailure("evaluator degree reaches the locator degree");
    return {std::move(locator), std::move(evaluator)};
}

std::vector<Rat> forney(const GrsCode& code, const KeyEqSolution& sol) {
    if (sol.locator.coeff(0) != Rat(1)) throw std::invalid_argument("locator not normalized");
    const RatPoly deriv = sol.locator.derivative();
    std::vector<Rat> e(code.n);
    for (std::size_t i = 0; i < code.n; ++i) {
        Rat x = code.alphas[i].inv();
        if (!sol.locator.eval(x).is_zero()) continue;
        Rat dv = deriv.eval(x);
        if (dv.is_zero()) throw DecodeFailure("repeated locator root");
        e[i] = -(code.alphas[i] / code.v[i]) * (sol.evaluator.eval(x) / dv);
    }
    return e;
}

namespace {

bool all_integer(std::span<const Rat> xs) {
    return std::all_of(xs.begin(), xs.end(), [](const Rat& x) { return x.is_integer(); });
}

}  // namespace

DecodeOutcome decode(const GrsCode& code, std::span<const Rat> r) {
    std::vector<Rat> s = syndrome(code, r);

    DecodeOutcome out;
    out.report.measured["s"] = bitwidth(s);
    RatPoly s_pol = syndrome_poly(s);
    if (s_pol.is_zero()) {
        // r is already a codeword under the weight promise
        out.codeword.assign(r.begin(), r.end());
        out.error.assign(code.n, Rat());
        out.report.measured["e"] = bitwidth(out.error);
        return out;
    }

    KeyEqSolution sol = solve_key_equation(s_pol, code.distance());
    std::vector<Rat> e = forney(code, sol);

    const std::size_t tau = static_cast<std::size_t>(
        std::count_if(e.begin(), e.end(), [](const Rat& x) { return !x.is_zero(); }));
    if (static_cast<int>(tau) != sol.locator.deg())
        throw DecodeFailure("locator does not split over the code locators");
    if (tau > code.radius()) throw DecodeFailure("error weight beyond half the minimum distance");

    std::vector<Rat> c(r.begin(), r.end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= e[i];
    for (const Rat& x : syndrome(code, c))
        if (!x.is_zero()) throw DecodeFailure("decoded word fails the parity check");

    RatPoly xi_s = s_pol.scaled(Rat(common_denominator_xi(s_pol)));
    out.report.measured["xiS"] = bitwidth(xi_s);
    out.report.measured["Lambda"] = bitwidth(sol.locator);
    out.report.measured["Omega"] = bitwidth(sol.evaluator);
    out.report.measured["H"] = bitwidth(parity_check(code));
    out.report.measured["c"] = bitwidth(c);
    out.report.measured["e"] = bitwidth(e);

    BoundInputs in = bound_inputs_for(code, tau, 0, bitwidth(e));
    bool integer_h = all_integer(code.alphas) && all_integer(code.v);
    // encode-side quantities (u, G, c-vs-G) are not known here, so only the
    // decoding-side bounds get populated
    out.report = conformance_check(out.report.measured, in, code.preset,
                                   GeneratorKind::Vandermonde, integer_h, code.distance());
    out.codeword = std::move(c);
    out.error = std::move(e);
    return out;
}

}  // namespace grsq
