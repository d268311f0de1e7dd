#include "grsq/eea.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace grsq {

namespace {

// deg p < t, with the zero polynomial below every threshold
bool degree_below(const RatPoly& p, const Rat& t) {
    if (p.is_zero()) return true;
    return Rat(static_cast<long>(p.deg())) < t;
}

void check_inputs(const RatPoly& a, const RatPoly& b, const Rat& t_stop) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("eea_with_stop: zero input polynomial");
    if (a.deg() < b.deg()) throw std::invalid_argument("eea_with_stop: deg a < deg b");
    if (t_stop > Rat(static_cast<long>(b.deg())))
        throw std::invalid_argument("eea_with_stop: t_stop > deg b");
}

}  // namespace

EeaTriple eea_with_stop(const RatPoly& a, const RatPoly& b, const Rat& t_stop) {
    check_inputs(a, b, t_stop);
    EeaTriple prev{a, RatPoly::constant(1), RatPoly()};
    EeaTriple cur{b, RatPoly(), RatPoly::constant(1)};
    while (!degree_below(cur.r, t_stop)) {
        auto [q, rem] = divmod(prev.r, cur.r);
        EeaTriple next{std::move(rem), prev.s - q * cur.s, prev.t - q * cur.t};
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<EeaTriple> eea_trace(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("eea_trace: zero input polynomial");
    if (a.deg() < b.deg()) throw std::invalid_argument("eea_trace: deg a < deg b");
    std::vector<EeaTriple> rows;
    rows.push_back({a, RatPoly::constant(1), RatPoly()});
    rows.push_back({b, RatPoly(), RatPoly::constant(1)});
    while (!rows.back().r.is_zero()) {
        const EeaTriple& prev = rows[rows.size() - 2];
        const EeaTriple& cur = rows.back();
        auto [q, rem] = divmod(prev.r, cur.r);
        rows.push_back({std::move(rem), prev.s - q * cur.s, prev.t - q * cur.t});
    }
    return rows;
}

namespace detail {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, trailing zeros trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const mpz_class& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_exact(ZPoly& p, const mpz_class& d) {
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// lc(cur)^(deg prev - deg cur + 1) * prev = q * cur + rem over Z
std::pair<ZPoly, ZPoly> pseudo_divmod(const ZPoly& prev, const ZPoly& cur) {
    int dc = zdeg(cur);
    assert(zdeg(prev) >= dc && dc >= 0);
    const mpz_class& lc = cur.back();
    ZPoly rem = prev;
    ZPoly quot;
    int spare = zdeg(prev) - dc + 1;
    while (!rem.empty() && zdeg(rem) >= dc) {
        int d = zdeg(rem) - dc;
        mpz_class top = rem.back();
        if (quot.size() < static_cast<std::size_t>(d) + 1) quot.resize(static_cast<std::size_t>(d) + 1);
        for (mpz_class& c : quot) c *= lc;
        quot[static_cast<std::size_t>(d)] += top;
        for (mpz_class& c : rem) c *= lc;
        for (int j = 0; j <= dc; ++j)
            rem[static_cast<std::size_t>(d + j)] -= top * cur[static_cast<std::size_t>(j)];
        ztrim(rem);
        --spare;
    }
    if (spare > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(spare));
        for (mpz_class& c : quot) c *= f;
        for (mpz_class& c : rem) c *= f;
    }
    return {std::move(quot), std::move(rem)};
}

}  // namespace

std::vector<mpz_class> eea_stop_cofactor_scaled(const std::vector<mpz_class>& a,
                                                const std::vector<mpz_class>& b,
                                                const Rat& t_stop) {
    ZPoly r_prev = a, r_cur = b;
    ztrim(r_prev);
    ztrim(r_cur);
    if (r_prev.empty() || r_cur.empty())
        throw std::invalid_argument("eea cofactor: zero input polynomial");
    if (zdeg(r_prev) < zdeg(r_cur)) throw std::invalid_argument("eea cofactor: deg a < deg b");
    if (t_stop > Rat(static_cast<long>(zdeg(r_cur))))
        throw std::invalid_argument("eea cofactor: t_stop > deg b");

    ZPoly t_prev;                 // cofactor of a-row: 0
    ZPoly t_cur{mpz_class(1)};    // cofactor of b-row: 1

    auto below = [&](const ZPoly& p) {
        return p.empty() || Rat(static_cast<long>(zdeg(p))) < t_stop;
    };

    while (!below(r_cur)) {
        int delta = zdeg(r_prev) - zdeg(r_cur);
        auto [q, r_next] = pseudo_divmod(r_prev, r_cur);
        // transport the cofactor row the same way:
        // t_next = lc^(delta+1) * t_prev - q * t_cur
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), r_cur.back().get_mpz_t(), static_cast<unsigned long>(delta) + 1);
        ZPoly t_next(std::max(t_prev.size(), q.empty() ? 0 : q.size() + t_cur.size() - 1));
        for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] = t_prev[i] * scale;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t_cur.size(); ++j) t_next[i + j] -= q[i] * t_cur[j];
        }
        ztrim(t_next);

        // joint content keeps the (r, t) pair proportional to the classical row
        mpz_class g = zcontent(r_next);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zcontent(t_next).get_mpz_t());
        if (g > 1) {
            zdiv_exact(r_next, g);
            zdiv_exact(t_next, g);
        }

        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return t_cur;
}

}  // namespace detail

}  // namespace grsq
