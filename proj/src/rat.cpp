#include "grsq/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace grsq {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rat::Rat(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_(make_canonical(num, den)) {}

Rat Rat::parse(std::string_view text) {
    // grammar: -?digits(/digits)?
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    std::size_t den_begin = num_end;
    if (den_begin < text.size()) {
        if (text[den_begin] != '/')
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        ++den_begin;
        std::size_t den_end = digits(den_begin);
        if (den_end == den_begin || den_end != text.size())
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    }
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const {
    return q_.get_str();
}

Rat Rat::abs() const {
    return Rat(mpq_class(::abs(q_)));
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    mpq_class q(num, den);  // coprime already, powers of coprime values
    return Rat(std::move(q));
}

Rat Rat::operator-() const {
    return Rat(mpq_class(-q_));
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.q_;
}

}  // namespace grsq
