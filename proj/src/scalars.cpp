#include "jordeform/scalars.hpp"

namespace jordeform {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Int falling(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
}

Radical::Radical(Rational q, Int r) : q_(std::move(q)), r_(std::move(r)) {
    if (r_ <= 0) throw std::domain_error("Radical radicand must be positive");
    if (q_ == 0) {
        r_ = 1;
        return;
    }
    // pull square factors of the radicand into the rational part; for the
    // factorial radicands in the number-state layer all prime factors are
    // small, so trial division is cheap regardless of the radicand's size
    Int s = 1, rest = 1, m = r_;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= d;
        if (e % 2) rest *= d;
    }
    rest *= m; // leftover is 1 or prime
    q_ *= Rational(s);
    r_ = rest;
}

std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

std::string Radical::str() const {
    if (is_zero()) return "0";
    if (r_ == 1) return rational_str(q_);
    std::string s = rational_str(q_);
    if (s == "1")
        s = "";
    else if (s == "-1")
        s = "-";
    else
        s += "*";
    return s + "sqrt(" + r_.str() + ")";
}

} // namespace jordeform
