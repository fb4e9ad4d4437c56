#pragma once

// Exact scalar arithmetic for the deformation engine: arbitrary-precision
// rationals, z-power series truncated at a fixed global order, and radical
// scalars q*sqrt(r) for the normalized number-state matrices.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordeform {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct order_mismatch : std::invalid_argument {
    order_mismatch() : std::invalid_argument("ZSeries truncation orders differ") {}
};

struct non_unit : std::domain_error {
    non_unit() : std::domain_error("ZSeries has zero constant term, not invertible") {}
};

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
// falling factorial n(n-1)...(n-k+1)
Int falling(unsigned n, unsigned k);

// Polynomial in z modulo z^{order+1}. Every scalar in one computation context
// shares the same truncation order; mixing orders throws.
class ZSeries {
public:
    explicit ZSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    ZSeries(int order, const Rational& constant) : ZSeries(order) { c_[0] = constant; }

    static ZSeries monomial(int order, int zpow, const Rational& v) {
        ZSeries s(order);
        if (zpow <= order) s.c_[static_cast<size_t>(zpow)] = v;
        return s;
    }
    static ZSeries one(int order) { return ZSeries(order, 1); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](size_t k) const { return c_[k]; }
    Rational& operator[](size_t k) { return c_[k]; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    // lowest z-power with nonzero coefficient, or order()+1 if zero
    int valuation() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return order() + 1;
    }
    const Rational& constant_term() const { return c_[0]; }

    ZSeries& operator+=(const ZSeries& o) {
        check(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    ZSeries& operator-=(const ZSeries& o) {
        check(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    ZSeries operator-() const {
        ZSeries r(order());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }

    // Cauchy product, truncated
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        a.check(b);
        ZSeries r(a.order());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; i + j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

    ZSeries& scale(const Rational& q) {
        for (auto& v : c_) v *= q;
        return *this;
    }
    // substitute z -> -z
    ZSeries flip_z() const {
        ZSeries r(order());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = (k % 2) ? -c_[k] : c_[k];
        return r;
    }
    // multiply by z^k
    ZSeries shifted(int k) const {
        ZSeries r(order());
        for (size_t i = 0; i + static_cast<size_t>(k) < c_.size(); ++i)
            r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

    // b with a*b = 1 mod z^{order+1}; requires unit constant term
    ZSeries inverse() const {
        if (c_[0] == 0) throw non_unit();
        ZSeries r(order());
        r.c_[0] = 1 / c_[0];
        for (size_t k = 1; k < c_.size(); ++k) {
            Rational acc = 0;
            for (size_t j = 0; j < k; ++j) acc += r.c_[j] * c_[k - j];
            r.c_[k] = -acc / c_[0];
        }
        return r;
    }

    bool operator==(const ZSeries& o) const { return c_ == o.c_; }
    bool operator!=(const ZSeries& o) const { return c_ != o.c_; }
    bool operator<(const ZSeries& o) const { return c_ < o.c_; }

private:
    void check(const ZSeries& o) const {
        if (c_.size() != o.c_.size()) throw order_mismatch();
    }
    std::vector<Rational> c_;
};

// q*sqrt(r) with r a positive squarefree integer. Square factors of r are
// pulled into q on construction; zero normalizes to q=0, r=1.
class Radical {
public:
    Radical() : q_(0), r_(1) {}
    Radical(Rational q, Int r);

    const Rational& q() const { return q_; }
    const Int& r() const { return r_; }
    bool is_zero() const { return q_ == 0; }

    friend Radical operator*(const Radical& a, const Radical& b) {
        return Radical(a.q_ * b.q_, a.r_ * b.r_);
    }
    // defined only for equal radicands (or a zero operand)
    friend Radical operator+(const Radical& a, const Radical& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.r_ != b.r_) throw std::domain_error("Radical sum with distinct radicands");
        return Radical(a.q_ + b.q_, a.r_);
    }
    Radical operator-() const {
        Radical x;
        x.q_ = -q_;
        x.r_ = r_;
        return x;
    }

    bool operator==(const Radical& o) const { return q_ == o.q_ && r_ == o.r_; }
    bool operator!=(const Radical& o) const { return !(*this == o); }

    std::string str() const;

private:
    Rational q_;
    Int r_;
};

std::string rational_str(const Rational& q);

} // namespace jordeform
