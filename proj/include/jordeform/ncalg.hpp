#pragma once

// Noncommutative polynomial algebra on six generators with a PBW
// normal-ordering rewrite engine. Three presentations are supported, all
// sharing the slot layout (lowering pair, mixed pair, diagonal, central,
// raising pair); the commutator table drives the rewriting.

#include "jordeform/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace jordeform {

enum class AlgebraId {
    h6_jordanian,
    h6_jordanian_dual,
    schrodinger_jordanian,
};

AlgebraId algebra_from_name(const std::string& name);
std::string algebra_name(AlgebraId id);

// Exponent vector over the six PBW slots; the monomial is the ordered product
// g_0^{e0} g_1^{e1} ... g_5^{e5} in slot order.
struct Monomial {
    std::array<uint8_t, 6> e{};

    static Monomial unit() { return {}; }
    static Monomial gen(int slot) {
        Monomial m;
        m.e[static_cast<size_t>(slot)] = 1;
        return m;
    }
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_unit() const { return degree() == 0; }
    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (size_t i = 0; i < 6; ++i) m.e[i] = static_cast<uint8_t>(e[i] + o.e[i]);
        return m;
    }
    auto operator<=>(const Monomial&) const = default;
};

// Finite Z-series-linear combination of normal-ordered monomials. The zero
// element stores no terms.
class Element {
public:
    explicit Element(int order) : order_(order) {}
    Element(int order, const Monomial& m, ZSeries c) : order_(order) { add(m, c); }

    static Element zero(int order) { return Element(order); }
    static Element unit(int order) { return Element(order, Monomial::unit(), ZSeries::one(order)); }
    static Element generator(int order, int slot) {
        return Element(order, Monomial::gen(slot), ZSeries::one(order));
    }
    static Element scalar(int order, const ZSeries& c) { return Element(order, Monomial::unit(), c); }

    int order() const { return order_; }
    const std::map<Monomial, ZSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add(const Monomial& m, const ZSeries& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const {
        Element r(order_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    // scalar multiples
    Element scaled(const ZSeries& c) const {
        Element r(order_);
        for (const auto& [m, t] : terms_) r.add(m, t * c);
        return r;
    }
    Element scaled(const Rational& q) const {
        if (q == 0) return Element(order_);
        Element r(order_);
        for (const auto& [m, t] : terms_) {
            ZSeries s = t;
            r.terms_.emplace(m, s.scale(q));
        }
        return r;
    }
    // coefficient of a monomial (zero series when absent)
    ZSeries coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ZSeries(order_) : it->second;
    }
    // keep only the z^0 part
    Element classical_limit() const {
        Element r(order_);
        for (const auto& [m, c] : terms_)
            if (c.constant_term() != 0) r.add(m, ZSeries(order_, c.constant_term()));
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    int order_;
    std::map<Monomial, ZSeries> terms_;
};

using Word = std::basic_string<uint8_t>; // generator slots, left to right

// A presentation: slot names, the commutator table [g_i, g_j] for i > j in
// normal form, and the memoized rewrite engine. Immutable once built; the
// word cache is internal and guarded.
class Presentation {
public:
    static const Presentation& get(AlgebraId id, int order);

    AlgebraId id() const { return id_; }
    int order() const { return order_; }
    const std::array<std::string, 6>& names() const { return names_; }
    int slot(const std::string& name) const;

    // [g_i, g_j] with antisymmetry synthesized from the stored i > j half
    Element bracket(int i, int j) const;

    // engine
    Element normal_order(const Word& w) const;                    // unit coefficient
    Element normal_order(const Word& w, const ZSeries& c) const { return normal_order(w).scaled(c); }
    Element multiply(const Element& a, const Element& b) const;
    Element commutator(const Element& a, const Element& b) const {
        return multiply(a, b) - multiply(b, a);
    }
    // exp(c z g) expanded to the truncation order
    Element exp_z_gen(int slot, const Rational& c) const;

    Element gen(int slot) const { return Element::generator(order_, slot); }
    Element gen(const std::string& name) const { return gen(slot(name)); }
    Element unit() const { return Element::unit(order_); }

    std::string element_str(const Element& a) const;

    // leftmost-first vs rightmost-first reduction agreement probe (used by
    // the confluence tests; both must give the rewrite-cache answer)
    Element normal_order_rightmost(const Word& w) const;

private:
    friend class PresentationRegistry;
    Presentation(AlgebraId id, int order);
    void set_bracket(int i, int j, Element e);
    Element reduce(const Word& w, bool rightmost) const;

    AlgebraId id_;
    int order_;
    std::array<std::string, 6> names_;
    // lower-triangular: table_[i][j] valid for i > j
    std::array<std::array<std::unique_ptr<Element>, 6>, 6> table_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Word, Element> cache_;
};

Word monomial_word(const Monomial& m);

// rendering for one |coefficient|*z^zpow factor, shared by the printers;
// empty result means the factor is 1
std::string coeff_str(const Rational& abs_coeff, int zpow);

} // namespace jordeform
