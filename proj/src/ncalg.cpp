#include "jordeform/ncalg.hpp"

#include <sstream>
#include <stdexcept>

namespace jordeform {

AlgebraId algebra_from_name(const std::string& name) {
    if (name == "h6_jordanian" || name == "h6") return AlgebraId::h6_jordanian;
    if (name == "h6_jordanian_dual" || name == "h6-dual") return AlgebraId::h6_jordanian_dual;
    if (name == "schrodinger_jordanian" || name == "schrodinger") return AlgebraId::schrodinger_jordanian;
    throw std::invalid_argument("unknown presentation name: " + name);
}

std::string algebra_name(AlgebraId id) {
    switch (id) {
    case AlgebraId::h6_jordanian: return "h6_jordanian";
    case AlgebraId::h6_jordanian_dual: return "h6_jordanian_dual";
    case AlgebraId::schrodinger_jordanian: return "schrodinger_jordanian";
    }
    throw std::logic_error("bad AlgebraId");
}

Word monomial_word(const Monomial& m) {
    Word w;
    for (uint8_t s = 0; s < 6; ++s)
        for (int k = 0; k < m.e[s]; ++k) w.push_back(s);
    return w;
}

static Monomial word_monomial(const Word& w) {
    Monomial m;
    for (uint8_t s : w) ++m.e[s];
    return m;
}

Presentation::Presentation(AlgebraId id, int order) : id_(id), order_(order) {}

void Presentation::set_bracket(int i, int j, Element e) {
    table_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        std::make_unique<Element>(std::move(e));
}

int Presentation::slot(const std::string& name) const {
    for (int i = 0; i < 6; ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    throw std::invalid_argument("unknown generator name: " + name);
}

Element Presentation::bracket(int i, int j) const {
    if (i == j) return Element(order_);
    bool flip = i < j;
    if (flip) std::swap(i, j);
    const auto& p = table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (!p) return Element(order_);
    return flip ? -*p : *p;
}

// One rewrite step: replace the adjacent out-of-order pair g_a g_b (a > b in
// slot order) by g_b g_a + [g_a, g_b]. Each commutator term either carries a
// strictly positive z-power (bounded by the truncation order) or has degree
// at most 1, so the lexicographic measure (minimum z-order, degree,
// inversion count) strictly decreases and reduction halts.
Element Presentation::reduce(const Word& w, bool rightmost) const {
    int pos = -1;
    const int n = static_cast<int>(w.size());
    if (!rightmost) {
        for (int k = 0; k + 1 < n; ++k)
            if (w[static_cast<size_t>(k)] > w[static_cast<size_t>(k) + 1]) {
                pos = k;
                break;
            }
    } else {
        for (int k = n - 2; k >= 0; --k)
            if (w[static_cast<size_t>(k)] > w[static_cast<size_t>(k) + 1]) {
                pos = k;
                break;
            }
    }
    if (pos < 0) return Element(order_, word_monomial(w), ZSeries::one(order_));

    auto recurse = [&](const Word& v) {
        return rightmost ? reduce(v, true) : normal_order(v);
    };

    Word swapped = w;
    std::swap(swapped[static_cast<size_t>(pos)], swapped[static_cast<size_t>(pos) + 1]);
    Element res = recurse(swapped);

    Element br = bracket(w[static_cast<size_t>(pos)], w[static_cast<size_t>(pos) + 1]);
    const Word head = w.substr(0, static_cast<size_t>(pos));
    const Word tail = w.substr(static_cast<size_t>(pos) + 2);
    for (const auto& [m, c] : br.terms()) {
        Word sub = head + monomial_word(m) + tail;
        res += recurse(sub).scaled(c);
    }
    return res;
}

Element Presentation::normal_order(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    Element r = reduce(w, false);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(w, r);
    }
    return r;
}

Element Presentation::normal_order_rightmost(const Word& w) const { return reduce(w, true); }

Element Presentation::multiply(const Element& a, const Element& b) const {
    Element res(order_);
    for (const auto& [ma, ca] : a.terms()) {
        // rightmost occupied slot of ma, for the sorted-concatenation shortcut
        int hi = -1;
        for (int s = 5; s >= 0; --s)
            if (ma.e[static_cast<size_t>(s)]) {
                hi = s;
                break;
            }
        for (const auto& [mb, cb] : b.terms()) {
            int lo = 6;
            for (int s = 0; s < 6; ++s)
                if (mb.e[static_cast<size_t>(s)]) {
                    lo = s;
                    break;
                }
            ZSeries c = ca * cb;
            if (c.is_zero()) continue;
            if (hi <= lo) {
                res.add(ma * mb, c);
            } else {
                res += normal_order(monomial_word(ma) + monomial_word(mb)).scaled(c);
            }
        }
    }
    return res;
}

Element Presentation::exp_z_gen(int slot, const Rational& c) const {
    Element r(order_);
    Rational ck = 1;
    Int kfact = 1;
    for (int k = 0; k <= order_; ++k) {
        if (k > 0) {
            ck *= c;
            kfact *= k;
        }
        Monomial m;
        m.e[static_cast<size_t>(slot)] = static_cast<uint8_t>(k);
        r.add(m, ZSeries::monomial(order_, k, ck / Rational(kfact)));
    }
    return r;
}

// rendering: one printed term per (monomial, z-power), e.g. "-z*A-^2",
// "-(z/2)*K^2", "2z", "-(e... )" never appears, exponentials are expanded
std::string coeff_str(const Rational& q_abs, int zpow) {
    const Int num = numerator(q_abs);
    const Int den = denominator(q_abs);
    if (zpow == 0) {
        if (q_abs == 1) return "";
        if (den == 1) return num.str();
        return "(" + num.str() + "/" + den.str() + ")";
    }
    std::string zs = zpow == 1 ? "z" : "z^" + std::to_string(zpow);
    if (den == 1) {
        if (num == 1) return zs;
        return num.str() + zs;
    }
    std::string top = (num == 1 ? "" : num.str()) + zs;
    return "(" + top + "/" + den.str() + ")";
}

std::string Presentation::element_str(const Element& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        std::string mono;
        for (size_t s = 0; s < 6; ++s) {
            if (!m.e[s]) continue;
            if (!mono.empty()) mono += "*";
            mono += names_[s];
            if (m.e[s] > 1) mono += "^" + std::to_string(int(m.e[s]));
        }
        for (int k = 0; k <= order_; ++k) {
            const Rational& q = c[static_cast<size_t>(k)];
            if (q == 0) continue;
            bool neg = q < 0;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string cs = coeff_str(neg ? Rational(-q) : q, k);
            if (mono.empty())
                os << (cs.empty() ? "1" : cs);
            else if (cs.empty())
                os << mono;
            else
                os << cs << "*" << mono;
        }
    }
    return os.str();
}

} // namespace jordeform
