#include "jordeform/fb.hpp"

#include "jordeform/fock.hpp"

#include <chrono>

namespace jordeform {

namespace {

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

constexpr int kBm = 0, kAm = 1, kN = 2, kM = 3, kAp = 4, kBp = 5;

} // namespace

PolyOperator PolyOperator::identity(int order, int deg) {
    PolyOperator p(order, deg);
    for (int j = 0; j <= deg; ++j) p.at(j, j) = ZSeries::one(order);
    return p;
}

PolyOperator PolyOperator::mul_alpha(int order, int deg) {
    return mul_poly(order, deg, {{1, ZSeries::one(order)}});
}

PolyOperator PolyOperator::d_alpha(int order, int deg) {
    PolyOperator p(order, deg);
    for (int j = 1; j <= deg; ++j) p.at(j - 1, j) = ZSeries(order, j);
    return p;
}

PolyOperator PolyOperator::mul_poly(int order, int deg,
                                    const std::vector<std::pair<int, ZSeries>>& poly) {
    PolyOperator p(order, deg);
    for (int j = 0; j <= deg; ++j)
        for (const auto& [b, c] : poly)
            if (j + b <= deg) p.at(j + b, j) += c;
    return p;
}

PolyOperator PolyOperator::shift_series(int order, int deg, const std::vector<ZSeries>& w) {
    PolyOperator p(order, deg);
    for (int n = 0; n <= deg; ++n)
        for (int k = 0; k <= n && k < static_cast<int>(w.size()); ++k) {
            ZSeries c = w[static_cast<size_t>(k)];
            p.at(n - k, n) += c.scale(Rational(falling(static_cast<unsigned>(n), static_cast<unsigned>(k))));
        }
    return p;
}

PolyOperator PolyOperator::operator*(const PolyOperator& o) const {
    PolyOperator r(order_, deg_);
    for (int j = 0; j <= deg_; ++j)
        for (int k = 0; k <= deg_; ++k) {
            const ZSeries& b = o.at(k, j);
            if (b.is_zero()) continue;
            for (int i = 0; i <= deg_; ++i) {
                const ZSeries& a = at(i, k);
                if (!a.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

PolyOperator& PolyOperator::operator+=(const PolyOperator& o) {
    for (int j = 0; j <= deg_; ++j)
        for (int i = 0; i <= deg_; ++i) at(i, j) += o.at(i, j);
    return *this;
}

PolyOperator& PolyOperator::operator-=(const PolyOperator& o) {
    for (int j = 0; j <= deg_; ++j)
        for (int i = 0; i <= deg_; ++i) at(i, j) -= o.at(i, j);
    return *this;
}

PolyOperator PolyOperator::scaled(const ZSeries& c) const {
    PolyOperator r(order_, deg_);
    for (int j = 0; j <= deg_; ++j)
        for (int i = 0; i <= deg_; ++i)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j) * c;
    return r;
}

bool PolyOperator::columns_zero(int keep) const {
    for (int j = 0; j < keep; ++j)
        for (int i = 0; i <= deg_; ++i)
            if (!at(i, j).is_zero()) return false;
    return true;
}

long PolyOperator::column_term_count(int keep) const {
    long n = 0;
    for (int j = 0; j < keep; ++j)
        for (int i = 0; i <= deg_; ++i)
            if (!at(i, j).is_zero()) ++n;
    return n;
}

// ---------------------------------------------------------------------------

PolyOperator fb_realize(AlgebraId id, int slot, int order, int deg) {
    auto fact = [](int n) { return Rational(1, factorial(static_cast<unsigned>(n))); };
    if (id == AlgebraId::h6_jordanian) {
        // A+ multiplies, A- differentiates behind e^{z alpha}
        switch (slot) {
        case kAp:
            return PolyOperator::mul_alpha(order, deg);
        case kM:
            return PolyOperator::identity(order, deg);
        case kN: { // ((e^{z alpha} - 1)/z) d
            std::vector<std::pair<int, ZSeries>> poly;
            for (int b = 1; b <= order + 1; ++b)
                poly.emplace_back(b, ZSeries::monomial(order, b - 1, fact(b)));
            return PolyOperator::mul_poly(order, deg, poly) * PolyOperator::d_alpha(order, deg);
        }
        case kAm: { // e^{z alpha} d
            std::vector<std::pair<int, ZSeries>> poly;
            for (int b = 0; b <= order; ++b)
                poly.emplace_back(b, ZSeries::monomial(order, b, fact(b)));
            return PolyOperator::mul_poly(order, deg, poly) * PolyOperator::d_alpha(order, deg);
        }
        case kBm: { // e^{z alpha} d^2
            std::vector<std::pair<int, ZSeries>> poly;
            for (int b = 0; b <= order; ++b)
                poly.emplace_back(b, ZSeries::monomial(order, b, fact(b)));
            PolyOperator d = PolyOperator::d_alpha(order, deg);
            return PolyOperator::mul_poly(order, deg, poly) * (d * d);
        }
        case kBp: { // ((1 - e^{-z alpha})/z)^2
            std::vector<std::pair<int, ZSeries>> poly;
            for (int b = 2; b <= order + 2; ++b) {
                Rational c = Rational((Int(1) << b) - 2, factorial(static_cast<unsigned>(b)));
                if (b % 2) c = -c;
                poly.emplace_back(b, ZSeries::monomial(order, b - 2, c));
            }
            return PolyOperator::mul_poly(order, deg, poly);
        }
        }
    } else if (id == AlgebraId::h6_jordanian_dual) {
        // A- differentiates, A+ multiplies behind the shift e^{z d}
        auto shift_exp = [&](int lead_pow) {
            // w_k = z^{k+lead_pow}/k!, clipped at the truncation
            std::vector<ZSeries> w;
            for (int k = 0; k + lead_pow <= order + 1 && k <= deg; ++k)
                w.push_back(ZSeries::monomial(order, k + lead_pow, fact(k)));
            return w;
        };
        switch (slot) {
        case kAm:
            return PolyOperator::d_alpha(order, deg);
        case kM:
            return PolyOperator::identity(order, deg);
        case kN: { // alpha (e^{z d} - 1)/z
            std::vector<ZSeries> w;
            for (int k = 1; k <= order + 1 && k <= deg + 1; ++k)
                w.push_back(ZSeries::monomial(order, k - 1, fact(k)));
            w.insert(w.begin(), ZSeries(order));
            return PolyOperator::mul_alpha(order, deg) *
                   PolyOperator::shift_series(order, deg, w);
        }
        case kAp: // alpha e^{z d}
            return PolyOperator::mul_alpha(order, deg) *
                   PolyOperator::shift_series(order, deg, shift_exp(0));
        case kBp: { // (alpha^2 + z alpha) e^{z d}
            std::vector<std::pair<int, ZSeries>> poly = {
                {2, ZSeries::one(order)}, {1, ZSeries::monomial(order, 1, 1)}};
            return PolyOperator::mul_poly(order, deg, poly) *
                   PolyOperator::shift_series(order, deg, shift_exp(0));
        }
        case kBm: { // ((1 - e^{-z d})/z)^2
            std::vector<ZSeries> w(2, ZSeries(order));
            for (int k = 2; k <= order + 2 && k <= deg; ++k) {
                Rational c = Rational((Int(1) << k) - 2, factorial(static_cast<unsigned>(k)));
                if (k % 2) c = -c;
                w.push_back(ZSeries::monomial(order, k - 2, c));
            }
            return PolyOperator::shift_series(order, deg, w);
        }
        }
    }
    throw std::invalid_argument("no FB realization for this algebra/slot");
}

// ---------------------------------------------------------------------------

Report discrete_derivative_check(int deg) {
    long t0 = now_ms();
    const int order = deg; // nothing truncated: z-degree of the identity is n-1
    std::vector<ZSeries> w;
    w.push_back(ZSeries(order));
    for (int k = 1; k <= deg + 1; ++k)
        w.push_back(ZSeries::monomial(order, k - 1, Rational(1, factorial(static_cast<unsigned>(k)))));
    PolyOperator op = PolyOperator::shift_series(order, deg, w);
    PolyOperator want(order, deg);
    for (int n = 0; n <= deg; ++n)
        for (int k = 1; k <= n; ++k)
            want.at(n - k, n) = ZSeries::monomial(
                order, k - 1, Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
    PolyOperator res = op - want;
    bool ok = res.columns_zero(deg + 1);
    return {{"fb", "discrete derivative on monomials",
             "(e^{z d} - 1)/z alpha^n = ((alpha+z)^n - alpha^n)/z", ok,
             res.column_term_count(deg + 1), now_ms() - t0, ""}};
}

Report fb_rep_check(AlgebraId id, int order, int deg) {
    const Presentation& p = Presentation::get(id, order);
    const auto& nm = p.names();
    const int keep = deg + 1 - (order + 4);
    if (keep < 2) throw std::invalid_argument("FB degree too small for the guard band");
    std::vector<PolyOperator> gen;
    gen.reserve(6);
    for (int s = 0; s < 6; ++s) gen.push_back(fb_realize(id, s, order, deg));
    auto realize_element = [&](const Element& a) {
        PolyOperator r(order, deg);
        for (const auto& [m, c] : a.terms()) {
            PolyOperator w = PolyOperator::identity(order, deg);
            for (size_t s = 0; s < 6; ++s)
                for (int t = 0; t < m.e[s]; ++t) w = w * gen[s];
            r += w.scaled(c);
        }
        return r;
    };
    Report rep;
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < i; ++j) {
            long t0 = now_ms();
            PolyOperator rhs = gen[static_cast<size_t>(i)] * gen[static_cast<size_t>(j)] -
                               gen[static_cast<size_t>(j)] * gen[static_cast<size_t>(i)];
            PolyOperator res = rhs - realize_element(p.bracket(i, j));
            bool ok = res.columns_zero(keep);
            rep.push_back({"fb",
                           "polynomial-space commutator [" + nm[static_cast<size_t>(i)] + "," +
                               nm[static_cast<size_t>(j)] + "], " + algebra_name(id),
                           "rho(X)rho(Y) - rho(Y)rho(X) = rho([X,Y]) on guarded columns", ok,
                           res.column_term_count(keep), now_ms() - t0, ""});
        }
    return rep;
}

Report fb_fock_agreement_check(int order, int deg, int dim) {
    long t0 = now_ms();
    const int common = std::min(deg + 1, dim);
    const auto& nm = Presentation::get(AlgebraId::h6_jordanian, order).names();
    Report rep;
    for (int s = 0; s < 6; ++s) {
        PolyOperator ps = fb_realize(AlgebraId::h6_jordanian, s, order, deg);
        FockMatrix fm = generator_matrix(s, order, dim);
        bool ok = true;
        long bad = 0;
        for (int i = 0; i < common; ++i)
            for (int j = 0; j < common; ++j)
                if (ps.at(i, j) != fm.at(i, j)) {
                    ok = false;
                    ++bad;
                }
        rep.push_back({"fb", "FB matches number-state matrix for " + nm[static_cast<size_t>(s)],
                       "alpha^m and a+^m|0> carry the same representation", ok, bad,
                       now_ms() - t0, ""});
        t0 = now_ms();
    }
    return rep;
}

// ---------------------------------------------------------------------------

Element h6_automorphism(const Element& a, const Presentation& to) {
    static constexpr int swap_slot[6] = {5, 4, 2, 3, 1, 0};
    Element r(a.order());
    for (const auto& [m, c] : a.terms()) {
        Word w;
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < m.e[static_cast<size_t>(s)]; ++t)
                w.push_back(static_cast<uint8_t>(swap_slot[s]));
        ZSeries coeff = c.flip_z();
        if (m.degree() % 2) coeff = -coeff;
        r += to.normal_order(w, coeff);
    }
    return r;
}

Report automorphism_transport_check(int order) {
    const Presentation& a = Presentation::get(AlgebraId::h6_jordanian, order);
    const Presentation& b = Presentation::get(AlgebraId::h6_jordanian_dual, order);
    static constexpr int swap_slot[6] = {5, 4, 2, 3, 1, 0};
    Report rep;
    {
        long t0 = now_ms();
        long bad = 0;
        std::string residual;
        for (int i = 1; i < 6; ++i)
            for (int j = 0; j < i; ++j) {
                // theta([X,Y]) = [theta(X), theta(Y)], both sides normal
                // ordered in the image presentation
                Element lhs = h6_automorphism(a.bracket(i, j), b);
                Element rhs = b.bracket(swap_slot[i], swap_slot[j]);
                Element res = lhs - rhs;
                if (!res.is_zero()) {
                    bad += static_cast<long>(res.term_count());
                    if (residual.empty())
                        residual = "[" + a.names()[static_cast<size_t>(i)] + "," +
                                   a.names()[static_cast<size_t>(j)] + "]: " + b.element_str(res);
                }
            }
        rep.push_back({"iso", "involution carries one h6 table to the other",
                       "theta([X,Y]) = [theta(X),theta(Y)] with z -> -z", bad == 0, bad,
                       now_ms() - t0, residual});
    }
    {
        long t0 = now_ms();
        long bad = 0;
        for (int i = 1; i < 6; ++i)
            for (int j = 0; j < i; ++j) {
                Element back = h6_automorphism(h6_automorphism(a.bracket(i, j), b), a);
                if (back != a.bracket(i, j)) ++bad;
            }
        for (int s = 0; s < 6; ++s)
            if (h6_automorphism(h6_automorphism(a.gen(s), b), a) != a.gen(s)) ++bad;
        rep.push_back({"iso", "involution squares to the identity",
                       "theta(theta(X)) = X", bad == 0, bad, now_ms() - t0, ""});
    }
    return rep;
}

} // namespace jordeform
