#include "jordeform/fock.hpp"

#include <chrono>
#include <sstream>

namespace jordeform {

namespace {

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// h6 slot layout
constexpr int kBm = 0, kAm = 1, kN = 2, kM = 3, kAp = 4, kBp = 5;

std::array<FockMatrix, 6> generator_matrices(int order, int dim) {
    return {generator_matrix(0, order, dim), generator_matrix(1, order, dim),
            generator_matrix(2, order, dim), generator_matrix(3, order, dim),
            generator_matrix(4, order, dim), generator_matrix(5, order, dim)};
}

std::string radical_poly_str(const std::vector<Radical>& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << v[k].str();
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    return first ? "0" : os.str();
}

} // namespace

BosonPoly BosonPoly::operator*(const BosonPoly& o) const {
    BosonPoly r(order_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            ZSeries c = ca * cb;
            if (c.is_zero()) continue;
            const int q = ka.second, p2 = kb.first;
            int top = std::min(q, p2);
            for (int k = 0; k <= top; ++k) {
                Rational w = Rational(factorial(static_cast<unsigned>(k)) *
                                      binomial(static_cast<unsigned>(q), static_cast<unsigned>(k)) *
                                      binomial(static_cast<unsigned>(p2), static_cast<unsigned>(k)));
                ZSeries t = c;
                r.add(ka.first + p2 - k, q - k + kb.second, t.scale(w));
            }
        }
    }
    return r;
}

BosonPoly realize_boson(int slot, int order) {
    BosonPoly b(order);
    switch (slot) {
    case kAp:
        b.add(1, 0, ZSeries::one(order));
        break;
    case kM:
        b.add(0, 0, ZSeries::one(order));
        break;
    case kN: // ((e^{z a+} - 1)/z) a-
        for (int k = 1; k <= order + 1; ++k)
            b.add(k, 1, ZSeries::monomial(order, k - 1, Rational(1, factorial(static_cast<unsigned>(k)))));
        break;
    case kAm: // e^{z a+} a-
        for (int k = 0; k <= order; ++k)
            b.add(k, 1, ZSeries::monomial(order, k, Rational(1, factorial(static_cast<unsigned>(k)))));
        break;
    case kBm: // e^{z a+} a-^2
        for (int k = 0; k <= order; ++k)
            b.add(k, 2, ZSeries::monomial(order, k, Rational(1, factorial(static_cast<unsigned>(k)))));
        break;
    case kBp: { // ((1 - e^{-z a+})/z)^2, built as an explicit square
        BosonPoly s(order);
        for (int i = 1; i <= order + 1; ++i) {
            Rational c = Rational(1, factorial(static_cast<unsigned>(i)));
            if (i % 2 == 0) c = -c;
            s.add(i, 0, ZSeries::monomial(order, i - 1, c));
        }
        b = s * s;
        break;
    }
    default:
        throw std::invalid_argument("bad generator slot");
    }
    return b;
}

FockMatrix FockMatrix::identity(int order, int dim) {
    FockMatrix r(order, dim);
    for (int i = 0; i < dim; ++i) r.add(i, i, ZSeries::one(order));
    return r;
}

FockMatrix FockMatrix::operator*(const FockMatrix& o) const {
    FockMatrix r(order_, dim_);
    for (const auto& [k, c] : e_) {
        auto lo = o.e_.lower_bound({k.second, 0});
        auto hi = o.e_.lower_bound({k.second + 1, 0});
        for (auto it = lo; it != hi; ++it) r.add(k.first, it->first.second, c * it->second);
    }
    return r;
}

FockMatrix boson_matrix(const BosonPoly& b, int dim) {
    FockMatrix r(b.order(), dim);
    for (int m = 0; m < dim; ++m) {
        for (const auto& [pq, c] : b.terms()) {
            const auto [p, q] = pq;
            if (q > m) continue;
            ZSeries t = c;
            r.add(m - q + p, m, t.scale(Rational(falling(static_cast<unsigned>(m), static_cast<unsigned>(q)))));
        }
    }
    return r;
}

FockMatrix generator_matrix(int slot, int order, int dim) {
    return boson_matrix(realize_boson(slot, order), dim);
}

FockMatrix element_matrix(const Element& a, const std::array<FockMatrix, 6>& gen) {
    const int order = gen[0].order(), dim = gen[0].dim();
    FockMatrix r(order, dim);
    for (const auto& [m, c] : a.terms()) {
        FockMatrix w = FockMatrix::identity(order, dim);
        for (size_t s = 0; s < 6; ++s)
            for (int t = 0; t < m.e[s]; ++t) w = w * gen[s];
        r += w.scaled(c);
    }
    return r;
}

// ---------------------------------------------------------------------------

void RadMatrix::set(int i, int j, int zpow, const Radical& r) {
    if (r.is_zero() || zpow > order_ || i < 0 || i >= dim_ || j < 0 || j >= dim_) return;
    auto& v = e_[{i, j}];
    if (v.empty()) v.resize(static_cast<size_t>(order_) + 1);
    v[static_cast<size_t>(zpow)] = v[static_cast<size_t>(zpow)] + r;
    for (const auto& x : v)
        if (!x.is_zero()) return;
    e_.erase({i, j});
}

std::vector<Radical> RadMatrix::at(int i, int j) const {
    auto it = e_.find({i, j});
    if (it != e_.end()) return it->second;
    return std::vector<Radical>(static_cast<size_t>(order_) + 1);
}

std::string RadMatrix::entry_str(int i, int j) const { return radical_poly_str(at(i, j)); }

RadMatrix normalize(const FockMatrix& m) {
    RadMatrix r(m.order(), m.dim());
    for (const auto& [k, c] : m.entries()) {
        const auto [i, j] = k;
        Int fi = factorial(static_cast<unsigned>(i)), fj = factorial(static_cast<unsigned>(j));
        for (int zp = 0; zp <= m.order(); ++zp) {
            const Rational& u = c[static_cast<size_t>(zp)];
            if (u == 0) continue;
            r.set(i, j, zp, Radical(u / Rational(fj), fi * fj));
        }
    }
    return r;
}

RadMatrix closed_form_matrix(int slot, int order, int dim) {
    RadMatrix r(order, dim);
    auto fact = [](int n) { return factorial(static_cast<unsigned>(n)); };
    auto fall = [](int n, int k) { return falling(static_cast<unsigned>(n), static_cast<unsigned>(k)); };
    switch (slot) {
    case kAp:
        for (int m = 0; m + 1 < dim; ++m) r.set(m + 1, m, 0, Radical(1, m + 1));
        break;
    case kM:
        for (int m = 0; m < dim; ++m) r.set(m, m, 0, Radical(1, 1));
        break;
    case kN:
        for (int m = 1; m < dim; ++m) {
            r.set(m, m, 0, Radical(m, 1));
            for (int k = 1; k <= order && m + k < dim; ++k)
                r.set(m + k, m, k, Radical(Rational(m, fact(k + 1)), fall(m + k, k)));
        }
        break;
    case kAm:
        for (int m = 1; m < dim; ++m) {
            r.set(m - 1, m, 0, Radical(1, m));
            for (int k = 1; k <= order && m - 1 + k < dim; ++k)
                r.set(m - 1 + k, m, k, Radical(Rational(m, fact(k)), fall(m - 1 + k, k - 1)));
        }
        break;
    case kBm:
        for (int m = 1; m < dim; ++m) {
            if (m >= 2) r.set(m - 2, m, 0, Radical(1, Int(m) * (m - 1)));
            if (1 <= order) r.set(m - 1, m, 1, Radical(m - 1, m));
            for (int k = 2; k <= order && m - 2 + k < dim; ++k)
                r.set(m - 2 + k, m, k,
                      Radical(Rational(Int(m) * (m - 1), fact(k)), fall(m - 2 + k, k - 2)));
        }
        break;
    case kBp:
        for (int m = 0; m < dim; ++m)
            for (int k = 0; k <= order && m + 2 + k < dim; ++k) {
                Rational q = Rational((Int(1) << (k + 2)) - 2, fact(k + 2));
                if (k % 2) q = -q;
                r.set(m + 2 + k, m, k, Radical(q, fall(m + 2 + k, k + 2)));
            }
        break;
    default:
        throw std::invalid_argument("bad generator slot");
    }
    return r;
}

RadMatrix reference_block(int slot, int order) {
    RadMatrix r(order, 5);
    auto E = [&](int i, int j, int zpow, const Rational& q, long rad) {
        r.set(i, j, zpow, Radical(q, rad));
    };
    const Rational h(1, 2), th(1, 3), sx(1, 6), tw(1, 12), tt(2, 3), sv(7, 6);
    switch (slot) {
    case kAp:
        E(1, 0, 0, 1, 1);
        E(2, 1, 0, 1, 2);
        E(3, 2, 0, 1, 3);
        E(4, 3, 0, 2, 1);
        break;
    case kM:
        for (int m = 0; m < 5; ++m) E(m, m, 0, 1, 1);
        break;
    case kN:
        E(1, 1, 0, 1, 1);
        E(2, 2, 0, 2, 1);
        E(3, 3, 0, 3, 1);
        E(4, 4, 0, 4, 1);
        E(2, 1, 1, h, 2);
        E(3, 2, 1, 1, 3);
        E(4, 3, 1, 3, 1);
        E(3, 1, 2, sx, 6);
        E(4, 2, 2, tt, 3);
        E(4, 1, 3, tw, 6);
        break;
    case kAm:
        E(0, 1, 0, 1, 1);
        E(1, 2, 0, 1, 2);
        E(2, 3, 0, 1, 3);
        E(3, 4, 0, 2, 1);
        E(1, 1, 1, 1, 1);
        E(2, 2, 1, 2, 1);
        E(3, 3, 1, 3, 1);
        E(4, 4, 1, 4, 1);
        E(2, 1, 2, h, 2);
        E(3, 2, 2, 1, 3);
        E(4, 3, 2, 3, 1);
        E(3, 1, 3, sx, 6);
        E(4, 2, 3, tt, 3);
        E(4, 1, 4, tw, 6);
        break;
    case kBm:
        E(0, 2, 0, 1, 2);
        E(1, 3, 0, 1, 6);
        E(2, 4, 0, 2, 3);
        E(1, 2, 1, 1, 2);
        E(2, 3, 1, 2, 3);
        E(3, 4, 1, 6, 1);
        E(2, 2, 2, 1, 1);
        E(3, 3, 2, 3, 1);
        E(4, 4, 2, 6, 1);
        E(3, 2, 3, th, 3);
        E(4, 3, 3, 2, 1);
        E(4, 2, 4, sx, 3);
        break;
    case kBp:
        E(2, 0, 0, 1, 2);
        E(3, 1, 0, 1, 6);
        E(4, 2, 0, 2, 3);
        E(3, 0, 1, -1, 6);
        E(4, 1, 1, -2, 6);
        E(4, 0, 2, sv, 6);
        break;
    default:
        throw std::invalid_argument("bad generator slot");
    }
    return r;
}

// ---------------------------------------------------------------------------

Report fock_rep_check(int order, int dim) {
    const Presentation& p = Presentation::get(AlgebraId::h6_jordanian, order);
    const auto& nm = p.names();
    const int keep = dim - (order + 4);
    if (keep < 2) throw std::invalid_argument("Fock dimension too small for the guard band");
    auto gen = generator_matrices(order, dim);
    Report rep;
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < i; ++j) {
            long t0 = now_ms();
            FockMatrix rhs = gen[static_cast<size_t>(i)] * gen[static_cast<size_t>(j)] -
                             gen[static_cast<size_t>(j)] * gen[static_cast<size_t>(i)];
            FockMatrix lhs = element_matrix(p.bracket(i, j), gen);
            FockMatrix res = (rhs - lhs).principal_block(keep);
            rep.push_back({"fock",
                           "number-state commutator [" + nm[static_cast<size_t>(i)] + "," +
                               nm[static_cast<size_t>(j)] + "]",
                           "rho(X)rho(Y) - rho(Y)rho(X) = rho([X,Y]) on the guarded block",
                           res.is_zero(), static_cast<long>(res.term_count()), now_ms() - t0,
                           ""});
        }
    return rep;
}

Report fock_route_check(int order, int dim) {
    const auto& nm = Presentation::get(AlgebraId::h6_jordanian, order).names();
    Report rep;
    for (int s = 0; s < 6; ++s) {
        long t0 = now_ms();
        RadMatrix a = normalize(generator_matrix(s, order, dim));
        RadMatrix b = closed_form_matrix(s, order, dim);
        bool ok = a == b;
        std::string residual;
        long bad = 0;
        if (!ok) {
            for (int i = 0; i < dim && residual.empty(); ++i)
                for (int j = 0; j < dim; ++j)
                    if (a.at(i, j) != b.at(i, j)) {
                        ++bad;
                        residual = "(" + std::to_string(i) + "," + std::to_string(j) +
                                   "): " + a.entry_str(i, j) + " vs " + b.entry_str(i, j);
                        break;
                    }
        }
        rep.push_back({"fock", "matrix routes agree for " + nm[static_cast<size_t>(s)],
                       "boson-word action = closed-form action", ok, bad, now_ms() - t0,
                       residual});
    }
    return rep;
}

Report fock_reference_check(int order) {
    const auto& nm = Presentation::get(AlgebraId::h6_jordanian, order).names();
    Report rep;
    for (int s = 0; s < 6; ++s) {
        long t0 = now_ms();
        RadMatrix want = reference_block(s, order);
        RadMatrix got = normalize(generator_matrix(s, order, 5));
        RadMatrix alt = closed_form_matrix(s, order, 5);
        bool ok = got == want && alt == want;
        std::string residual;
        if (!ok)
            for (int i = 0; i < 5 && residual.empty(); ++i)
                for (int j = 0; j < 5; ++j)
                    if (got.at(i, j) != want.at(i, j) || alt.at(i, j) != want.at(i, j)) {
                        residual = "(" + std::to_string(i) + "," + std::to_string(j) +
                                   "): got " + got.entry_str(i, j) + ", want " +
                                   want.entry_str(i, j);
                        break;
                    }
        rep.push_back({"fock", "reference 5x5 block for " + nm[static_cast<size_t>(s)],
                       "printed number-state matrices, both routes", ok, ok ? 0 : 1,
                       now_ms() - t0, residual});
    }
    return rep;
}

Report fock_classical_check(int dim) {
    const auto& nm = Presentation::get(AlgebraId::h6_jordanian, 0).names();
    Report rep;
    for (int s = 0; s < 6; ++s) {
        long t0 = now_ms();
        RadMatrix want(0, dim);
        for (int m = 0; m < dim; ++m) {
            switch (s) {
            case kAp:
                if (m + 1 < dim) want.set(m + 1, m, 0, Radical(1, m + 1));
                break;
            case kAm:
                if (m >= 1) want.set(m - 1, m, 0, Radical(1, m));
                break;
            case kBp:
                if (m + 2 < dim) want.set(m + 2, m, 0, Radical(1, Int(m + 1) * (m + 2)));
                break;
            case kBm:
                if (m >= 2) want.set(m - 2, m, 0, Radical(1, Int(m) * (m - 1)));
                break;
            case kN:
                if (m >= 1) want.set(m, m, 0, Radical(m, 1));
                break;
            case kM:
                want.set(m, m, 0, Radical(1, 1));
                break;
            }
        }
        RadMatrix got = normalize(generator_matrix(s, 0, dim));
        rep.push_back({"classical", "undeformed ladder matrix for " + nm[static_cast<size_t>(s)],
                       "z = 0 number-state action", got == want, got == want ? 0 : 1,
                       now_ms() - t0, ""});
    }
    return rep;
}

} // namespace jordeform
