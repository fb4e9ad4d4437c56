#include "jordeform/ncalg.hpp"

#include <map>
#include <mutex>

// The three presentations, hard-coded in PBW-normal form. Slot layout is
// (lowering-2, lowering-1, diagonal, central, raising-1, raising-2) so every
// table right-hand side is normal-ordered as written here. The hand-ordered
// entries are cross-checked downstream in three independent ways: the engine
// Jacobi/associativity suite, the number-state representation, and the
// presentation-to-presentation transports.

namespace jordeform {

namespace {

// slot indices shared by both generator sets
constexpr int S0 = 0, S1 = 1, S2 = 2, S3 = 3, S4 = 4, S5 = 5;

Monomial mono(std::initializer_list<std::pair<int, int>> fs) {
    Monomial m;
    for (auto [s, e] : fs) m.e[static_cast<size_t>(s)] = static_cast<uint8_t>(e);
    return m;
}

} // namespace

class PresentationRegistry {
public:
    static const Presentation& get(AlgebraId id, int order) {
        static std::mutex mu;
        static std::map<std::pair<AlgebraId, int>, std::unique_ptr<Presentation>> store;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(id, order);
        auto it = store.find(key);
        if (it == store.end()) it = store.emplace(key, build(id, order)).first;
        return *it->second;
    }

private:
    static std::unique_ptr<Presentation> build(AlgebraId id, int order);
};

const Presentation& Presentation::get(AlgebraId id, int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    return PresentationRegistry::get(id, order);
}

std::unique_ptr<Presentation> PresentationRegistry::build(AlgebraId id, int ord) {
    auto p = std::unique_ptr<Presentation>(new Presentation(id, ord));
    auto z = [ord](int k, const Rational& q) { return ZSeries::monomial(ord, k, q); };
    auto one_term = [ord](const Monomial& m, const ZSeries& c) { return Element(ord, m, c); };

    if (id == AlgebraId::h6_jordanian || id == AlgebraId::h6_jordanian_dual) {
        p->names_ = {"B-", "A-", "N", "M", "A+", "B+"};
        const int Bm = S0, Am = S1, N = S2, M = S3, Ap = S4, Bp = S5;

        if (id == AlgebraId::h6_jordanian) {
            // exponential tails live on the raising generator A+
            // [A-,B-] = -z A-^2
            p->set_bracket(Am, Bm, one_term(mono({{Am, 2}}), z(1, -1)));
            // [N,B-] = -2B- - z A-N
            {
                Element e(ord);
                e.add(mono({{Bm, 1}}), z(0, -2));
                e.add(mono({{Am, 1}, {N, 1}}), z(1, -1));
                p->set_bracket(N, Bm, e);
            }
            // [N,A-] = -A-
            p->set_bracket(N, Am, one_term(mono({{Am, 1}}), z(0, -1)));
            // [A+,B-] = -(1+e^{zA+})A- + z M N e^{zA+} + z M e^{zA+}
            {
                Element e(ord);
                e.add(mono({{Am, 1}}), z(0, -2));
                Int kf = 1;
                for (int k = 1; k <= ord; ++k) {
                    kf *= k;
                    e.add(mono({{Am, 1}, {Ap, k}}), z(k, Rational(-1, kf)));
                }
                kf = 1;
                for (int k = 0; k + 1 <= ord; ++k) {
                    if (k > 0) kf *= k;
                    e.add(mono({{N, 1}, {M, 1}, {Ap, k}}), z(k + 1, Rational(1, kf)));
                    e.add(mono({{M, 1}, {Ap, k}}), z(k + 1, Rational(1, kf)));
                }
                p->set_bracket(Ap, Bm, e);
            }
            // [A+,A-] = -M e^{zA+}
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 0; k <= ord; ++k) {
                    if (k > 0) kf *= k;
                    e.add(mono({{M, 1}, {Ap, k}}), z(k, Rational(-1, kf)));
                }
                p->set_bracket(Ap, Am, e);
            }
            // [A+,N] = -(e^{zA+}-1)/z
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 1; k <= ord + 1; ++k) {
                    kf *= k;
                    e.add(mono({{Ap, k}}), z(k - 1, Rational(-1, kf)));
                }
                p->set_bracket(Ap, N, e);
            }
            // [B+,B-] = -2N(1+e^{-zA+}) - 2(1-e^{-zA+}) - 2M + 2z A-B+
            {
                Element e(ord);
                e.add(mono({{N, 1}}), z(0, -4));
                e.add(mono({{M, 1}}), z(0, -2));
                e.add(mono({{Am, 1}, {Bp, 1}}), z(1, 2));
                Int kf = 1;
                for (int k = 1; k <= ord; ++k) {
                    kf *= k;
                    const Rational sgn = (k % 2) ? -1 : 1;
                    e.add(mono({{N, 1}, {Ap, k}}), z(k, -2 * sgn / kf));
                    e.add(mono({{Ap, k}}), z(k, 2 * sgn / kf));
                }
                p->set_bracket(Bp, Bm, e);
            }
            // [B+,A-] = -2(1-e^{-zA+})/z
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 1; k <= ord + 1; ++k) {
                    kf *= k;
                    const Rational sgn = (k % 2) ? -1 : 1;
                    e.add(mono({{Ap, k}}), z(k - 1, 2 * sgn / kf));
                }
                p->set_bracket(Bp, Am, e);
            }
            // [B+,N] = -2B+
            p->set_bracket(Bp, N, one_term(mono({{Bp, 1}}), z(0, -2)));
        } else {
            // dual deformation: tails live on the lowering generator A-
            // [A-,B-] = 0 (omitted)
            // [N,B-] = -2B-
            p->set_bracket(N, Bm, one_term(mono({{Bm, 1}}), z(0, -2)));
            // [N,A-] = -(e^{zA-}-1)/z
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 1; k <= ord + 1; ++k) {
                    kf *= k;
                    e.add(mono({{Am, k}}), z(k - 1, Rational(-1, kf)));
                }
                p->set_bracket(N, Am, e);
            }
            // [A+,B-] = -2(1-e^{-zA-})/z
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 1; k <= ord + 1; ++k) {
                    kf *= k;
                    const Rational sgn = (k % 2) ? -1 : 1;
                    e.add(mono({{Am, k}}), z(k - 1, 2 * sgn / kf));
                }
                p->set_bracket(Ap, Bm, e);
            }
            // [A+,A-] = -M e^{zA-}
            {
                Element e(ord);
                Int kf = 1;
                for (int k = 0; k <= ord; ++k) {
                    if (k > 0) kf *= k;
                    e.add(mono({{Am, k}, {M, 1}}), z(k, Rational(-1, kf)));
                }
                p->set_bracket(Ap, Am, e);
            }
            // [A+,N] = -A+
            p->set_bracket(Ap, N, one_term(mono({{Ap, 1}}), z(0, -1)));
            // [B+,B-] = -2(1+e^{-zA-})N - 4(1-e^{-zA-}) - 2M + 2z B-A+
            {
                Element e(ord);
                e.add(mono({{N, 1}}), z(0, -4));
                e.add(mono({{M, 1}}), z(0, -2));
                e.add(mono({{Bm, 1}, {Ap, 1}}), z(1, 2));
                Int kf = 1;
                for (int k = 1; k <= ord; ++k) {
                    kf *= k;
                    const Rational sgn = (k % 2) ? -1 : 1;
                    e.add(mono({{Am, k}, {N, 1}}), z(k, -2 * sgn / kf));
                    e.add(mono({{Am, k}}), z(k, 4 * sgn / kf));
                }
                p->set_bracket(Bp, Bm, e);
            }
            // [B+,A-] = -(1+e^{zA-})A+ + z M N e^{zA-}
            {
                Element e(ord);
                e.add(mono({{Ap, 1}}), z(0, -2));
                Int kf = 1;
                for (int k = 1; k <= ord; ++k) {
                    kf *= k;
                    e.add(mono({{Am, k}, {Ap, 1}}), z(k, Rational(-1, kf)));
                }
                kf = 1;
                for (int k = 0; k + 1 <= ord; ++k) {
                    if (k > 0) kf *= k;
                    e.add(mono({{Am, k}, {N, 1}, {M, 1}}), z(k + 1, Rational(1, kf)));
                }
                p->set_bracket(Bp, Am, e);
            }
            // [B+,N] = -2B+ - z NA+ + z A+
            {
                Element e(ord);
                e.add(mono({{Bp, 1}}), z(0, -2));
                e.add(mono({{N, 1}, {Ap, 1}}), z(1, -1));
                e.add(mono({{Ap, 1}}), z(1, 1));
                p->set_bracket(Bp, N, e);
            }
            // [B+,A+] = -z A+^2
            p->set_bracket(Bp, Ap, one_term(mono({{Ap, 2}}), z(1, -1)));
        }
        return p;
    }

    // schrodinger_jordanian
    p->names_ = {"C", "K", "D", "M", "P", "H"};
    const int C = S0, K = S1, D = S2, M = S3, P = S4, H = S5;

    // [K,C] = -(z/2) K^2
    p->set_bracket(K, C, one_term(mono({{K, 2}}), z(1, Rational(-1, 2))));
    // [D,C] = 2C - (z/2) KD - (z/4) KM
    {
        Element e(ord);
        e.add(mono({{C, 1}}), z(0, 2));
        e.add(mono({{K, 1}, {D, 1}}), z(1, Rational(-1, 2)));
        e.add(mono({{K, 1}, {M, 1}}), z(1, Rational(-1, 4)));
        p->set_bracket(D, C, e);
    }
    // [D,K] = K
    p->set_bracket(D, K, one_term(mono({{K, 1}}), z(0, 1)));
    // [P,C] = -(1/2)(1+e^{zP})K expanded with e^{zP} pushed right:
    //         -(1/2)K(1+e^{zP}) - (z/2) DM e^{zP} + (z/2) M e^{zP} - (z/4) M^2 e^{zP}
    {
        Element e(ord);
        e.add(mono({{K, 1}}), z(0, -1));
        Int kf = 1;
        for (int k = 1; k <= ord; ++k) {
            kf *= k;
            e.add(mono({{K, 1}, {P, k}}), z(k, Rational(-1, 2 * kf)));
        }
        kf = 1;
        for (int k = 0; k + 1 <= ord; ++k) {
            if (k > 0) kf *= k;
            e.add(mono({{D, 1}, {M, 1}, {P, k}}), z(k + 1, Rational(-1, 2 * kf)));
            e.add(mono({{M, 1}, {P, k}}), z(k + 1, Rational(1, 2 * kf)));
            e.add(mono({{M, 2}, {P, k}}), z(k + 1, Rational(-1, 4 * kf)));
        }
        p->set_bracket(P, C, e);
    }
    // [P,K] = -M e^{zP}
    {
        Element e(ord);
        Int kf = 1;
        for (int k = 0; k <= ord; ++k) {
            if (k > 0) kf *= k;
            e.add(mono({{M, 1}, {P, k}}), z(k, Rational(-1, kf)));
        }
        p->set_bracket(P, K, e);
    }
    // [P,D] = (e^{zP}-1)/z
    {
        Element e(ord);
        Int kf = 1;
        for (int k = 1; k <= ord + 1; ++k) {
            kf *= k;
            e.add(mono({{P, k}}), z(k - 1, Rational(1, kf)));
        }
        p->set_bracket(P, D, e);
    }
    // [H,C] = (1/2)D(1+e^{-zP}) + (1/2)(e^{-zP}-1) - (1/4)M(1-e^{-zP}) + z KH
    {
        Element e(ord);
        e.add(mono({{D, 1}}), z(0, 1));
        e.add(mono({{K, 1}, {H, 1}}), z(1, 1));
        Int kf = 1;
        for (int k = 1; k <= ord; ++k) {
            kf *= k;
            const Rational sgn = (k % 2) ? -1 : 1;
            e.add(mono({{D, 1}, {P, k}}), z(k, sgn / (2 * kf)));
            e.add(mono({{P, k}}), z(k, sgn / (2 * kf)));
            e.add(mono({{M, 1}, {P, k}}), z(k, sgn / (4 * kf)));
        }
        p->set_bracket(H, C, e);
    }
    // [H,K] = -(1-e^{-zP})/z
    {
        Element e(ord);
        Int kf = 1;
        for (int k = 1; k <= ord + 1; ++k) {
            kf *= k;
            const Rational sgn = (k % 2) ? -1 : 1;
            e.add(mono({{P, k}}), z(k - 1, sgn / kf));
        }
        p->set_bracket(H, K, e);
    }
    // [H,D] = 2H
    p->set_bracket(H, D, one_term(mono({{H, 1}}), z(0, 2)));
    return p;
}

} // namespace jordeform
