#pragma once

// Realizations on a truncated polynomial space in alpha: the differential
// realization of the primary deformation (A+ acts by multiplication) and the
// differential-difference realization of the dual one (A- acts by d/dalpha),
// plus the discrete-derivative identity and the quantum involution that
// exchanges the two h6 presentations.

#include "jordeform/ncalg.hpp"
#include "jordeform/report.hpp"

#include <vector>

namespace jordeform {

// operator on polynomials of degree <= deg; column j holds the image of
// alpha^j in the monomial basis, entries are exact ZSeries
class PolyOperator {
public:
    PolyOperator(int order, int deg)
        : order_(order), deg_(deg),
          col_(static_cast<size_t>(deg) + 1,
               std::vector<ZSeries>(static_cast<size_t>(deg) + 1, ZSeries(order))) {}

    static PolyOperator identity(int order, int deg);
    static PolyOperator mul_alpha(int order, int deg);
    static PolyOperator d_alpha(int order, int deg);
    // multiplication by sum_b c_b alpha^b; rows past deg are dropped
    static PolyOperator mul_poly(int order, int deg,
                                 const std::vector<std::pair<int, ZSeries>>& poly);
    // sum_k w_k d^k with w_k given densely from k = 0
    static PolyOperator shift_series(int order, int deg, const std::vector<ZSeries>& w);

    int order() const { return order_; }
    int degree() const { return deg_; }
    const ZSeries& at(int i, int j) const {
        return col_[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    ZSeries& at(int i, int j) { return col_[static_cast<size_t>(j)][static_cast<size_t>(i)]; }

    PolyOperator operator*(const PolyOperator& o) const; // composition, this after o
    PolyOperator& operator+=(const PolyOperator& o);
    PolyOperator& operator-=(const PolyOperator& o);
    friend PolyOperator operator-(PolyOperator a, const PolyOperator& b) { return a -= b; }
    PolyOperator scaled(const ZSeries& c) const;

    bool columns_zero(int keep) const; // all entries in columns < keep vanish
    long column_term_count(int keep) const;
    bool operator==(const PolyOperator& o) const { return col_ == o.col_; }

private:
    int order_;
    int deg_;
    std::vector<std::vector<ZSeries>> col_;
};

// one generator in the chosen realization; primary for h6_jordanian, dual
// (difference-operator) for h6_jordanian_dual
PolyOperator fb_realize(AlgebraId id, int slot, int order, int deg);

// (e^{z d} - 1)/z alpha^n = ((alpha+z)^n - alpha^n)/z as exact polynomials
Report discrete_derivative_check(int deg);

// commutator table of the matching presentation on degree-guarded columns
Report fb_rep_check(AlgebraId id, int order, int deg);

// primary FB matrices equal the number-state matrices entry for entry
Report fb_fock_agreement_check(int order, int deg, int dim);

// the generator swap with z -> -z carrying one h6 presentation to the other,
// applied monomial-wise and renormalized in the target presentation
Element h6_automorphism(const Element& a, const Presentation& to);

Report automorphism_transport_check(int order);

} // namespace jordeform
