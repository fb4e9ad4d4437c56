#pragma once

// First-order layer: the classical Lie algebras underneath the deformations,
// wedge tensors, classical r-matrices, cocommutators, and the Lie bialgebra
// checks (Jacobi, classical Yang-Baxter via the Schouten bracket, co-Jacobi,
// cocycle). Everything here is z-homogeneous, so coefficients are plain
// rationals: r and every cocommutator carry one implicit power of z.

#include "jordeform/ncalg.hpp"
#include "jordeform/report.hpp"

#include <array>
#include <map>

namespace jordeform {

// coefficient vector over the six generator slots
using LinComb = std::array<Rational, 6>;

LinComb lincomb_gen(int slot);

// Classical limits share one table between the two h6 presentations, so this
// is keyed by the underlying Lie algebra, not the deformation.
class LieAlgebra {
public:
    static const LieAlgebra& h6();
    static const LieAlgebra& schrodinger();
    static const LieAlgebra& get(AlgebraId id);

    const std::array<std::string, 6>& names() const { return names_; }
    const LinComb& bracket(int i, int j) const {
        return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    LinComb bracket(const LinComb& x, const LinComb& y) const;
    std::string label() const { return label_; }

private:
    LieAlgebra(std::string label, std::array<std::string, 6> names);
    void set(int i, int j, LinComb v); // stores both halves

    std::string label_;
    std::array<std::string, 6> names_;
    std::array<std::array<LinComb, 6>, 6> table_{};
};

// Antisymmetric rank-2 tensor, stored on keys i < j. add() folds the sign in;
// diagonal contributions must cancel, which accumulate() verifies.
class Wedge2 {
public:
    void add(int i, int j, const Rational& c);
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Wedge2& operator+=(const Wedge2& o);
    Wedge2& operator-=(const Wedge2& o);
    friend Wedge2 operator+(Wedge2 a, const Wedge2& b) { return a += b; }
    friend Wedge2 operator-(Wedge2 a, const Wedge2& b) { return a -= b; }
    Wedge2 scaled(const Rational& q) const;
    bool operator==(const Wedge2& o) const { return terms_ == o.terms_; }

    // raw 6x6 antisymmetric matrix expansion
    std::array<std::array<Rational, 6>, 6> matrix() const;

    std::string str(const std::array<std::string, 6>& names) const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

// general rank-3 tensor for the Schouten bracket and co-Jacobi residuals
using Cubic = std::map<std::array<int, 3>, Rational>;

std::string cubic_str(const Cubic& t, const std::array<std::string, 6>& names);

// the r-matrix whose coboundary generates the deformation, one implicit z
Wedge2 classical_r(AlgebraId id);

// delta(X) = [X ox 1 + 1 ox X, r]
Wedge2 cocommutator_from_r(const LieAlgebra& L, const Wedge2& r, const LinComb& x);
Wedge2 cocommutator_from_r(const LieAlgebra& L, const Wedge2& r, int slot);

// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]
Cubic schouten(const LieAlgebra& L, const Wedge2& r);

Report jacobi_check(const LieAlgebra& L);
Report cybe_check(const LieAlgebra& L, const Wedge2& r, const std::string& label);
Report cojacobi_and_cocycle_check(const LieAlgebra& L, const Wedge2& r,
                                  const std::string& label);

// the first-order tables typed out independently, keyed by generator slot
std::array<Wedge2, 6> expected_cocommutators(AlgebraId id);

// r-generated table equals the typed table, slot by slot
Report cocommutator_table_check(AlgebraId id);
// the involution (with its z sign) carries the primary typed table to the
// dual one
Report automorphism_cocommutator_check();
// the generator identification carries brackets, the typed table, and r from
// h6 to the Schrodinger side
Report iso_cocommutator_check();

// generators of the span close under the bracket
bool lie_closed(const LieAlgebra& L, const std::vector<int>& slots);

// linear map given by generator images
using GenMap = std::array<LinComb, 6>;

LinComb transport(const GenMap& f, const LinComb& x);
Wedge2 transport(const GenMap& f, const Wedge2& w);

// involution of h6: swaps the raising and lowering pairs, negates everything,
// and is paired with z -> -z (an extra overall sign on wedge coefficients,
// which all carry z^1; apply it via transport(...).scaled(-1))
GenMap h6_automorphism_map();

// h6 -> Schrodinger generator identification and its inverse
GenMap iso_forward_map();
GenMap iso_backward_map();

} // namespace jordeform
