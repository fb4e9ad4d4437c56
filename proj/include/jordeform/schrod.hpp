#pragma once

// The quantum Schrodinger algebra as a transported copy of the primary h6
// deformation: generator identification at full quantum level, transport of
// elements and tensors, agreement with the independently tabulated
// Schrodinger Hopf structure, and the subalgebra survey.

#include "jordeform/hopf.hpp"
#include "jordeform/report.hpp"

namespace jordeform {

class IsoMap {
public:
    explicit IsoMap(int order);

    const Presentation& source() const { return h6_; }
    const Presentation& target() const { return s_; }

    // substitute generator images monomial-wise, normal order in the target
    Element forward(const Element& a) const;
    Element inverse(const Element& a) const;
    Tensor2 forward(const Tensor2& t) const;

private:
    const Presentation& h6_;
    const Presentation& s_;
    std::array<Element, 6> fwd_;
    std::array<Element, 6> inv_;
};

// transported commutators, coproducts, antipodes, counits, and R-matrix all
// agree with the typed Schrodinger tables
Report check_iso_is_hopf_morphism(int order);

// Hopf closure of the named generator subsets on both sides, plus classical
// Lie closure of the undeformed subalgebras
Report subalgebra_survey(int order);

} // namespace jordeform
