#pragma once

// Tensor square/cube over the six-generator algebra, the Hopf structure
// tables (coproduct, counit, antipode), and the executable checks: the four
// Hopf axioms, the universal R-matrix intertwining property, the quantum
// Yang-Baxter equation, triangularity, and Hopf subalgebra closure.

#include "jordeform/ncalg.hpp"
#include "jordeform/report.hpp"

#include <array>
#include <vector>

namespace jordeform {

// slot-wise tensor product of rank R over one presentation; slots hold
// normal-ordered monomials, the coefficient is a shared ZSeries
template <int R>
class TensorElement {
public:
    using Key = std::array<Monomial, R>;

    explicit TensorElement(int order) : order_(order) {}
    static TensorElement unit(int order) {
        TensorElement t(order);
        t.add(Key{}, ZSeries::one(order));
        return t;
    }

    int order() const { return order_; }
    const std::map<Key, ZSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add(const Key& k, const ZSeries& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement scaled(const ZSeries& c) const {
        TensorElement r(order_);
        for (const auto& [k, t] : terms_) r.add(k, t * c);
        return r;
    }

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    int order_;
    std::map<Key, ZSeries> terms_;
};

using Tensor2 = TensorElement<2>;
using Tensor3 = TensorElement<3>;

template <int R>
TensorElement<R> tensor_multiply(const TensorElement<R>& a, const TensorElement<R>& b,
                                 const Presentation& p);

Tensor2 flip(const Tensor2& t);

// embed a rank-2 tensor into chosen slots of the cube (0-based slot indices)
Tensor3 embed(const Tensor2& t, int slot_a, int slot_b, const Presentation& p);

std::string tensor_str(const Tensor2& t, const Presentation& p);
std::string tensor_str(const Tensor3& t, const Presentation& p);

// Hopf structure tables over one presentation. Counits of all six generators
// vanish; coproducts and antipodes are stored fully expanded.
class HopfStructure {
public:
    static const HopfStructure& get(AlgebraId id, int order);

    const Presentation& presentation() const { return p_; }
    const Tensor2& coproduct_gen(int slot) const { return cop_[static_cast<size_t>(slot)]; }
    const Element& antipode_gen(int slot) const { return antip_[static_cast<size_t>(slot)]; }
    ZSeries counit_gen(int slot) const;

    Tensor2 coproduct(const Element& a) const;
    Element antipode(const Element& a) const;
    ZSeries counit(const Element& a) const;

private:
    friend class HopfRegistry;
    explicit HopfStructure(const Presentation& p);

    const Presentation& p_;
    std::vector<Tensor2> cop_;
    std::vector<Element> antip_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Monomial, Tensor2> cop_cache_;
    mutable std::map<Monomial, Element> antip_cache_;

    Tensor2 coproduct_mono(const Monomial& m) const;
    Element antipode_mono(const Monomial& m) const;
};

Report check_hopf_axioms(const HopfStructure& h);
Tensor2 build_universal_R(const HopfStructure& h);
Report check_R_intertwining(const HopfStructure& h, const Tensor2& R);
Report check_qybe(const Tensor2& R, const Presentation& p);
Report check_triangularity(const Tensor2& R, const Presentation& p);
bool check_hopf_subalgebra(const HopfStructure& h, const std::vector<int>& slots);

} // namespace jordeform
