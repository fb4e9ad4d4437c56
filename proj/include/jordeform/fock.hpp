#pragma once

// Number-state layer for the primary deformation: the deformed one-boson
// realization, exact matrices on the span of e_m = a+^m|0>, the normalized
// presentation with radical entries, and the guarded representation checks.
//
// Matrix convention: entry (i,j) is the coefficient of state i in the image
// of state j (states are columns), so a product of matrices is read in the
// same left-to-right order as the operator word it represents.

#include "jordeform/ncalg.hpp"
#include "jordeform/report.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace jordeform {

// normal-ordered boson polynomial, sum of a+^p a-^q with ZSeries coefficients
class BosonPoly {
public:
    explicit BosonPoly(int order) : order_(order) {}
    static BosonPoly one(int order) {
        BosonPoly b(order);
        b.add(0, 0, ZSeries::one(order));
        return b;
    }

    int order() const { return order_; }
    const std::map<std::pair<int, int>, ZSeries>& terms() const { return terms_; }

    void add(int p, int q, const ZSeries& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace({p, q}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    BosonPoly& operator+=(const BosonPoly& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }

    // reorders with [a-,a+] = 1:
    // a-^q a+^r = sum_k k! C(q,k) C(r,k) a+^{r-k} a-^{q-k}
    BosonPoly operator*(const BosonPoly& o) const;

private:
    int order_;
    std::map<std::pair<int, int>, ZSeries> terms_;
};

// the deformed boson realization of the primary h6 generators
BosonPoly realize_boson(int slot, int order);

// exact D x D matrix over the unnormalized states, sparse ZSeries entries
class FockMatrix {
public:
    FockMatrix(int order, int dim) : order_(order), dim_(dim) {}
    static FockMatrix identity(int order, int dim);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::map<std::pair<int, int>, ZSeries>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }
    size_t term_count() const { return e_.size(); }

    void add(int i, int j, const ZSeries& c) {
        if (c.is_zero() || i < 0 || j < 0 || i >= dim_ || j >= dim_) return;
        auto [it, fresh] = e_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    ZSeries at(int i, int j) const {
        auto it = e_.find({i, j});
        return it == e_.end() ? ZSeries(order_) : it->second;
    }

    FockMatrix& operator+=(const FockMatrix& o) {
        for (const auto& [k, c] : o.e_) add(k.first, k.second, c);
        return *this;
    }
    FockMatrix& operator-=(const FockMatrix& o) {
        for (const auto& [k, c] : o.e_) add(k.first, k.second, -c);
        return *this;
    }
    friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
    friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
    FockMatrix operator*(const FockMatrix& o) const;
    FockMatrix scaled(const ZSeries& c) const {
        FockMatrix r(order_, dim_);
        for (const auto& [k, t] : e_) r.add(k.first, k.second, t * c);
        return r;
    }
    // rows and columns below keep only
    FockMatrix principal_block(int keep) const {
        FockMatrix r(order_, dim_);
        for (const auto& [k, c] : e_)
            if (k.first < keep && k.second < keep) r.e_.emplace(k, c);
        return r;
    }

    bool operator==(const FockMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

private:
    int order_;
    int dim_;
    std::map<std::pair<int, int>, ZSeries> e_;
};

FockMatrix boson_matrix(const BosonPoly& b, int dim);
FockMatrix generator_matrix(int slot, int order, int dim);
// PBW monomials mapped through matrix products of the six generator matrices
FockMatrix element_matrix(const Element& a, const std::array<FockMatrix, 6>& gen);

// matrix over the normalized states |m> = e_m / sqrt(m!); each entry is a
// z-polynomial with Radical coefficients, stored as coefficient-per-z-power
class RadMatrix {
public:
    RadMatrix(int order, int dim) : order_(order), dim_(dim) {}

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::map<std::pair<int, int>, std::vector<Radical>>& entries() const { return e_; }

    void set(int i, int j, int zpow, const Radical& r);
    std::vector<Radical> at(int i, int j) const;

    bool operator==(const RadMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    std::string entry_str(int i, int j) const;

private:
    int order_;
    int dim_;
    std::map<std::pair<int, int>, std::vector<Radical>> e_;
};

// basis change n_ij = u_ij sqrt(i!)/sqrt(j!)
RadMatrix normalize(const FockMatrix& m);
// the same matrices from the closed-form action on |m>, no boson words
RadMatrix closed_form_matrix(int slot, int order, int dim);
// hard-coded leading 5x5 blocks of all six matrices
RadMatrix reference_block(int slot, int order);

// commutator table on the guarded principal block, both routes
Report fock_rep_check(int order, int dim);
// boson route vs closed-form route, entry by entry
Report fock_route_check(int order, int dim);
// both routes against the hard-coded reference blocks
Report fock_reference_check(int order);
// z = 0 ladder form
Report fock_classical_check(int dim);

} // namespace jordeform
