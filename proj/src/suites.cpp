#include "jordeform/suites.hpp"

#include "jordeform/fb.hpp"
#include "jordeform/fock.hpp"
#include "jordeform/hopf.hpp"
#include "jordeform/liebialg.hpp"
#include "jordeform/ncalg.hpp"
#include "jordeform/schrod.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace jordeform {

namespace {

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::vector<AlgebraId> selected(const std::string& algebra) {
    if (algebra == "all")
        return {AlgebraId::h6_jordanian, AlgebraId::h6_jordanian_dual,
                AlgebraId::schrodinger_jordanian};
    return {algebra_from_name(algebra)};
}

bool covers(const RunConfig& cfg, const char* name) {
    return cfg.algebra == "all" || cfg.algebra == name;
}

// The antisymmetrized coproduct has no z^0 part and its z^1 part must be the
// typed cocommutator, with every surviving slot a single generator. This is
// a first-order statement, so it runs at truncation max(order, 1).
CheckRecord first_order_consistency(AlgebraId id, int order) {
    long t0 = now_ms();
    const HopfStructure& h = HopfStructure::get(id, std::max(order, 1));
    const auto& names = h.presentation().names();
    std::array<Wedge2, 6> expected = expected_cocommutators(id);
    long bad = 0;
    std::string residual;
    for (int g = 0; g < 6; ++g) {
        Tensor2 d = h.coproduct_gen(g) - flip(h.coproduct_gen(g));
        Wedge2 got;
        bool shape_ok = true;
        for (const auto& [k, c] : d.terms()) {
            if (c[1] == 0) continue;
            if (k[0].degree() != 1 || k[1].degree() != 1) {
                shape_ok = false;
                break;
            }
            int a = 0, b = 0;
            for (int s = 0; s < 6; ++s) {
                if (k[0].e[static_cast<size_t>(s)]) a = s;
                if (k[1].e[static_cast<size_t>(s)]) b = s;
            }
            if (a < b) got.add(a, b, c[1]);
        }
        if (!shape_ok || !(got == expected[g])) {
            ++bad;
            if (residual.empty())
                residual = "delta(" + names[static_cast<size_t>(g)] +
                           ") came out as " + (shape_ok ? got.str(names) : "a non-wedge");
        }
    }
    return {"bialgebra", "coproduct first order is the cocommutator, " + algebra_name(id),
            "(Delta - flip Delta)(X) = z delta(X) + O(z^2)", bad == 0, bad, now_ms() - t0,
            residual};
}

Report classical_suite(const RunConfig& cfg) {
    Report rep;
    std::vector<AlgebraId> ids = selected(cfg.algebra);
    std::vector<const LieAlgebra*> seen;
    for (AlgebraId id : ids) {
        const LieAlgebra& L = LieAlgebra::get(id);
        if (std::find(seen.begin(), seen.end(), &L) != seen.end()) continue;
        seen.push_back(&L);
        append(rep, jacobi_check(L));
    }
    for (AlgebraId id : ids) {
        const Presentation& p = Presentation::get(id, cfg.order);
        const LieAlgebra& L = LieAlgebra::get(id);
        long t0 = now_ms();
        long bad = 0;
        std::string residual;
        for (int i = 1; i < 6; ++i)
            for (int j = 0; j < i; ++j) {
                Element want(cfg.order);
                const LinComb& v = L.bracket(i, j);
                for (int s = 0; s < 6; ++s)
                    if (v[static_cast<size_t>(s)] != 0)
                        want += p.gen(s).scaled(v[static_cast<size_t>(s)]);
                Element res = p.bracket(i, j).classical_limit() - want;
                if (!res.is_zero()) {
                    bad += static_cast<long>(res.term_count());
                    if (residual.empty())
                        residual = "[" + p.names()[static_cast<size_t>(i)] + "," +
                                   p.names()[static_cast<size_t>(j)] +
                                   "]: " + p.element_str(res);
                }
            }
        rep.push_back({"classical", "deformed table at z = 0, " + algebra_name(id),
                       "[X,Y] at z = 0 recovers the Lie bracket", bad == 0, bad,
                       now_ms() - t0, residual});
    }
    if (covers(cfg, "h6")) append(rep, fock_classical_check(cfg.fock_dim));
    if (covers(cfg, "h6") || covers(cfg, "h6-dual")) {
        long t0 = now_ms();
        bool ok = lie_closed(LieAlgebra::h6(), {4, 1, 3}) &&
                  lie_closed(LieAlgebra::h6(), {1, 2, 3, 4});
        rep.push_back({"classical", "oscillator subalgebra chain",
                       "span{A+,A-,M} and span{N,A+,A-,M} close under the bracket", ok,
                       ok ? 0 : 1, now_ms() - t0, ""});
    }
    return rep;
}

Report bialgebra_suite(const RunConfig& cfg) {
    Report rep;
    for (AlgebraId id : selected(cfg.algebra)) {
        const LieAlgebra& L = LieAlgebra::get(id);
        Wedge2 r = classical_r(id);
        std::string label = algebra_name(id);
        append(rep, cybe_check(L, r, label));
        append(rep, cojacobi_and_cocycle_check(L, r, label));
        append(rep, cocommutator_table_check(id));
        rep.push_back(first_order_consistency(id, cfg.order));
    }
    if (cfg.algebra == "all") append(rep, automorphism_cocommutator_check());
    return rep;
}

Report hopf_suite(const RunConfig& cfg) {
    Report rep;
    for (AlgebraId id : selected(cfg.algebra))
        append(rep, check_hopf_axioms(HopfStructure::get(id, cfg.order)));
    return rep;
}

Report rmatrix_suite(const RunConfig& cfg) {
    Report rep;
    for (AlgebraId id : selected(cfg.algebra)) {
        const HopfStructure& h = HopfStructure::get(id, cfg.order);
        Tensor2 R = build_universal_R(h);
        append(rep, check_R_intertwining(h, R));
        append(rep, check_qybe(R, h.presentation()));
        append(rep, check_triangularity(R, h.presentation()));
    }
    return rep;
}

Report fock_suite(const RunConfig& cfg) {
    Report rep;
    if (!covers(cfg, "h6")) return rep;
    append(rep, fock_rep_check(cfg.order, cfg.fock_dim));
    append(rep, fock_route_check(cfg.order, cfg.fock_dim));
    append(rep, fock_reference_check(cfg.order));
    return rep;
}

Report fb_suite(const RunConfig& cfg) {
    Report rep;
    bool primary = covers(cfg, "h6");
    bool dual = covers(cfg, "h6-dual");
    if (primary || dual) append(rep, discrete_derivative_check(cfg.fb_degree));
    if (primary) {
        append(rep, fb_rep_check(AlgebraId::h6_jordanian, cfg.order, cfg.fb_degree));
        append(rep, fb_fock_agreement_check(cfg.order, cfg.fb_degree, cfg.fock_dim));
    }
    if (dual) append(rep, fb_rep_check(AlgebraId::h6_jordanian_dual, cfg.order, cfg.fb_degree));
    return rep;
}

// the isomorphism layer always spans all three presentations, so the algebra
// filter does not apply here
Report iso_suite(const RunConfig& cfg) {
    Report rep;
    append(rep, automorphism_transport_check(cfg.order));
    append(rep, check_iso_is_hopf_morphism(cfg.order));
    append(rep, subalgebra_survey(cfg.order));
    append(rep, iso_cocommutator_check());
    return rep;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"classical", "bialgebra", "hopf",
                                                   "rmatrix",   "fock",      "fb",
                                                   "iso"};
    return names;
}

Report run_suites(const RunConfig& cfg) {
    if (cfg.order < 0) throw std::invalid_argument("truncation order must be >= 0");
    if (cfg.fock_dim < 1) throw std::invalid_argument("fock dimension must be >= 1");
    if (cfg.fb_degree < 1) throw std::invalid_argument("fb degree must be >= 1");
    selected(cfg.algebra); // validates the algebra name
    const std::vector<std::string>& all = suite_names();
    std::vector<std::string> wanted = cfg.suites.empty() ? all : cfg.suites;
    for (const auto& s : wanted)
        if (std::find(all.begin(), all.end(), s) == all.end())
            throw std::invalid_argument("unknown suite: " + s);

    std::map<std::string, std::future<Report>> pending;
    for (const auto& name : all) {
        if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        pending.emplace(name, std::async(std::launch::async, [&cfg, name] {
            if (name == "classical") return classical_suite(cfg);
            if (name == "bialgebra") return bialgebra_suite(cfg);
            if (name == "hopf") return hopf_suite(cfg);
            if (name == "rmatrix") return rmatrix_suite(cfg);
            if (name == "fock") return fock_suite(cfg);
            if (name == "fb") return fb_suite(cfg);
            return iso_suite(cfg);
        }));
    }
    Report rep;
    for (const auto& name : all) {
        auto it = pending.find(name);
        if (it != pending.end()) append(rep, it->second.get());
    }
    return rep;
}

} // namespace jordeform
