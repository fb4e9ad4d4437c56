// Command-line front end: run the verification suites, export generator
// matrices in the number-state basis, dump the structure tables.
//
// Exit codes: 0 everything passed (or help), 1 at least one identity failed,
// 2 usage error.

#include "jordeform/fock.hpp"
#include "jordeform/hopf.hpp"
#include "jordeform/ncalg.hpp"
#include "jordeform/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace jordeform;

int default_order() {
    const char* s = std::getenv("JORDEFORM_DEFAULT_ORDER");
    if (!s || !*s) return 4;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end || v < 0 || v > 64)
        throw std::invalid_argument("JORDEFORM_DEFAULT_ORDER must be a small nonnegative integer");
    return static_cast<int>(v);
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

std::string report_text(const Report& rep) {
    std::ostringstream os;
    long failed = 0;
    for (const auto& rec : rep) {
        os << (rec.pass ? "pass  " : "FAIL  ") << rec.suite << " | " << rec.identity << " | "
           << rec.anchor << " | residual_terms=" << rec.residual_terms
           << " millis=" << rec.millis << "\n";
        if (!rec.pass) {
            ++failed;
            if (!rec.residual.empty()) os << "      residual: " << rec.residual << "\n";
        }
    }
    os << rep.size() << " checks, " << failed << " failed\n";
    return os.str();
}

std::string report_json_str(const Report& rep) {
    json arr = json::array();
    for (const auto& rec : rep)
        arr.push_back({{"suite", rec.suite},
                       {"identity", rec.identity},
                       {"anchor", rec.anchor},
                       {"status", rec.pass ? "pass" : "fail"},
                       {"residual_terms", rec.residual_terms},
                       {"millis", rec.millis}});
    return arr.dump(2) + "\n";
}

std::string series_str(const ZSeries& c) {
    std::string s;
    for (int k = 0; k <= c.order(); ++k) {
        const Rational& q = c[static_cast<size_t>(k)];
        if (q == 0) continue;
        bool neg = q < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string cs = coeff_str(neg ? Rational(-q) : q, k);
        s += cs.empty() ? "1" : cs;
    }
    return s.empty() ? "0" : s;
}

std::string matrices_output(const std::string& gen_name, const std::string& basis, int order,
                            int dim, const std::string& format) {
    const Presentation& p = Presentation::get(AlgebraId::h6_jordanian, order);
    int slot = p.slot(gen_name);
    json out{{"algebra", algebra_name(p.id())},
             {"generator", gen_name},
             {"basis", basis},
             {"dim", dim},
             {"order", order}};
    std::ostringstream os;
    os << "# " << gen_name << ", " << basis << " basis, dim " << dim << ", order " << order
       << ", " << algebra_name(p.id()) << "\n";
    json entries = json::array();
    if (basis == "normalized") {
        RadMatrix rm = closed_form_matrix(slot, order, dim);
        for (const auto& [ij, v] : rm.entries()) {
            json zarr = json::array();
            for (const auto& r : v)
                zarr.push_back({{"q_num", numerator(r.q()).str()},
                                {"q_den", denominator(r.q()).str()},
                                {"radicand", r.r().str()}});
            entries.push_back({{"row", ij.first}, {"col", ij.second}, {"z", zarr}});
            os << "(" << ij.first << "," << ij.second << ") " << rm.entry_str(ij.first, ij.second)
               << "\n";
        }
    } else {
        FockMatrix fm = generator_matrix(slot, order, dim);
        for (const auto& [ij, c] : fm.entries()) {
            json zarr = json::array();
            for (int k = 0; k <= order; ++k)
                zarr.push_back({{"num", numerator(c[static_cast<size_t>(k)]).str()},
                                {"den", denominator(c[static_cast<size_t>(k)]).str()}});
            entries.push_back({{"row", ij.first}, {"col", ij.second}, {"z", zarr}});
            os << "(" << ij.first << "," << ij.second << ") " << series_str(c) << "\n";
        }
    }
    out["entries"] = entries;
    return format == "json" ? out.dump(2) + "\n" : os.str();
}

void tables_for(AlgebraId id, int order, json& jout, std::ostringstream& os) {
    const Presentation& p = Presentation::get(id, order);
    const HopfStructure& h = HopfStructure::get(id, order);
    const auto& nm = p.names();
    json commutators = json::array(), coproducts = json::array(), antipodes = json::array();
    os << "# " << algebra_name(id) << ", truncation order " << order << "\n";
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < i; ++j) {
            std::string key = "[" + nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(j)] + "]";
            std::string val = p.element_str(p.bracket(i, j));
            commutators.push_back({{"pair", key}, {"value", val}});
            os << key << " = " << val << "\n";
        }
    for (int g = 0; g < 6; ++g) {
        std::string val = tensor_str(h.coproduct_gen(g), p);
        coproducts.push_back({{"generator", nm[static_cast<size_t>(g)]}, {"value", val}});
        os << "Delta(" << nm[static_cast<size_t>(g)] << ") = " << val << "\n";
    }
    for (int g = 0; g < 6; ++g) {
        std::string val = p.element_str(h.antipode_gen(g));
        antipodes.push_back({{"generator", nm[static_cast<size_t>(g)]}, {"value", val}});
        os << "gamma(" << nm[static_cast<size_t>(g)] << ") = " << val << "\n";
    }
    for (int g = 0; g < 6; ++g) os << "eps(" << nm[static_cast<size_t>(g)] << ") = 0\n";
    jout.push_back({{"algebra", algebra_name(id)},
                    {"order", order},
                    {"commutators", commutators},
                    {"coproducts", coproducts},
                    {"antipodes", antipodes}});
}

int run(int argc, char** argv) {
    CLI::App app{"exact symbolic checks for the Jordanian two-photon and Schrodinger "
                 "quantum algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.order = default_order();
    std::string format = "text";
    std::string output;
    std::string gen_name;
    std::string basis = "normalized";

    auto add_common = [&](CLI::App* c) {
        c->add_option("--order,-M", cfg.order, "z-series truncation order")
            ->capture_default_str();
        c->add_option("--format,-f", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--output,-o", output, "write to a file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify);
    verify->add_option("--dim,-D", cfg.fock_dim, "number-state matrix size")
        ->capture_default_str();
    verify->add_option("--fb-degree", cfg.fb_degree, "polynomial degree cap for FB operators")
        ->capture_default_str();
    verify->add_option("--algebra,-a", cfg.algebra, "h6, h6-dual, schrodinger, all")
        ->capture_default_str()
        ->check(CLI::IsMember({"h6", "h6-dual", "schrodinger", "all"}));
    verify->add_option("--suites,-s", cfg.suites, "subset of the suites")
        ->delimiter(',')
        ->check(CLI::IsMember(suite_names()));

    CLI::App* matrices =
        app.add_subcommand("matrices", "export one generator matrix in the number-state basis");
    add_common(matrices);
    matrices->add_option("--gen,-g", gen_name, "generator name (B-, A-, N, M, A+, B+)")
        ->required();
    matrices->add_option("--dim,-D", cfg.fock_dim, "matrix size")->capture_default_str();
    matrices->add_option("--basis,-b", basis, "normalized or unnormalized")
        ->capture_default_str()
        ->check(CLI::IsMember({"normalized", "unnormalized"}));
    matrices
        ->add_option("--algebra,-a", cfg.algebra,
                     "only the two-photon presentation carries these matrices")
        ->check(CLI::IsMember({"h6", "all"}));

    CLI::App* tables =
        app.add_subcommand("tables", "dump commutator, coproduct, and antipode tables");
    add_common(tables);
    tables->add_option("--algebra,-a", cfg.algebra, "h6, h6-dual, schrodinger, all")
        ->capture_default_str()
        ->check(CLI::IsMember({"h6", "h6-dual", "schrodinger", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*verify) {
        Report rep = run_suites(cfg);
        write_out(output, format == "json" ? report_json_str(rep) : report_text(rep));
        return all_pass(rep) ? 0 : 1;
    }
    if (*matrices) {
        write_out(output, matrices_output(gen_name, basis, cfg.order, cfg.fock_dim, format));
        return 0;
    }
    json jout = json::array();
    std::ostringstream os;
    std::vector<AlgebraId> ids;
    if (cfg.algebra == "all")
        ids = {AlgebraId::h6_jordanian, AlgebraId::h6_jordanian_dual,
               AlgebraId::schrodinger_jordanian};
    else
        ids = {algebra_from_name(cfg.algebra)};
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) os << "\n";
        tables_for(ids[i], cfg.order, jout, os);
    }
    write_out(output, format == "json" ? jout.dump(2) + "\n" : os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
