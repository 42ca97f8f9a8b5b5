#include "taurec/commands.hpp"

#include "taurec/canonical.hpp"
#include "taurec/linear_system.hpp"
#include "taurec/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace taurec {

namespace {

using nlohmann::json;

std::string row_list(const Polynomial& p) {
    if (p.is_zero()) return "[0]";
    std::string out = "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) out += ", ";
        out += p.coeff(k).pretty();
    }
    return out + "]";
}

json poly_json(const Polynomial& p) {
    return json(p.coeff_strings());
}

std::string set_str(const std::set<unsigned>& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned v : s) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

json operator_json(const DiffOperator& op) {
    json terms = json::array();
    for (unsigned i = 0; i <= op.order(); ++i)
        if (!op.coeff(i).is_zero())
            terms.push_back({{"order", i}, {"coeffs", poly_json(op.coeff(i))}});
    return {{"order", op.order()}, {"terms", terms}};
}

int run_domain(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int cmd_analyze(const ProblemFile& file, ReportFormat fmt, std::ostream& out, std::ostream& err) {
    return run_domain(err, [&] {
        const TauProblem problem = file.to_problem();
        const DiffOperator& op = problem.op;
        const OperatorAnalysis a = analyze(op);
        const auto& prof = a.profile;
        const auto& ech = a.echelon;
        const bool index_ok =
            verify_height_index(op, ech.kernel_basis.size(), ech.inaccessible.size());
        const bool derived = has_derived_singular(op, ech);

        FiniteMatrix top;
        if (prof.cutoff >= 0) top = build_pi1(op, prof);

        if (fmt == ReportFormat::json) {
            json j;
            j["operator"] = operator_json(op);
            j["height"] = prof.height;
            j["depth"] = prof.depth;
            j["xi"] = poly_json(prof.xi);
            j["xi_pretty"] = prof.xi.str("n");
            j["omega"] = json(std::vector<unsigned>(prof.omega.begin(), prof.omega.end()));
            j["cutoff"] = prof.cutoff;
            json rows = json::array();
            for (const auto& r : top.rows) rows.push_back(poly_json(r));
            j["top_block"] = rows;
            json red = json::array();
            for (const auto& r : ech.reduced.rows) red.push_back(poly_json(r));
            j["reduced"] = red;
            json sb = json::array();
            for (const auto& s : ech.standard_polys) sb.push_back(poly_json(s));
            j["standard_basis"] = sb;
            json kb = json::array();
            for (const auto& u : ech.kernel_basis) kb.push_back(poly_json(u));
            j["kernel_basis"] = kb;
            j["zero_rows"] = ech.kernel_basis.size();
            json sg = json::array();
            for (const auto& [row, col] : ech.sigma) sg.push_back({{"row", row}, {"degree", col}});
            j["sigma"] = sg;
            j["inaccessible"] =
                json(std::vector<unsigned>(ech.inaccessible.begin(), ech.inaccessible.end()));
            j["index_check"] = index_ok;
            j["derived_singular_present"] = derived;
            out << j.dump(2) << "\n";
            return;
        }

        out << "operator: order " << op.order() << "\n";
        for (unsigned i = 0; i <= op.order(); ++i)
            if (!op.coeff(i).is_zero()) out << "  p" << i << "(x) = " << op.coeff(i) << "\n";
        out << "height h = " << prof.height << "\n";
        out << "depth d = " << prof.depth << "\n";
        out << "xi(n) = " << prof.xi.str("n") << "\n";
        out << "Omega = " << set_str(prof.omega) << "\n";
        out << "N = " << prof.cutoff << "\n";
        out << "top block (rows 0..N):\n";
        for (std::size_t i = 0; i < top.rows.size(); ++i)
            out << "  row " << i << ": " << row_list(top.rows[i]) << "\n";
        out << "reduced pre-LREF:\n";
        for (std::size_t i = 0; i < ech.reduced.rows.size(); ++i)
            out << "  row " << i << ": " << row_list(ech.reduced.rows[i]) << "\n";
        out << "standard basis:\n";
        for (std::size_t i = 0; i < ech.standard_polys.size(); ++i)
            out << "  s" << i << " = " << ech.standard_polys[i] << "\n";
        out << "kernel basis:\n";
        for (std::size_t i = 0; i < ech.kernel_basis.size(); ++i)
            out << "  u" << i << " = " << ech.kernel_basis[i] << "\n";
        out << "zero rows: " << ech.kernel_basis.size() << "\n";
        out << "sigma:";
        for (const auto& [row, col] : ech.sigma) out << " row " << row << " -> " << col << ";";
        out << "\n";
        out << "S = " << set_str(ech.inaccessible) << "\n";
        out << "index check (card S - dim Ker = h): " << ech.inaccessible.size() << " - "
            << ech.kernel_basis.size() << " = "
            << (static_cast<int>(ech.inaccessible.size()) -
                static_cast<int>(ech.kernel_basis.size()))
            << (index_ok ? " OK" : " MISMATCH") << "\n";
        out << "derived-singular present: " << (derived ? "yes" : "no") << "\n";
    });
}

int cmd_canonical(const ProblemFile& file, unsigned bound, ReportFormat fmt, std::ostream& out,
                  std::ostream& err) {
    return run_domain(err, [&] {
        const TauProblem problem = file.to_problem();
        const OperatorAnalysis a = analyze(problem.op);
        const CanonicalBasis basis = generate(problem.op, a.echelon, bound);

        if (fmt == ReportFormat::json) {
            json j;
            json nulls = json::array();
            for (const auto& u : basis.null_cps) nulls.push_back(poly_json(u));
            j["null_cps"] = nulls;
            json entries = json::array();
            for (const auto& [m, e] : basis.entries)
                entries.push_back({{"m", m},
                                   {"class", to_string(e.cls)},
                                   {"q", poly_json(e.q)},
                                   {"r", poly_json(e.r)}});
            j["entries"] = entries;
            j["inaccessible"] =
                json(std::vector<unsigned>(basis.inaccessible.begin(), basis.inaccessible.end()));
            j["degree_bound"] = basis.degree_bound;
            out << j.dump(2) << "\n";
            return;
        }

        out << "null CPs: ";
        for (std::size_t i = 0; i < basis.null_cps.size(); ++i)
            out << (i ? ", " : "") << basis.null_cps[i];
        out << "\n";
        out << "m | class | q_m | r_m\n";
        for (const auto& [m, e] : basis.entries)
            out << m << " | " << to_string(e.cls) << " | " << e.q << " | " << e.r << "\n";
    });
}

int cmd_solve(const ProblemFile& file, unsigned order, ReportFormat fmt, std::ostream& out,
              std::ostream& err) {
    return run_domain(err, [&] {
        const TauProblem problem = file.to_problem();
        const TauSolution sol = solve_tau(problem, order);
        const Rational mid = (problem.perturbation.a + problem.perturbation.b) / Rational(2);
        const std::vector<Rational> pts{problem.perturbation.a, mid, problem.perturbation.b};
        const ResidualReport rep = residual_report(sol, problem, pts);

        if (fmt == ReportFormat::json) {
            json j;
            j["order"] = sol.order;
            j["y"] = poly_json(sol.y);
            j["y_pretty"] = sol.y.str();
            json approx = json::array();
            for (const auto& c : sol.y.coeffs()) approx.push_back(c.decimal());
            j["y_decimal_approx"] = approx;
            json taus = json::array();
            for (std::size_t i = 0; i < sol.taus.size(); ++i)
                taus.push_back({{"index", i + 1},
                                {"exact", sol.taus[i].str()},
                                {"decimal_approx", sol.taus[i].decimal()}});
            j["taus"] = taus;
            json cs = json::array();
            for (const auto& c : sol.free_constants)
                cs.push_back({{"exact", c.str()}, {"decimal_approx", c.decimal()}});
            j["free_constants"] = cs;
            j["perturbation"] = poly_json(sol.perturbation_poly);
            j["system_rows"] = sol.system_rows;
            j["system_cols"] = sol.system_cols;
            json pv = json::array();
            for (const auto& [pt, v] : rep.perturbation_values)
                pv.push_back({{"point", pt.str()},
                              {"exact", v.str()},
                              {"decimal_approx", v.decimal()}});
            j["residual_report"] = {
                {"perturbation_values", pv},
                {"max_abs_tau", rep.max_abs_tau.str()},
                {"max_abs_tau_decimal_approx", rep.max_abs_tau.decimal()},
                {"condition_residuals",
                 [&] {
                     json arr = json::array();
                     for (const auto& r : rep.condition_residuals) arr.push_back(r.str());
                     return arr;
                 }()}};
            out << j.dump(2) << "\n";
            return;
        }

        out << "order n = " << sol.order << "\n";
        out << "tau parameters M = " << sol.taus.size() << "\n";
        out << "system size = " << sol.system_rows << " x " << sol.system_cols << "\n";
        out << "y_n = " << sol.y << "\n";
        out << "  exact coefficients: " << row_list(sol.y) << "\n";
        for (std::size_t i = 0; i < sol.taus.size(); ++i)
            out << "tau_" << i + 1 << " = " << sol.taus[i].pretty() << " (~"
                << sol.taus[i].decimal(6) << ")\n";
        for (std::size_t i = 0; i < sol.free_constants.size(); ++i)
            out << "C_" << i << " = " << sol.free_constants[i].pretty() << "\n";
        out << "H_n = " << sol.perturbation_poly << "\n";
        out << "residual report:\n";
        for (const auto& [pt, v] : rep.perturbation_values)
            out << "  H_n(" << pt.pretty() << ") = " << v.pretty() << " (~" << v.decimal(6)
                << ")\n";
        out << "  max |tau| = " << rep.max_abs_tau.pretty() << " (~" << rep.max_abs_tau.decimal(6)
            << ")\n";
        bool all_zero = std::all_of(rep.condition_residuals.begin(),
                                    rep.condition_residuals.end(),
                                    [](const Rational& r) { return r.is_zero(); });
        out << "  condition residuals: " << (all_zero ? "all exactly 0" : "NONZERO") << "\n";
    });
}

int cmd_check(const ProblemFile& file, std::optional<unsigned> bound_arg, std::ostream& out,
              std::ostream& err) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        out << "check " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) ++failures;
    };

    try {
        const TauProblem problem = file.to_problem();
        const DiffOperator& op = problem.op;
        const OperatorAnalysis a = analyze(op);
        const auto& ech = a.echelon;
        const unsigned bound = bound_arg.value_or(file.options.degree_bound.value_or(12));

        bool structure = true;
        bool seen_nonzero = false;
        int last_sigma = -1;
        for (std::size_t i = 0; i < ech.reduced.rows.size(); ++i) {
            const bool zero = ech.reduced.rows[i].is_zero();
            if (zero && seen_nonzero) structure = false;
            if (!zero) {
                seen_nonzero = true;
                int s = ech.reduced.rows[i].degree();
                if (s <= last_sigma) structure = false;
                last_sigma = s;
            }
        }
        report("pre-lref structure", structure);

        bool commutes = true;
        for (std::size_t i = 0; i < ech.reduced.rows.size(); ++i)
            commutes = commutes && op.apply(ech.standard_polys[i]) == ech.reduced.rows[i];
        report("row operations commute with the operator", commutes);

        bool kernel_ok = true;
        for (const auto& u : ech.kernel_basis) kernel_ok = kernel_ok && op.apply(u).is_zero();
        report("kernel exactness", kernel_ok);

        report("height equals deficiency minus kernel dimension",
               verify_height_index(op, ech.kernel_basis.size(), ech.inaccessible.size()));

        const CanonicalBasis basis = generate(op, ech, bound);
        bool identity = true, complete = true;
        for (unsigned m = 0; m <= bound; ++m) {
            if (basis.inaccessible.contains(m)) continue;
            auto it = basis.entries.find(m);
            if (it == basis.entries.end()) {
                complete = false;
                continue;
            }
            const auto& e = it->second;
            identity = identity &&
                       op.apply(e.q) == Polynomial::monomial(m) + e.r &&
                       (e.r.is_zero() || e.r.degree() < static_cast<int>(m));
            for (int k = 0; k <= e.r.degree(); ++k)
                if (!e.r.coeff(k).is_zero())
                    identity = identity && basis.inaccessible.contains(static_cast<unsigned>(k));
        }
        report("defining identity D(q_m) = x^m + r_m", identity);
        report("every accessible index below the bound has an entry", complete);

        bool oracle_ok = true;
        const unsigned oracle_bound = std::min(bound, 8u);
        for (unsigned m = 0; m <= oracle_bound; ++m) {
            if (basis.inaccessible.contains(m)) continue;
            auto alt = truncated_system_cp(op, m, basis.inaccessible, a.profile.height,
                                           a.profile.cutoff);
            if (!alt) {
                oracle_ok = false;
                continue;
            }
            oracle_ok = oracle_ok && alt->r == basis.entries.at(m).r &&
                        in_span(ech.kernel_basis, alt->q - basis.entries.at(m).q);
        }
        report("recurrence agrees with the dense-system route", oracle_ok);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace taurec
