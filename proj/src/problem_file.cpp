#include "taurec/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace taurec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct Cursor {
    std::size_t line;
    std::size_t col_of(std::string_view full, std::string_view part) const {
        if (part.empty() || part.data() < full.data()) return 1;
        return static_cast<std::size_t>(part.data() - full.data()) + 1;
    }
};

Rational parse_rational(std::string_view tok, std::size_t line, std::size_t col) {
    auto r = Rational::parse(tok);
    if (!r) throw ProblemParseError(line, col, "expected rational, got '" + std::string(tok) + "'");
    return *r;
}

Polynomial parse_poly(std::string_view value, std::size_t line, std::size_t col) {
    std::vector<Rational> coeffs;
    for (const auto& tok : split_ws(value)) coeffs.push_back(parse_rational(tok, line, col));
    return Polynomial(std::move(coeffs));
}

// cond = term(w, k, x) term(w, k, x) ... = rhs
Condition parse_condition(std::string_view value, std::size_t line) {
    Condition c;
    std::string_view rest = trim(value);
    while (rest.starts_with("term")) {
        rest.remove_prefix(4);
        rest = trim(rest);
        if (!rest.starts_with('('))
            throw ProblemParseError(line, 1, "expected '(' after term");
        auto close = rest.find(')');
        if (close == std::string_view::npos)
            throw ProblemParseError(line, 1, "unterminated term(...)");
        std::string inner(rest.substr(1, close - 1));
        std::replace(inner.begin(), inner.end(), ',', ' ');
        auto parts = split_ws(inner);
        if (parts.size() != 3)
            throw ProblemParseError(line, 1, "term expects (weight, derivative_order, point)");
        ConditionTerm t;
        t.weight = parse_rational(parts[0], line, 1);
        try {
            t.derivative_order = static_cast<unsigned>(std::stoul(parts[1]));
        } catch (...) {
            throw ProblemParseError(line, 1, "derivative order must be a natural number");
        }
        t.point = parse_rational(parts[2], line, 1);
        c.terms.push_back(std::move(t));
        rest.remove_prefix(close + 1);
        rest = trim(rest);
    }
    if (c.terms.empty()) throw ProblemParseError(line, 1, "condition needs at least one term");
    if (!rest.starts_with('='))
        throw ProblemParseError(line, 1, "condition needs '= rhs' after its terms");
    rest = trim(rest.substr(1));
    c.rhs = parse_rational(rest, line, 1);
    return c;
}

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
    ProblemFile f;
    std::string section;
    std::size_t lineno = 0;

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ProblemParseError(lineno, 1, "unterminated section header");
            section = std::string(line.substr(1, line.size() - 2));
            static const char* known[] = {"operator", "rhs", "conditions", "perturbation", "options"};
            if (std::find(std::begin(known), std::end(known), section) == std::end(known))
                throw ProblemParseError(lineno, 1, "unknown section [" + section + "]");
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ProblemParseError(lineno, 1, "expected 'key = value'");
        std::string key{trim(line.substr(0, eq))};
        std::string_view value = trim(line.substr(eq + 1));
        std::size_t vcol = Cursor{lineno}.col_of(raw, value);

        if (section == "operator") {
            if (key.size() < 2 || key[0] != 'p' ||
                !std::all_of(key.begin() + 1, key.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ProblemParseError(lineno, 1, "operator keys look like p<order>");
            unsigned order = static_cast<unsigned>(std::stoul(key.substr(1)));
            for (const auto& [o, _] : f.operator_terms)
                if (o == order)
                    throw ProblemParseError(lineno, 1, "duplicate coefficient p" + key.substr(1));
            f.operator_terms.emplace_back(order, parse_poly(value, lineno, vcol));
        } else if (section == "rhs") {
            if (key != "f") throw ProblemParseError(lineno, 1, "rhs section expects 'f = ...'");
            f.rhs = parse_poly(value, lineno, vcol);
        } else if (section == "conditions") {
            if (key != "cond")
                throw ProblemParseError(lineno, 1, "conditions section expects 'cond = ...'");
            f.conditions.push_back(parse_condition(value, lineno));
        } else if (section == "perturbation") {
            if (key == "kind") {
                if (value == "chebyshev" || value == "chebyshev_first")
                    f.perturbation.kind = PolyKind::chebyshev_first;
                else if (value == "legendre")
                    f.perturbation.kind = PolyKind::legendre;
                else
                    throw ProblemParseError(lineno, vcol, "kind must be chebyshev or legendre");
            } else if (key == "interval") {
                auto parts = split_ws(value);
                if (parts.size() != 2)
                    throw ProblemParseError(lineno, vcol, "interval expects two rationals");
                f.perturbation.a = parse_rational(parts[0], lineno, vcol);
                f.perturbation.b = parse_rational(parts[1], lineno, vcol);
                if (!(f.perturbation.a < f.perturbation.b))
                    throw ProblemParseError(lineno, vcol, "interval requires a < b");
            } else {
                throw ProblemParseError(lineno, 1, "unknown perturbation key '" + key + "'");
            }
        } else if (section == "options") {
            if (key == "degree_bound") {
                try {
                    f.options.degree_bound = static_cast<unsigned>(std::stoul(std::string(value)));
                } catch (...) {
                    throw ProblemParseError(lineno, vcol, "degree_bound must be a natural number");
                }
            } else if (key == "format") {
                if (value != "text" && value != "json")
                    throw ProblemParseError(lineno, vcol, "format must be text or json");
                f.options.format = std::string(value);
            } else {
                throw ProblemParseError(lineno, 1, "unknown option '" + key + "'");
            }
        } else {
            throw ProblemParseError(lineno, 1, "content before any [section]");
        }
    }

    if (f.operator_terms.empty())
        throw ProblemParseError(lineno, 1, "missing [operator] section with at least one p<k>");
    bool any_nonzero = false;
    for (const auto& [o, p] : f.operator_terms) any_nonzero = any_nonzero || !p.is_zero();
    if (!any_nonzero) throw ProblemParseError(lineno, 1, "zero operator rejected");
    return f;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_file(buf.str());
}

TauProblem ProblemFile::to_problem() const {
    unsigned max_order = 0;
    for (const auto& [o, _] : operator_terms) max_order = std::max(max_order, o);
    std::vector<Polynomial> coeffs(max_order + 1);
    for (const auto& [o, p] : operator_terms) coeffs[o] = p;
    return TauProblem{DiffOperator(std::move(coeffs)), rhs, conditions, perturbation};
}

std::string serialize(const ProblemFile& f) {
    std::ostringstream os;
    auto poly_tokens = [](const Polynomial& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        for (const auto& c : p.coeffs()) {
            if (!out.empty()) out += ' ';
            out += c.pretty();
        }
        return out;
    };

    os << "[operator]\n";
    auto terms = f.operator_terms;
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [o, p] : terms) os << "p" << o << " = " << poly_tokens(p) << "\n";

    os << "\n[rhs]\nf = " << poly_tokens(f.rhs) << "\n";

    os << "\n[conditions]\n";
    for (const auto& c : f.conditions) {
        os << "cond =";
        for (const auto& t : c.terms)
            os << " term(" << t.weight.pretty() << ", " << t.derivative_order << ", "
               << t.point.pretty() << ")";
        os << " = " << c.rhs.pretty() << "\n";
    }

    os << "\n[perturbation]\nkind = "
       << (f.perturbation.kind == PolyKind::chebyshev_first ? "chebyshev" : "legendre")
       << "\ninterval = " << f.perturbation.a.pretty() << " " << f.perturbation.b.pretty() << "\n";

    if (f.options.degree_bound || f.options.format) {
        os << "\n[options]\n";
        if (f.options.degree_bound) os << "degree_bound = " << *f.options.degree_bound << "\n";
        if (f.options.format) os << "format = " << *f.options.format << "\n";
    }
    return os.str();
}

}  // namespace taurec
