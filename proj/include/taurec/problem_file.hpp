#pragma once

#include "taurec/tau.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taurec {

struct ProblemParseError : std::runtime_error {
    ProblemParseError(std::size_t at_line, std::size_t at_column, const std::string& message)
        : std::runtime_error("line " + std::to_string(at_line) + ", column " +
                             std::to_string(at_column) + ": " + message),
          line(at_line),
          column(at_column) {}
    std::size_t line;
    std::size_t column;
};

struct ProblemOptions {
    std::optional<unsigned> degree_bound;
    std::optional<std::string> format;
    bool operator==(const ProblemOptions&) const = default;
};

/// Line-oriented problem description with sections [operator], [rhs],
/// [conditions], [perturbation], [options]; rationals written "p/q" or "p",
/// polynomials as ascending coefficient lists.
struct ProblemFile {
    std::vector<std::pair<unsigned, Polynomial>> operator_terms;
    Polynomial rhs;
    std::vector<Condition> conditions;
    Perturbation perturbation;
    ProblemOptions options;

    TauProblem to_problem() const;
};

ProblemFile parse_problem_file(std::string_view text);
ProblemFile load_problem_file(const std::string& path);
std::string serialize(const ProblemFile& f);

}  // namespace taurec
