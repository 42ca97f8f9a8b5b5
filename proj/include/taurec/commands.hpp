#pragma once

#include "taurec/problem_file.hpp"

#include <iosfwd>
#include <optional>

namespace taurec {

enum class ReportFormat { text, json };

/// Exit codes shared with the CLI: 0 success, 1 domain error, 2 parse error.
int cmd_analyze(const ProblemFile& file, ReportFormat fmt, std::ostream& out, std::ostream& err);
int cmd_canonical(const ProblemFile& file, unsigned bound, ReportFormat fmt, std::ostream& out,
                  std::ostream& err);
int cmd_solve(const ProblemFile& file, unsigned order, ReportFormat fmt, std::ostream& out,
              std::ostream& err);
/// Invariant suite over the file's operator; prints one line per check and
/// returns 1 when any fails. The bound falls back to the file's
/// degree_bound option, then to 12.
int cmd_check(const ProblemFile& file, std::optional<unsigned> bound, std::ostream& out,
              std::ostream& err);

}  // namespace taurec
