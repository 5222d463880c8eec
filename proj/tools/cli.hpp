#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/combinatorics.hpp"
#include "schreier/finite_set.hpp"
#include "schreier/verify.hpp"

namespace schreier::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kSizeLimit = 3,
};

enum class Format { csv, json, text };

std::optional<Format> parse_format(std::string_view name);

/// Runs the command line (args exclude the program name). Everything the
/// command produces goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Renderers. All output is LF-terminated and independent of the locale.

/// rows[k-1][n-1] = a_{k,n}.
std::string render_table(const std::vector<std::vector<Count>>& rows, std::string_view source, Format format);

std::string render_sets(const std::vector<FiniteSet>& sets, Format format);

/// values[i] is the term with index offset + i.
std::string render_sequence(std::string_view name, int offset, const std::vector<Count>& values, Format format);

/// One line per report plus a summary line.
std::string render_reports(const std::vector<Report>& reports);

}  // namespace schreier::cli
