#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symdefect/control/adaptive.hpp"
#include "symdefect/study/study.hpp"

namespace symdefect::study {

// CSV: header line, comma separated, LF endings, numbers in %.16e; NaN
// (undefined orders) is written as an empty field.
void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);
void write_csv(std::ostream& os, const std::vector<GlobalRow>& rows);
void write_csv(std::ostream& os, const std::vector<control::TraceEntry>& trace);

[[nodiscard]] std::vector<ConvergenceRow> read_local_csv(std::istream& is);
[[nodiscard]] std::vector<GlobalRow> read_global_csv(std::istream& is);
[[nodiscard]] std::vector<control::TraceEntry> read_trace_csv(std::istream& is);

/// Aligned text tables (3 significant digits for norms, 2 decimals for orders).
[[nodiscard]] std::string format_table(const std::vector<ConvergenceRow>& rows);
[[nodiscard]] std::string format_table(const std::vector<GlobalRow>& rows);
[[nodiscard]] std::string format_table(const std::vector<control::TraceEntry>& trace);

}  // namespace symdefect::study
