#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfpq/analysis.hpp"
#include "hfpq/typeq.hpp"

namespace hfpq {

/// Text form of a code:
///
///   HFPQ v1
///   n=<int>
///   a=<4n chars of 0/1, position 1 leftmost>
///   b=<4n chars>      (optional)
///   iota=<int>        (optional)
///
/// Blank lines and lines starting with '#' are ignored.
struct CodeFile {
  int n = 0;
  BinaryWord a;
  std::optional<BinaryWord> b;
  std::optional<int> iota;
};

/// Throws ParseError with the line and column of the first problem.
CodeFile parse_code_file(std::string_view text);
/// Reads and parses a file; an unreadable path is a ParseError at line 0.
CodeFile read_code_file(const std::string& path);
/// Always writes b; writes iota when known.
std::string format_code_file(const TypeQCode& code);

/// Derives b when absent; otherwise b must match the derived one up to complement.
TypeQCode to_code(const CodeFile& file);

/// The length-24 example with n = 6 and kernel element a^11 b.
TypeQCode golden_example();

/// key=value lines in a fixed order: length, s, n_prime, rank, kernel_dim,
/// kernel_basis, is_linear, is_hfp, is_type_q, then witness (failed
/// verification) and violations (failed bounds) when present.
std::string format_report(const AnalysisReport& report, const HfpVerdict& verdict);

enum class MatrixFormat { ZeroOne, PlusMinusOne };

/// One line per row of H; "pm1" maps 0 to +1 and 1 to -1.
std::string export_matrix(const HadamardMatrixQ& h, MatrixFormat format);
/// Reads rows in either format. Throws ParseError on ragged or malformed rows.
std::vector<BinaryWord> import_matrix(std::string_view text);
/// Rows together with their complements, sorted.
std::vector<BinaryWord> codeword_set_from_rows(const std::vector<BinaryWord>& rows);

}  // namespace hfpq
