#include "hfpq/codefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hfpq/error.hpp"

namespace hfpq {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

int parse_int(std::string_view value, std::size_t line, std::size_t column) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
    throw ParseError(line, column, "expected an integer, got '" + std::string(value) + "'");
  return out;
}

BinaryWord parse_bits(std::string_view value, std::size_t line, std::size_t column) {
  BinaryWord w(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '1')
      w.set(i);
    else if (value[i] != '0')
      throw ParseError(line, column + i, "expected '0' or '1', got '" + std::string(1, value[i]) + "'");
  }
  return w;
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && (lines[i].text.empty() || lines[i].text.front() == '#')) ++i;
  if (i == lines.size()) throw ParseError(1, 1, "empty input, expected header 'HFPQ v1'");
  if (lines[i].text != "HFPQ v1") throw ParseError(lines[i].number, 1, "expected header 'HFPQ v1'");

  CodeFile f;
  std::optional<Line> n_line, a_line, b_line, iota_line;
  std::size_t a_col = 0, b_col = 0, iota_col = 0;
  std::string_view a_text, b_text;
  for (++i; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.text.empty() || ln.text.front() == '#') continue;
    const std::size_t eq = ln.text.find('=');
    if (eq == std::string_view::npos) throw ParseError(ln.number, 1, "expected key=value");
    const std::string_view key = ln.text.substr(0, eq);
    const std::string_view value = ln.text.substr(eq + 1);
    const std::size_t col = eq + 2;
    auto once = [&](std::optional<Line>& slot) {
      if (slot) throw ParseError(ln.number, 1, "duplicate key '" + std::string(key) + "'");
      slot = ln;
    };
    if (key == "n") {
      once(n_line);
      f.n = parse_int(value, ln.number, col);
      if (f.n < 1) throw ParseError(ln.number, col, "n must be positive");
    } else if (key == "a") {
      once(a_line);
      a_text = value;
      a_col = col;
      f.a = parse_bits(value, ln.number, col);
    } else if (key == "b") {
      once(b_line);
      b_text = value;
      b_col = col;
      f.b = parse_bits(value, ln.number, col);
    } else if (key == "iota") {
      once(iota_line);
      iota_col = col;
      f.iota = parse_int(value, ln.number, col);
    } else {
      throw ParseError(ln.number, 1, "unknown key '" + std::string(key) + "'");
    }
  }

  const std::size_t end_line = lines.empty() ? 1 : lines.back().number + 1;
  if (!n_line) throw ParseError(end_line, 1, "missing key 'n'");
  if (!a_line) throw ParseError(end_line, 1, "missing key 'a'");
  const auto length = static_cast<std::size_t>(4 * f.n);
  if (a_text.size() != length)
    throw ParseError(a_line->number, a_col + std::min(a_text.size(), length),
                     "a must have 4n = " + std::to_string(length) + " characters, got " + std::to_string(a_text.size()));
  if (b_line && b_text.size() != length)
    throw ParseError(b_line->number, b_col + std::min(b_text.size(), length),
                     "b must have 4n = " + std::to_string(length) + " characters, got " + std::to_string(b_text.size()));
  if (f.iota && (*f.iota < 0 || *f.iota >= 2 * f.n))
    throw ParseError(iota_line->number, iota_col, "iota must lie in [0, 2n)");
  return f;
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code_file(ss.str());
}

std::string format_code_file(const TypeQCode& code) {
  std::string s = "HFPQ v1\n";
  s += "n=" + std::to_string(code.n()) + "\n";
  s += "a=" + code.a().to_string() + "\n";
  s += "b=" + code.b().to_string() + "\n";
  if (code.iota()) s += "iota=" + std::to_string(*code.iota()) + "\n";
  return s;
}

TypeQCode to_code(const CodeFile& f) {
  if (f.b) return TypeQCode::from_generators(f.n, f.a, *f.b, f.iota);
  return TypeQCode::from_generator(f.n, f.a, f.iota);
}

TypeQCode golden_example() {
  return TypeQCode::from_generators(6, BinaryWord::from_string("111111011010101001000000"),
                                    BinaryWord::from_string("010101110000111100010101"), 11);
}

std::string format_report(const AnalysisReport& r, const HfpVerdict& verdict) {
  auto flag = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << "length=" << r.length << '\n'
      << "s=" << r.s << '\n'
      << "n_prime=" << r.n_prime << '\n'
      << "rank=" << r.rank << '\n'
      << "kernel_dim=" << r.kernel_dim << '\n'
      << "kernel_basis=";
  for (std::size_t i = 0; i < r.kernel_basis.size(); ++i) out << (i ? ";" : "") << r.kernel_basis[i].to_string();
  out << '\n'
      << "is_linear=" << flag(r.is_linear) << '\n'
      << "is_hfp=" << flag(r.is_hfp) << '\n'
      << "is_type_q=" << flag(r.is_type_q) << '\n';
  if (!verdict.ok) out << "witness=" << verdict.describe() << '\n';
  if (!r.bound_violations.empty()) {
    out << "violations=";
    for (std::size_t i = 0; i < r.bound_violations.size(); ++i) out << (i ? ";" : "") << r.bound_violations[i];
    out << '\n';
  }
  return out.str();
}

std::string export_matrix(const HadamardMatrixQ& h, MatrixFormat format) {
  std::string s;
  for (const BinaryWord& row : h.rows) {
    if (format == MatrixFormat::ZeroOne) {
      s += row.to_string();
    } else {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) s += ' ';
        s += row.test(j) ? "-1" : "+1";
      }
    }
    s += '\n';
  }
  return s;
}

std::vector<BinaryWord> import_matrix(std::string_view text) {
  std::vector<BinaryWord> rows;
  for (const Line& ln : split_lines(text)) {
    if (ln.text.empty()) continue;
    BinaryWord row;
    if (ln.text.find(' ') == std::string_view::npos && ln.text.find_first_not_of("01") == std::string_view::npos) {
      row = parse_bits(ln.text, ln.number, 1);
    } else {
      std::vector<bool> bits;
      std::size_t pos = 0;
      while (pos < ln.text.size()) {
        if (ln.text[pos] == ' ') {
          ++pos;
          continue;
        }
        const std::size_t end = std::min(ln.text.find(' ', pos), ln.text.size());
        const std::string_view tok = ln.text.substr(pos, end - pos);
        if (tok == "+1" || tok == "1")
          bits.push_back(false);
        else if (tok == "-1")
          bits.push_back(true);
        else
          throw ParseError(ln.number, pos + 1, "expected +1 or -1, got '" + std::string(tok) + "'");
        pos = end;
      }
      row = BinaryWord(bits.size());
      for (std::size_t j = 0; j < bits.size(); ++j) row.set(j, bits[j]);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(ln.number, 1, "row length " + std::to_string(row.size()) + " differs from " +
                                         std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BinaryWord> codeword_set_from_rows(const std::vector<BinaryWord>& rows) {
  std::vector<BinaryWord> out = rows;
  for (const BinaryWord& r : rows) out.push_back(r.complement());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hfpq
