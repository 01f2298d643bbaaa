#include "hfpq/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hfpq/analysis.hpp"
#include "hfpq/codefile.hpp"
#include "hfpq/error.hpp"
#include "hfpq/search.hpp"
#include "hfpq/transforms.hpp"

namespace hfpq {

namespace {

constexpr int kOk = 0;
constexpr int kVerification = 1;
constexpr int kInput = 2;

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, 0, "cannot write '" + path + "'");
  f << text;
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const TypeQCode code = to_code(read_code_file(path));
  const HfpVerdict verdict = verify_hfp(code);
  const AnalysisReport report = analyze(code);
  out << format_report(report, verdict);
  if (!verdict.ok) return kVerification;
  return report.bound_violations.empty() ? kOk : kVerification;
}

TypeQCode load_with_iota(const std::string& path) {
  TypeQCode code = to_code(read_code_file(path));
  if (!code.iota()) code = code.with_iota(find_kernel_iota(code));
  return code;
}

int cmd_search(int n, bool k2_only, std::optional<std::uint64_t> limit, int threads, bool progress,
               const std::string& dir, std::ostream& out) {
  SearchOptions opt;
  opt.limit = limit;
  opt.threads = threads;
  opt.progress = progress;
  const SearchResult r = k2_only ? search_k2(n, opt) : search_general(n, opt);

  if (!dir.empty()) std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < r.codes.size(); ++i) {
    const std::string text = format_code_file(r.codes[i]);
    if (dir.empty()) {
      out << text << '\n';
    } else {
      std::ostringstream name;
      name << "n" << n << "_" << std::setw(5) << std::setfill('0') << i + 1 << ".hfpq";
      write_text(text, (std::filesystem::path(dir) / name.str()).string(), out);
    }
  }
  out << "# n=" << n << " family=" << (k2_only ? "k2" : "general") << " codes=" << r.codes.size();
  if (k2_only) out << " linear=" << r.linear_hits.size();
  out << " scanned=" << r.scanned << "/" << r.space << " truncated=" << (r.truncated ? "true" : "false") << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard full propelinear codes of type Q"};
  app.name("hfpq");
  app.require_subcommand(1);

  std::string input, output, format = "01";
  int n = 0, n_max = 6, threads = 0;
  bool k2_only = false, progress = false;
  std::optional<std::uint64_t> limit;

  auto* example = app.add_subcommand("example", "Print the built-in length-24 example");
  example->add_option("-o,--output", output, "Output file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Verify a code and report rank and kernel");
  analyze_cmd->add_option("file", input, "Code file")->required();

  auto* transpose_cmd = app.add_subcommand("transpose", "Write the code of the transposed matrix");
  transpose_cmd->add_option("file", input, "Code file")->required();
  transpose_cmd->add_option("-o,--output", output, "Output file");

  auto* double_cmd = app.add_subcommand("double", "Write the doubled code of length 8n");
  double_cmd->add_option("file", input, "Code file (iota is searched for when absent)")->required();
  double_cmd->add_option("-o,--output", output, "Output file");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for codes of length 4n");
  search_cmd->add_option("--n", n, "Half of the half-length")->required()->check(CLI::Range(1, 16));
  search_cmd->add_flag("--k2-only", k2_only, "Only the kernel-dimension-2 family");
  search_cmd->add_option("--limit", limit, "Maximum number of candidates");
  search_cmd->add_option("-o,--output", output, "Directory for one code file per hit");
  search_cmd->add_option("--threads", threads, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--progress", progress, "Report counts on stderr");

  auto* export_cmd = app.add_subcommand("export", "Print the normalized Hadamard matrix");
  export_cmd->add_option("file", input, "Code file")->required();
  export_cmd->add_option("--format", format, "01 or pm1")->check(CLI::IsMember({"01", "pm1"}));
  export_cmd->add_option("-o,--output", output, "Output file");

  auto* ito_cmd = app.add_subcommand("ito", "Report existence of codes for n = 1..n-max");
  ito_cmd->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(1, 15));
  ito_cmd->add_option("--limit", limit, "Maximum candidates per search");
  ito_cmd->add_option("--threads", threads, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  ito_cmd->add_flag("--progress", progress, "Report counts on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hfpq: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (example->parsed()) {
      write_text(format_code_file(golden_example()), output, out);
    } else if (analyze_cmd->parsed()) {
      return cmd_analyze(input, out);
    } else if (transpose_cmd->parsed()) {
      write_text(format_code_file(transpose_code(to_code(read_code_file(input)))), output, out);
    } else if (double_cmd->parsed()) {
      write_text(format_code_file(double_code(load_with_iota(input))), output, out);
    } else if (search_cmd->parsed()) {
      return cmd_search(n, k2_only, limit, threads, progress, output, out);
    } else if (export_cmd->parsed()) {
      const MatrixFormat f = format == "pm1" ? MatrixFormat::PlusMinusOne : MatrixFormat::ZeroOne;
      write_text(export_matrix(build_matrix(to_code(read_code_file(input))), f), output, out);
    } else if (ito_cmd->parsed()) {
      SearchOptions opt;
      opt.limit = limit;
      opt.threads = threads;
      opt.progress = progress;
      for (const ItoRow& row : ito_scan(n_max, opt)) {
        out << "n=" << row.n << " exists=" << to_string(row.exists);
        if (row.witness) out << " a=" << row.witness->a().to_string();
        out << '\n';
      }
    }
  } catch (const ParseError& e) {
    err << "hfpq: " << e.what() << '\n';
    return kInput;
  } catch (const SizeMismatch& e) {
    err << "hfpq: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    err << "hfpq: " << e.what() << '\n';
    return kVerification;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hfpq: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}

}  // namespace hfpq
