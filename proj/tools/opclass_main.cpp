#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "opclass/io.hpp"
#include "opclass/verify.hpp"

namespace {

using namespace opclass;

// exit codes: 0 ok, 1 verification/property failure, 2 input error
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

int cmd_classify(const std::string& path, double tol_membership,
                 std::optional<int> window) {
  ComplexMatrix t = read_matrix_json(path);
  Tolerances tol;
  tol.membership = tol_membership;
  ClassReport rep = window ? classify_compressed(t, *window, tol)
                           : classify(t, tol);
  std::cout << to_json_text(rep);
  return kOk;
}

int cmd_decompose(const std::string& path, const std::string& lambda_arg,
                  bool adjoint, bool strict) {
  ComplexMatrix t = read_matrix_json(path);
  std::optional<double> lambda;
  if (lambda_arg != "auto") {
    try {
      lambda = std::stod(lambda_arg);
    } catch (const std::exception&) {
      throw input_error("--lambda must be 'auto' or a real number");
    }
  }
  auto [dec, rep] = adjoint ? adjoint_blocks(t, lambda)
                            : star_para_blocks(t, lambda);
  std::cout << to_json_text(dec, rep);
  if (strict && !rep.all_ok) return kFail;
  return kOk;
}

int cmd_toeplitz(const std::string& symbol_path, int size,
                 const std::string& out, std::optional<int> window) {
  SymbolSpec sym = read_symbol_json(symbol_path);
  ComplexMatrix t = toeplitz_matrix(sym, size);
  if (out.empty())
    std::cout << matrix_to_json(t);
  else
    write_matrix_json(out, t);
  if (window) std::cout << to_json_text(classify_toeplitz(sym, *window));
  return kOk;
}

int cmd_hankel(const std::string& symbol_path, int size, const std::string& out,
               std::optional<int> window) {
  SymbolSpec sym = read_symbol_json(symbol_path);
  ComplexMatrix h = hankel_matrix(sym, size);
  if (out.empty())
    std::cout << matrix_to_json(h);
  else
    write_matrix_json(out, h);
  if (window) std::cout << to_json_text(classify_hankel(sym, *window));
  return kOk;
}

int cmd_spectrum(const std::string& path, const std::string& lambda_arg,
                 const std::string& format, const std::string& out) {
  ComplexMatrix t = read_matrix_json(path);
  std::optional<double> lambda;
  if (lambda_arg != "auto") {
    try {
      lambda = std::stod(lambda_arg);
    } catch (const std::exception&) {
      throw input_error("--lambda must be 'auto' or a real number");
    }
  }
  DiagramFormat fmt = DiagramFormat::text;
  if (format == "csv")
    fmt = DiagramFormat::csv;
  else if (format == "json")
    fmt = DiagramFormat::json;
  else if (format != "text")
    throw input_error("--format must be text, csv or json");
  std::string text = diagram_emit(make_diagram(t, lambda), fmt);
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return kOk;
}

int cmd_oracle(const std::string& path, const std::string& cls_arg, int samples,
               std::uint64_t seed) {
  ComplexMatrix t = read_matrix_json(path);
  OracleClass cls;
  if (cls_arg == "hypo")
    cls = OracleClass::hyponormal;
  else if (cls_arg == "para")
    cls = OracleClass::paranormal;
  else if (cls_arg == "star")
    cls = OracleClass::star_paranormal;
  else
    throw input_error("--class must be hypo, para or star");
  OracleResult res = vector_oracle(t, cls, samples, seed);
  std::cout << to_json_text(res, to_string(cls));
  return kOk;
}

int cmd_verify_paper(std::uint64_t seed, bool corrupt, bool json_summary) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.corrupt_fixture = corrupt;
  opts.progress = [](const CriterionResult& r) {
    VerifySummary one;
    one.criteria.push_back(r);
    // stream each line as the criterion lands; drop the trailing RESULT line
    std::string text = summary_table(one);
    std::cerr << text.substr(0, text.find("RESULT"));
  };
  VerifySummary sum = run_paper_verification(opts);
  if (json_summary)
    std::cout << to_json_text(sum);
  else
    std::cout << summary_table(sum);
  return sum.all_pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional operator classification toolkit"};
  app.require_subcommand(1);

  std::string matrix_path, symbol_path, out_path, lambda_arg = "auto";
  std::string format = "text", cls_arg = "star";
  double tol_membership = 1e-10;
  int size = 8, samples = 10000;
  std::uint64_t seed = 42;
  std::optional<int> window;
  bool strict = false, adjoint = false, corrupt = false, json_summary = false;

  CLI::App* classify = app.add_subcommand("classify", "class membership report");
  classify->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  classify->add_option("--tol", tol_membership, "membership tolerance");
  classify->add_option("--compress", window, "window size m (ambient file)");

  CLI::App* decompose = app.add_subcommand("decompose", "block decomposition");
  decompose->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  decompose->add_option("--lambda", lambda_arg, "'auto' or a real level");
  decompose->add_flag("--adjoint", adjoint, "split along |T*| instead of |T|");
  decompose->add_flag("--strict", strict, "exit 1 if any block check fails");

  CLI::App* toeplitz = app.add_subcommand("toeplitz", "Toeplitz matrix from symbol");
  toeplitz->add_option("--symbol", symbol_path, "symbol JSON file")->required();
  toeplitz->add_option("--size", size, "truncation size")->required();
  toeplitz->add_option("--out", out_path, "output matrix file (default stdout)");
  toeplitz->add_option("--window", window, "also classify at this window");

  CLI::App* hankel = app.add_subcommand("hankel", "Hankel matrix from symbol");
  hankel->add_option("--symbol", symbol_path, "symbol JSON file")->required();
  hankel->add_option("--size", size, "truncation size")->required();
  hankel->add_option("--out", out_path, "output matrix file (default stdout)");
  hankel->add_option("--window", window, "also classify at this window");

  CLI::App* spectrum = app.add_subcommand("spectrum", "singular spectrum diagram");
  spectrum->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  spectrum->add_option("--lambda", lambda_arg, "'auto' or a real level");
  spectrum->add_option("--format", format, "text, csv or json");
  spectrum->add_option("--diagram", out_path, "output file (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "random-vector slack scan");
  oracle->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  oracle->add_option("--class", cls_arg, "hypo, para or star");
  oracle->add_option("--samples", samples, "number of unit vectors");
  oracle->add_option("--seed", seed, "sampling seed");

  CLI::App* verify = app.add_subcommand("verify-paper", "regression suite");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_flag("--json", json_summary, "print the JSON summary");
  verify->add_flag("--corrupt-fixture", corrupt,
                   "negative control: perturb a fixture so the suite fails")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kInputError : kOk;
  }

  try {
    if (classify->parsed()) return cmd_classify(matrix_path, tol_membership, window);
    if (decompose->parsed()) return cmd_decompose(matrix_path, lambda_arg, adjoint, strict);
    if (toeplitz->parsed()) return cmd_toeplitz(symbol_path, size, out_path, window);
    if (hankel->parsed()) return cmd_hankel(symbol_path, size, out_path, window);
    if (spectrum->parsed()) return cmd_spectrum(matrix_path, lambda_arg, format, out_path);
    if (oracle->parsed()) return cmd_oracle(matrix_path, cls_arg, samples, seed);
    if (verify->parsed()) return cmd_verify_paper(seed, corrupt, json_summary);
  } catch (const opclass::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
