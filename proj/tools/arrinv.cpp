// arrinv: exact combinatorial invariants of affine hyperplane arrangements.
//
// Exit codes: 0 success (verify: all checks passed), 1 verification failure
// or unexpected error, 2 input parse error, 3 invalid arrangement (duplicate
// hyperplane or zero normal), 4 internal cross-check inconsistency.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "arrinv/arrinv.hpp"

namespace {

int run_analyze(const std::string& path, const std::string& format, bool trace) {
  arrinv::ArrangementInput input = arrinv::load_arrangement_file(path);
  arrinv::Arrangement a = arrinv::to_arrangement(input);
  arrinv::InvariantReport report = arrinv::analyze(a);

  arrinv::RecursionTrace trace_tree;
  const arrinv::RecursionTrace* trace_ptr = nullptr;
  if (trace) {
    trace_tree = arrinv::length_by_recursion_traced(a);
    trace_ptr = &trace_tree;
  }

  std::string name = input.name.empty() ? path : input.name;
  if (format == "json")
    std::cout << arrinv::report_to_json(name, a, report, trace_ptr).dump(2) << "\n";
  else
    std::cout << arrinv::report_to_text(name, a, report, trace_ptr);
  return 0;
}

int run_verify(const std::string& path) {
  arrinv::ArrangementInput input = arrinv::load_arrangement_file(path);
  arrinv::Arrangement a = arrinv::to_arrangement(input);
  arrinv::VerificationReport report = arrinv::run_verification(a);
  std::cout << report.text();
  return report.failures == 0 ? 0 : 1;
}

int run_random(const arrinv::RandomSpec& spec, const std::string& format) {
  arrinv::ArrangementInput input = arrinv::random_arrangement(spec);
  if (format == "json")
    std::cout << arrinv::format_arrangement_json(input);
  else
    std::cout << arrinv::format_arrangement_text(input);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection-poset, Poincare-polynomial and local-cohomology "
               "invariants of affine hyperplane arrangements over Q"};
  app.require_subcommand(1);

  std::string analyze_path;
  std::string analyze_format = "text";
  bool analyze_trace = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "compute flats, Mobius values, Poincare polynomial, "
                                    "length and multiplicity");
  analyze_cmd->add_option("file", analyze_path, "arrangement file (.json or text format)")
      ->required();
  analyze_cmd->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--trace", analyze_trace, "include the deletion-restriction recursion tree");

  std::string verify_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every internal identity check against the arrangement");
  verify_cmd->add_option("file", verify_path, "arrangement file (.json or text format)")
      ->required();

  arrinv::RandomSpec spec;
  std::string random_format = "text";
  CLI::App* random_cmd =
      app.add_subcommand("random", "emit a deterministic pseudo-random arrangement file");
  random_cmd->add_option("--seed", spec.seed, "generator seed")->default_val(1);
  random_cmd->add_option("--dim", spec.dim, "ambient dimension (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--count", spec.count, "number of hyperplanes")->required();
  random_cmd->add_option("--degenerate", spec.degenerate_fraction,
                         "fraction of hyperplanes forced through existing flats")
      ->default_val(0.0)
      ->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--format", random_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_path, analyze_format, analyze_trace);
    if (verify_cmd->parsed()) return run_verify(verify_path);
    return run_random(spec, random_format);
  } catch (const arrinv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const arrinv::DuplicateHyperplaneError& e) {
    std::cerr << "invalid arrangement: " << e.what() << "\n";
    return 3;
  } catch (const arrinv::ZeroNormalError& e) {
    std::cerr << "invalid arrangement: " << e.what() << "\n";
    return 3;
  } catch (const arrinv::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
