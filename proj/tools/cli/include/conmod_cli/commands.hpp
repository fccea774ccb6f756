#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "conmod_cli/format.hpp"

namespace conmod::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantViolation = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitPrecondition = 4;

int exit_code_for(ErrorKind kind);

// 64-bit FNV-1a of the raw input bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

Json verdict_to_json(const Verdict& v);
Json defect_to_json(const DefectReport& r);
Json venkatesh_to_json(const VenkateshReport& r);

// Result trees of the individual commands.
Json invariants_results(const FiniteOAlgebra& a);
Json defect_results(const AModule& m);
Json freeness_results(const AModule& m, std::string_view criterion);
Json venkatesh_results(const CIPresentation& p);

struct Report {
  std::string command;
  std::string input_digest;  // empty when the command reads no input
  Json results = Json::object();
  Json diagnostics = Json::array();
  int exit_code = kExitOk;

  Json to_json() const;
};

// Human table: one "key  value" line per leaf, nested keys joined with '.'.
std::string render_table(const Json& results);

// Entry point shared by the executable and the tests; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conmod::cli
