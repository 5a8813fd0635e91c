#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gschur/cli/io.hpp"

namespace gschur {

enum class Format { GapText, Json };
enum class Route { Fock, Hecke, Both };

struct CommandResult {
  std::string output;
  std::string warnings;
  int exit_code = 0;
};

struct DecompArgs {
  int n = 0;
  int e = 0;
  Format format = Format::GapText;
  Convention convention = Convention::V;
  Route route = Route::Fock;
  bool allow_small_e = false;
  bool classical = false;
  std::optional<int> pad = std::nullopt;
};

struct CanonicalArgs {
  int n = 0;
  int e = 0;
  Format format = Format::GapText;
  bool restricted_only = false;
  bool allow_small_e = false;
  std::optional<int> pad = std::nullopt;
};

struct SpechtArgs {
  Partition shape{};
  int e = 0;
  Format format = Format::GapText;
};

inline const std::vector<std::string> kAllSuites = {"relations", "grading", "characters", "two-route",
                                                   "fock-commutators"};

struct VerifyArgs {
  int n_max = 0;
  std::vector<int> e_list;
  std::vector<std::string> suites = kAllSuites;
  Format format = Format::GapText;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyRecord {
  std::string suite;
  int n = 0;
  int e = 0;
  std::string subject;
  bool ok = true;
  std::string detail;
};

CommandResult cmd_decomp(const DecompArgs& args);
CommandResult cmd_canonical(const CanonicalArgs& args);
CommandResult cmd_specht(const SpechtArgs& args);
CommandResult cmd_verify(const VerifyArgs& args);

/// The records of a verify run in deterministic order, for callers that
/// want to inspect them directly.
std::vector<VerifyRecord> run_verify(const VerifyArgs& args);

/// "all" expands to every suite; unknown names raise PreconditionViolation.
std::vector<std::string> parse_suites(const std::vector<std::string>& names);

}  // namespace gschur
