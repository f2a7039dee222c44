#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pdiag/area.hpp"
#include "pdiag/cli/document.hpp"
#include "pdiag/cli/render.hpp"
#include "pdiag/cli/verify.hpp"

namespace pdiag::cli {

// Exit status shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct AreaRequest {
  Integer q = 2;
  std::int64_t n = 0;
  std::int64_t k = 2;
  std::string method = "general";  // closed | general | shoelace | pick | all
  OutputFormat format = OutputFormat::csv;
  unsigned digits = kDefaultDigits;
  std::uint64_t pick_budget = kDefaultPickBudget;
};

struct TableRequest {
  std::int64_t k = 2;
  std::int64_t n = 0;
  Integer q_from = 2;
  Integer q_to = 16;
  OutputFormat format = OutputFormat::csv;
  unsigned digits = kDefaultDigits;
};

struct DiffRequest {
  std::int64_t k = 2;
  std::int64_t n = 0;
  Integer q_from = 1;
  Integer q_to = 10;
  unsigned order = 2;
  OutputFormat format = OutputFormat::csv;
  unsigned digits = kDefaultDigits;
};

struct RenderRequest {
  Integer q = 2;
  std::int64_t n = 0;
  std::int64_t k = 2;
  RenderSpec spec;
  std::optional<std::string> out_path;  // stdout when empty
};

int cmd_area(const AreaRequest& request, std::ostream& out, std::ostream& err);
int cmd_table(const TableRequest& request, std::ostream& out, std::ostream& err);
int cmd_diff(const DiffRequest& request, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyRequest& request, OutputFormat format, std::ostream& out,
               std::ostream& err);
int cmd_render(const RenderRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdiag::cli
