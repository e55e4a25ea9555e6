#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nclift/lifting.hpp"
#include "nclift/problem.hpp"

namespace nclift {

struct RunOptions {
  std::size_t order = 4;
  std::optional<std::size_t> guard;  // default order + 2
};

struct Report {
  nlohmann::json json;
  std::string text;
  bool ok = true;  // false when a check failed (exit code 2)
};

const std::vector<std::string>& command_names();

/// Universal lift with verify_lift and the relation bound asserted after
/// every order; failures throw InvariantViolation.
LiftState checked_lift(const Problem& p, std::size_t order, const std::optional<KMatrix>& basis_change = std::nullopt);

/// Unknown commands throw InputError(BadArgument).
Report run_command(const std::string& command, const Problem& p, const RunOptions& opt);

}  // namespace nclift
