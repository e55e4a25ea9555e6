#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "nclift/complexes.hpp"

namespace nclift {

struct ProblemOptions {
  std::optional<std::size_t> order;
  std::optional<std::size_t> guard;
  std::optional<std::pair<int, int>> presentation;  // {source, target}
};

/// A validated problem file (schema 1).
struct Problem {
  std::string name;
  Field field;
  std::optional<std::size_t> truncated_poly;  // set when given as truncated_poly m
  std::shared_ptr<const Algebra> algebra;
  std::shared_ptr<const ChainComplex> complex;
  ProblemOptions options;
};

inline constexpr int kSchemaVersion = 1;

/// Errors are InputError with a dotted location ("complex.differentials.2[0][1]")
/// or "line L, column C" for malformed JSON. field_override replaces the
/// problem's field; scalars are re-read in the new field.
Problem parse_problem(const nlohmann::json& j, std::optional<Field> field_override = std::nullopt);
Problem parse_problem_text(const std::string& text, std::optional<Field> field_override = std::nullopt);
Problem parse_problem_file(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Canonical echo; parse_problem(problem_to_json(p)) reproduces p.
nlohmann::json problem_to_json(const Problem& p);

}  // namespace nclift
