#include <CLI11.hpp>

#include <iostream>

#include "nclift/commands.hpp"
#include "nclift/errors.hpp"

using namespace nclift;

int main(int argc, char** argv) {
  CLI::App app{"Universal lifts of complexes over finite-dimensional algebras"};
  std::string command, path, field;
  std::size_t order = 0, guard = 0;
  bool as_json = false;
  app.add_option("command", command, "ext | lift | relations | abelianize | family | smallext | rho | selfcheck")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("problem", path, "problem file (JSON, schema 1)")->required();
  auto* order_opt = app.add_option("--order", order, "truncation order N (default 4)")->check(CLI::PositiveNumber);
  auto* field_opt = app.add_option("--field", field, "override the field: q or gfP");
  auto* guard_opt = app.add_option("--guard", guard, "ambient truncation for small extensions (default N+2)");
  app.add_flag("--json", as_json, "print the JSON report");
  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Field> f;
    if (*field_opt) f = Field::parse(field);
    const Problem p = parse_problem_file(path, f);
    RunOptions opt;
    opt.order = *order_opt ? order : p.options.order.value_or(4);
    if (*guard_opt) opt.guard = guard;
    else opt.guard = p.options.guard;
    const Report r = run_command(command, p, opt);
    if (as_json) std::cout << r.json.dump(2) << "\n";
    else std::cout << r.text;
    return r.ok ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error " << error_code_name(e.code()) << " at " << e.location() << ": " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 2;
  }
}
