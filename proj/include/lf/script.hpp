#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lf/error.hpp"
#include "lf/kernel.hpp"

// Proof scripts: a header naming the theory, then labelled rule applications
// replayed through the kernel. See docs/script-format.md for the grammar.
namespace lf::script {

struct Step {
  std::string label;
  std::string rule;
  std::vector<std::string> premises;  // labels of earlier steps
  std::vector<std::string> args;      // term, variable, type, integer or path text
  std::optional<std::string> expected;
  int line = 0;
};

struct Script {
  std::optional<std::string> theory;
  std::vector<std::string> disabled;
  std::vector<std::pair<std::string, int>> axioms;  // sentence text, line
  std::vector<Step> steps;
  std::string qed;
  int qed_line = 0;
};

// Throws ScriptError ("line N: ...") on malformed lines, duplicate labels,
// references to labels not yet defined and a missing qed.
Script parse_script(std::string_view text);

struct RunOptions {
  std::optional<std::string> theory;  // replaces the header's theory
  std::vector<std::string> disable;   // on top of the header's disable lines
};

struct StepResult {
  std::string label;
  std::string rule;
  int line = 0;
  Sequent sequent;
  double millis = 0;
};

struct Outcome {
  int exit_code = 0;
  std::string theory;
  std::vector<StepResult> steps;
  std::optional<Term> theorem;
  std::vector<std::string> axioms_used;
  std::size_t nodes = 0;

  std::optional<ErrorCode> error;
  std::string message;
  // the failing step, when the failure belongs to one
  std::string failed_label;
  std::string failed_rule;
  int failed_line = 0;

  double millis = 0;
};

Outcome run(std::string_view text, const RunOptions& opts = {});
// A missing or unreadable file is a ScriptError.
Outcome run_file(const std::string& path, const RunOptions& opts = {});

// 1 syntax, 2 elaboration, 3 rule failure, 4 undischarged assumption,
// 5 rule disabled.
int exit_code(ErrorCode code);

// Every rule name a step may use, lib.* entries excluded.
std::vector<std::string> rule_names();

}  // namespace lf::script
