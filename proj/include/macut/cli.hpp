#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "macut/polytope.hpp"
#include "macut/simplicial_complex.hpp"

namespace macut::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kResourceLimit = 3 };

enum class Format { Table, Json, Csv };

/// Bad command line or input description.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobOptions {
  int workers = 1;
  int max_exponent = 22;
  Format format = Format::Table;
  std::optional<std::string> output_path;
  std::optional<unsigned long long> seed;
};

/// A parsed input: either a polytope or a bare simplicial complex.
struct Input {
  std::variant<SimplePolytope, SimplicialComplex> object;
  std::string description;

  const SimplePolytope* polytope() const { return std::get_if<SimplePolytope>(&object); }
};

/**
 * Parses one input expression from `tokens` starting at `pos`, advancing it.
 *
 *   expr := "simplex" N | "polygon" M | "cube" N
 *         | "product" expr expr | "cut-vertex" expr V
 *         | "file" PATH | PATH | "(" expr ")"
 *
 * Parentheses may be glued to neighbouring tokens ("(polygon", "4)").
 */
Input parse_input(const std::vector<std::string>& tokens, std::size_t& pos);

/// Splits parentheses off into their own tokens.
std::vector<std::string> tokenize(const std::vector<std::string>& args);

struct CorpusCase {
  std::string name;
  SimplePolytope polytope;
};

/// Polytopes the surgery formula is checked on by `verify-corpus`.
std::vector<CorpusCase> verification_corpus();

/// Full command-line entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macut::cli
