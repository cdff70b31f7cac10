#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "holonet/char_class.hpp"
#include "holonet/linalg.hpp"

namespace holonet::cli {

struct BundleSection {
  Index dim = 1;
  /// (lower, upper, U); strict pairs that are not listed carry the identity.
  std::vector<std::tuple<std::string, std::string, Matrix>> edges;
  /// Constant color grading, if any.
  std::optional<Matrix> grading;

  bool operator==(const BundleSection&) const = default;
};

/// One holonomy generator: a matrix, exact eigenphases (the matrix is then
/// diagonal), or both (the phases annotate the matrix).
struct GeneratorSection {
  std::optional<Matrix> matrix;
  std::optional<std::vector<ExactPhase>> phases;

  bool operator==(const GeneratorSection&) const = default;
};

struct RepresentationSection {
  Index dim = 1;
  std::vector<GeneratorSection> generators;

  bool operator==(const RepresentationSection&) const = default;
};

struct ModuleSection {
  std::string type = "shift";  // shift | sector | dense
  std::vector<Index> dims;      // sector blocks
  Index iota_colors = 1;
  Index cyclic = 0;
  std::optional<Matrix> F;        // dense: operator at the base
  std::optional<Matrix> grading;  // dense: color grading

  bool operator==(const ModuleSection&) const = default;
};

struct TripleSection {
  Matrix grading;
  Matrix D;
  double beta = 1.0;

  bool operator==(const TripleSection&) const = default;
};

struct InputDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  std::optional<std::string> base;
  std::vector<std::pair<std::string, double>> irrationals;
  std::optional<BundleSection> bundle;
  std::optional<RepresentationSection> representation;
  std::optional<ModuleSection> module;
  std::optional<TripleSection> triple;

  bool operator==(const InputDocument&) const = default;
};

/// Throws SyntaxError (with line and column), SchemaError (with a JSON
/// pointer), ReferenceError.
InputDocument parse_input(std::string_view text);
InputDocument parse_input_file(const std::string& path);

/// Canonical JSON text; parse_input(print_document(d)) == d.
std::string print_document(const InputDocument& d);

enum class Format { Json, Text };

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // identity-class checks only
  Format format = Format::Json;
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 verdict failure, 2 input error
  std::string output;
};

const std::vector<std::string>& commands();

/// Throws UnknownCommand and input errors; module errors raised while
/// computing are reported as a failed verdict.
RunResult run(const std::string& command, const InputDocument& doc, const RunOptions& options = {});

/// Whole pipeline on raw text with errors mapped to exit code 2.
RunResult run_text(const std::string& command, std::string_view text, const RunOptions& options = {});

}  // namespace holonet::cli
