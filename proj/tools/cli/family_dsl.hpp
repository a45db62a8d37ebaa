#pragma once

// Family expressions such as "doublestar(s=0,e=1)" or
// "concat2(doublestar(1,2), n=4)".

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indseq/graph.hpp"

namespace indseq::cli {

class DslError : public std::runtime_error {
 public:
  DslError(std::size_t pos, const std::string& msg)
      : std::runtime_error("at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct Expr;

struct Arg {
  std::optional<std::string> key;
  std::size_t pos = 0;
  std::optional<long long> number;
  std::shared_ptr<Expr> expr;
};

struct Expr {
  std::string name;
  std::size_t pos = 0;
  std::vector<Arg> args;
};

/// Parses the whole string; trailing input is an error.
Expr parse_family(const std::string& text);

/// Builds the graph, with marks v (default 0) and optionally w. Any family
/// accepts v= and w= to override its default marks.
MarkedGraph evaluate(const Expr& e);
MarkedGraph build_family(const std::string& text);

/// Names accepted by evaluate(), for help output.
std::string family_help();

}  // namespace indseq::cli
