#pragma once

// JSON and CSV rendering of library results. Integers that may exceed 64
// bits are written as decimal strings.

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "indseq/clustering.hpp"
#include "indseq/relations.hpp"
#include "indseq/scans.hpp"
#include "indseq/theorems.hpp"

namespace indseq::cli {

using Json = nlohmann::ordered_json;

Json to_json(const IntPoly& p);
Json to_json(const ParamPoly& p);
Json to_json(const Rational& r);
Json to_json(const AlgebraicNumber& a);
Json to_json(const SequenceVerdict& v);
Json to_json(const IntervalVerdict& v);
Json to_json(const BoxCertificate& c);
Json to_json(const ClusterCertificate& c);
Json to_json(const RelationReport& r);
Json to_json(const Thm7Verdict& v);
Json to_json(const Thm8Item1Verdict& v);
Json to_json(const Thm8Item2Verdict& v);
Json to_json(const MinimalSearch& m);
Json to_json(const FinalThirdResult& f);

IntPoly int_poly_from_json(const Json& j);
ParamPoly param_poly_from_json(const Json& j);

/// Indented "key: value" rendering for --format text.
std::string render_text(const Json& j);

/// Append-only CSV with one flushed line per row. With `resume`, complete
/// rows already in the file are kept (a trailing partial line is dropped)
/// and returned by existing_rows().
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> header, bool resume);

  const std::vector<std::vector<std::string>>& existing_rows() const { return existing_; }
  void write(const std::vector<std::string>& row);

 private:
  std::ofstream out_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> existing_;
};

std::string csv_line(const std::vector<std::string>& fields);
std::vector<std::string> split_csv_line(const std::string& line);

/// Edge list on one line: "n:u-v;u-v;...".
std::string compact_edge_list(const Graph& g);
/// Coefficients joined by ';'.
std::string compact_poly(const IntPoly& p);

}  // namespace indseq::cli
