#include "report.hpp"

#include <sstream>

#include "indseq/error.hpp"

namespace indseq::cli {

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  if (p.is_zero()) a.push_back("0");
  return a;
}

Json to_json(const ParamPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const AlgebraicNumber& a) {
  Json j;
  j["closed_form"] = a.to_string();
  j["decimal"] = a.decimal(12);
  j["isolating_interval"] = Json::array({to_json(a.lower()), to_json(a.upper())});
  return j;
}

Json to_json(const SequenceVerdict& v) {
  Json j;
  j["unimodal"] = v.unimodal;
  j["mode_index"] = v.mode_index ? Json(*v.mode_index) : Json(nullptr);
  j["log_concave"] = v.log_concave;
  j["lc_plus"] = v.lc_plus;
  j["real_roots"] = v.real_roots ? Json(*v.real_roots) : Json("not computed");
  if (v.first_violation) {
    j["first_violation"] = {{"index", v.first_violation->index}, {"kind", to_string(v.first_violation->kind)}};
  } else {
    j["first_violation"] = nullptr;
  }
  j["sequence_length"] = v.sequence_length;
  return j;
}

Json to_json(const IntervalVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["threshold"] = v.threshold ? to_json(*v.threshold) : Json(nullptr);
  j["witness_q"] = v.witness_q ? to_json(*v.witness_q) : Json(nullptr);
  if (v.violated) {
    j["violated_constraint"] = {{"index", v.violated->index}, {"kind", to_string(v.violated->kind)}};
  } else {
    j["violated_constraint"] = nullptr;
  }
  Json deg = Json::array();
  for (const auto& d : v.degenerate_points) {
    deg.push_back({{"q", d.q.to_string()}, {"index", d.index}, {"reason", d.reason}});
  }
  j["degenerate_points"] = deg;
  return j;
}

Json to_json(const BoxCertificate& c) {
  Json j;
  j["holds"] = c.holds;
  j["conclusive"] = c.conclusive;
  j["method"] = to_string(c.method);
  j["boxes_examined"] = c.boxes_examined;
  if (c.violated) {
    j["violated_constraint"] = {{"index", c.violated->index}, {"kind", to_string(c.violated->kind)}};
  }
  if (c.witness) j["witness"] = Json::array({to_json(c.witness->first), to_json(c.witness->second)});
  Json margins = Json::array();
  for (const auto& m : c.margins) {
    margins.push_back({{"index", m.index},
                       {"kind", to_string(m.kind)},
                       {"margin", m.margin ? to_json(*m.margin) : Json(nullptr)}});
  }
  j["margins"] = margins;
  return j;
}

namespace {

Json interval_json(const RationalInterval& r) { return Json::array({to_json(r.lo), to_json(r.hi)}); }

}  // namespace

Json to_json(const ClusterCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["certified"] = c.certified;
  j["failing_cluster"] = c.failing_cluster ? Json(*c.failing_cluster) : Json(nullptr);
  Json clusters = Json::array();
  for (const auto& cl : c.clusters) {
    Json k;
    k["kind"] = to_string(cl.kind);
    k["members"] = cl.members;
    Json enc = Json::array();
    for (const auto& e : cl.enclosures) enc.push_back(interval_json(e));
    k["q_enclosures"] = enc;
    k["holds"] = cl.holds;
    if (cl.box) k["box"] = to_json(*cl.box);
    if (cl.single) k["single"] = to_json(*cl.single);
    clusters.push_back(k);
  }
  j["clusters"] = clusters;
  j["direct"] = to_json(c.direct);
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["s"] = r.s;
  j["e"] = r.e;
  j["case"] = r.case_s_ge_e ? "s>=e" : "s<e";
  j["all_hold"] = r.all_hold;
  Json rel = Json::array();
  for (const auto& x : r.relations) {
    Json k;
    k["name"] = x.name;
    k["statement"] = x.statement;
    k["q_range"] = interval_json(x.q_range);
    k["strict"] = x.strict;
    k["q_dependent"] = x.q_dependent;
    k["verdict"] = to_json(x.verdict);
    rel.push_back(k);
  }
  j["relations"] = rel;
  return j;
}

Json to_json(const Thm7Verdict& v) {
  Json j;
  j["certified"] = v.certified;
  j["covers"] = v.certified ? "all n >= 0" : "none";
  j["p"] = to_json(v.p);
  j["p_verdict"] = to_json(v.p_verdict);
  j["fq"] = to_json(v.fq);
  j["fq_text"] = to_string(v.fq);
  j["fq_verdict"] = to_json(v.fq_verdict);
  return j;
}

Json to_json(const Thm8Item1Verdict& v) {
  Json j;
  j["s"] = v.s;
  j["e"] = v.e;
  j["certified"] = v.certified;
  j["route"] = to_string(v.route);
  j["p_lc_plus"] = v.p_lc_plus;
  j["contradiction"] = v.contradiction;
  j["note"] = v.note;
  j["relations"] = to_json(v.relations);
  j["direct_fq"] = to_json(v.direct_fq);
  if (!v.clusters.empty()) {
    Json c = Json::array();
    for (const auto& cert : v.clusters) c.push_back(to_json(cert));
    j["clusters"] = c;
  }
  return j;
}

Json to_json(const Thm8Item2Verdict& v) {
  Json j;
  j["k"] = v.k;
  j["certified"] = v.certified;
  j["route"] = to_string(v.route);
  j["note"] = v.note;
  j["direct"] = to_json(v.direct);
  if (v.full_box) j["full_box"] = to_json(*v.full_box);
  if (v.singleton) j["singleton_range"] = to_json(*v.singleton);
  if (!v.clusters.empty()) {
    Json c = Json::array();
    for (const auto& cert : v.clusters) c.push_back(to_json(cert));
    j["clusters"] = c;
  }
  return j;
}

Json to_json(const MinimalSearch& m) {
  Json j;
  j["first"] = m.first ? Json(*m.first) : Json(nullptr);
  j["start"] = m.start;
  j["limit"] = m.limit;
  Json per = Json::array();
  for (bool b : m.per_value) per.push_back(b);
  j["per_value"] = per;
  j["relapses"] = m.relapses;
  j["monotone_after_first"] = m.relapses.empty();
  j["cross_check_failed"] = m.cross_check_failed;
  return j;
}

Json to_json(const FinalThirdResult& f) {
  Json j;
  j["holds"] = f.holds;
  j["alpha"] = f.alpha;
  j["start_index"] = f.start_index;
  j["violation_index"] = f.violation_index ? Json(*f.violation_index) : Json(nullptr);
  return j;
}

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("polynomial must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (x.is_string()) {
      c.emplace_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      c.emplace_back(x.get<long>());
    } else {
      throw Error("polynomial coefficient must be a decimal string or integer");
    }
  }
  return IntPoly(std::move(c));
}

ParamPoly param_poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("parametric polynomial must be an array of arrays");
  std::vector<QCoeff> c;
  for (const auto& x : j) c.push_back(int_poly_from_json(x));
  return ParamPoly(std::move(c));
}

namespace {

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto all_scalar = [](const Json& arr) {
    for (const auto& x : arr) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !all_scalar(v))) {
        out << pad << k << ":\n";
        render(v, indent + 1, out);
      } else if (v.is_array()) {
        out << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      out << pad << "-\n";
      render(v, indent + 1, out);
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        cur += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> header, bool resume)
    : header_(std::move(header)) {
  std::string kept;
  if (resume) {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const std::size_t last_nl = content.rfind('\n');
      kept = last_nl == std::string::npos ? std::string() : content.substr(0, last_nl + 1);
      std::istringstream lines(kept);
      std::string line;
      bool first = true;
      while (std::getline(lines, line)) {
        if (first) {
          if (line != csv_line(header_)) throw Error("cannot resume " + path + ": header does not match");
          first = false;
          continue;
        }
        existing_.push_back(split_csv_line(line));
      }
    }
  }
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error("cannot open " + path + " for writing");
  if (kept.empty()) {
    out_ << csv_line(header_) << '\n';
  } else {
    out_ << kept;
  }
  out_.flush();
}

void CsvWriter::write(const std::vector<std::string>& row) {
  out_ << csv_line(row) << '\n';
  out_.flush();
  if (!out_) throw Error("CSV write failed");
}

std::string compact_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string compact_poly(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ';';
    out += p.coeffs()[i].get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace indseq::cli
