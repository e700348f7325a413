#include "pivotminor/json_io.hpp"

#include <stdexcept>

#include "pivotminor/io.hpp"
#include "pivotminor/version.hpp"

namespace pivotminor {

using nlohmann::json;

json sequence_to_json(const PivotMinorSequence& seq) {
  json out = json::array();
  for (const SequenceStep& s : seq) {
    if (s.op == SequenceStep::Op::pivot_edge)
      out.push_back({{"op", "pivot"}, {"u", s.u}, {"v", s.v}});
    else
      out.push_back({{"op", "delete"}, {"v", s.u}});
  }
  return out;
}

PivotMinorSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
  PivotMinorSequence out;
  for (const json& step : j) {
    const std::string op = step.at("op").get<std::string>();
    if (op == "pivot")
      out.push_back(SequenceStep::pivot_edge(step.at("u").get<int>(), step.at("v").get<int>()));
    else if (op == "delete")
      out.push_back(SequenceStep::delete_vertex(step.at("v").get<int>()));
    else
      throw std::invalid_argument("unknown sequence op '" + op + "'");
  }
  return out;
}

json certificate_to_json(const Graph& input, const Certificate& cert, const Graph& target) {
  return {
      {"format", "pivotminor-certificate"},
      {"tool", kToolName},
      {"version", kToolVersion},
      {"input_graph6", emit_graph6(input)},
      {"target_graph6", emit_graph6(target)},
      {"target_key", canonical_key(target).graph6},
      {"obstruction_vertices", cert.obstruction_vertices},
      {"obstruction_key", cert.obstruction_key.graph6},
      {"obstruction_name", cert.obstruction_name},
      {"sequence", sequence_to_json(cert.sequence)},
      {"bijection", cert.target_isomorphism},
  };
}

CertificateDocument certificate_from_json(const json& j) {
  try {
    CertificateDocument doc;
    doc.input = parse_graph6(j.at("input_graph6").get<std::string>());
    doc.target = parse_graph6(j.at("target_graph6").get<std::string>());
    Certificate& c = doc.certificate;
    c.obstruction_vertices = j.at("obstruction_vertices").get<std::vector<int>>();
    c.obstruction_key = CanonicalKey{j.value("obstruction_key", std::string{})};
    c.obstruction_name = j.value("obstruction_name", std::string{});
    c.sequence = sequence_from_json(j.at("sequence"));
    c.target_isomorphism = j.at("bijection").get<Bijection>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace pivotminor
