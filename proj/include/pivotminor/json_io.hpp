#ifndef PIVOTMINOR_JSON_IO_HPP
#define PIVOTMINOR_JSON_IO_HPP

#include <json.hpp>

#include "pivotminor/certificate.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

nlohmann::json sequence_to_json(const PivotMinorSequence& seq);
PivotMinorSequence sequence_from_json(const nlohmann::json& j);

/// The certificate document: input graph6, target graph6 and key, ordered
/// obstruction vertices, step list, bijection, and the canonical keys.
nlohmann::json certificate_to_json(const Graph& input, const Certificate& cert, const Graph& target);

struct CertificateDocument {
  Graph input;
  Graph target;
  Certificate certificate;
};

/// Throws std::invalid_argument on a structurally malformed document.
CertificateDocument certificate_from_json(const nlohmann::json& j);

}  // namespace pivotminor

#endif
