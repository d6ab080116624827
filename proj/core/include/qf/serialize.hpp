#ifndef QF_SERIALIZE_HPP
#define QF_SERIALIZE_HPP

#include <json.hpp>

#include "qf/analysis.hpp"
#include "qf/gl2.hpp"
#include "qf/quandle.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

/// [[re, im] x4] in row-major (a, b, c, d) order.
Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json to_json(const WitnessReport& report);
Json to_json(const AxiomReport& report);
Json to_json(const IsoResult& result);

/// {name, size, latin, orbits, degree, type, rank}; degree is null when the
/// table is disconnected.
Json analysis_report(const QuandleTable& t);

std::string csv_escape(const std::string& field);
/// Flat key/value CSV rendering of a JSON object (one header line, one row).
std::string json_to_csv(const Json& j);
/// Indented plain-text rendering.
std::string json_to_text(const Json& j);

}  // namespace qf

#endif
