#pragma once

#include <json.hpp>

#include "qapery/certificates.hpp"
#include "qapery/numerics.hpp"
#include "qapery/qrat.hpp"
#include "qapery/sequences.hpp"

namespace qapery {

// Polynomials serialize as arrays of exact coefficient strings, ascending
// degree ("3", "-1", "1/2"); round-trips are bit-exact. All numeric JSON
// fields anywhere in the CLI output are strings.

nlohmann::ordered_json toJson(const QPoly& p);
QPoly qpolyFromJson(const nlohmann::json& j);

nlohmann::ordered_json toJson(const QRat& r);
QRat qratFromJson(const nlohmann::json& j);

nlohmann::ordered_json toJson(const ConvergentRecord& rec);

/// Per-spec certificate rows: one object per (identity, k) with status
/// "pass" or "mismatch"; mismatches carry printed and recovered values.
nlohmann::ordered_json toJson(const CertificateReport& rep);

nlohmann::ordered_json intervalJson(const Interval& v, long digits);

}  // namespace qapery
