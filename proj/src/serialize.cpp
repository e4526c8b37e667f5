#include "qapery/serialize.hpp"

namespace qapery {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json toJson(const QPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(toString(c));
    return arr;
}

QPoly qpolyFromJson(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.push_back(ratFromString(e.get<std::string>()));
    return QPoly(std::move(coeffs));
}

ordered_json toJson(const QRat& r) {
    ordered_json out;
    out["num"] = toJson(r.num());
    out["den"] = toJson(r.den());
    return out;
}

QRat qratFromJson(const json& j) {
    return QRat(qpolyFromJson(j.at("num")), qpolyFromJson(j.at("den")));
}

ordered_json toJson(const ConvergentRecord& rec) {
    ordered_json out;
    out["scheme"] = std::string(schemeName(rec.scheme));
    out["n"] = rec.n;
    out["a"] = toJson(rec.a);
    out["b"] = toJson(rec.b);
    if (rec.integralityChecked) {
        out["normalized_a"] = toJson(rec.normalizedA);
        out["normalized_b"] = toJson(rec.normalizedB);
        out["integral"] = rec.integralityOk;
        if (!rec.integralityOk) out["integrality_note"] = rec.integralityNote;
    }
    out["deg_b"] = rec.degB ? ordered_json(*rec.degB) : ordered_json(nullptr);
    out["deg_z"] = rec.degZ ? ordered_json(*rec.degZ) : ordered_json(nullptr);
    return out;
}

ordered_json toJson(const CertificateReport& rep) {
    ordered_json rows = ordered_json::array();
    auto emit = [&](const char* identity, const std::vector<std::pair<long, bool>>& idRows,
                    const std::vector<CertificateDiscrepancy>& discs) {
        for (const auto& [k, ok] : idRows) {
            ordered_json row;
            row["scheme"] = std::string(schemeName(rep.scheme));
            row["n"] = rep.n;
            row["identity"] = identity;
            row["k"] = k;
            const CertificateDiscrepancy* d = nullptr;
            for (const auto& e : discs)
                if (e.k == k) { d = &e; break; }
            row["status"] = (d == nullptr) ? "pass" : "mismatch";
            if (d) {
                row["printed"] = toJson(d->printed);
                row["recovered"] = toJson(d->recovered);
            }
            (void)ok;
            rows.push_back(std::move(row));
        }
    };
    emit("B", rep.bIdentityRows, rep.bDiscrepancies);
    emit("A", rep.aIdentityRows, rep.aDiscrepancies);

    ordered_json out;
    out["scheme"] = std::string(schemeName(rep.scheme));
    out["n"] = rep.n;
    out["k_min"] = rep.kMin;
    out["k_max"] = rep.kMax;
    out["rows"] = std::move(rows);
    out["summed_B_zero"] = rep.summedBZero;
    out["summed_A_zero"] = rep.summedAZero;
    out["recovered_telescopes"] = rep.recoveredTelescopes;
    out["resolved_matches_recovered"] = rep.resolvedMatchesRecovered;
    out["printed_all_match"] = rep.printedAllMatch();
    return out;
}

ordered_json intervalJson(const Interval& v, long digits) {
    ordered_json out;
    out["value"] = v.valueString(digits);
    out["radius"] = v.radiusString();
    out["precision_bits"] = std::to_string(v.precision());
    return out;
}

}  // namespace qapery
