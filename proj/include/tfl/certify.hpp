#pragma once

#include <string>

#include <json.hpp>

#include "tfl/factors.hpp"
#include "tfl/graph.hpp"

namespace tfl {

// Self-contained JSON certificates (schema 1). Every document carries enough
// data for verify_certificate to re-check it from the graph6 string alone.
enum class CertKind { two_factor, barrier, toughness, coloring, h_construction };

CertKind parse_cert_kind(const std::string& s);

nlohmann::json certify(const Graph& g, CertKind kind, std::uint64_t budget,
                       BarrierMode barrier_mode = BarrierMode::any);

struct VerifyOutcome {
    bool ok = true;
    std::string message = "ok";
};

VerifyOutcome verify_certificate(const nlohmann::json& doc, std::uint64_t budget);

nlohmann::json barrier_to_json(const BarrierCertificate& cert);
BarrierCertificate barrier_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace tfl
