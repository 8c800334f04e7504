#pragma once

#include <string>

#include <json.hpp>

#include "raagfix/fixpoint.hpp"

namespace raagfix {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Json graph_to_json(const ContextPtr& ctx);
Json classification_to_json(const ContextPtr& ctx, const Classification& cls);
Json morphism_to_json(const Morphism& phi);
Json verdict_to_json(const ContextPtr& ctx, const Verdict& v);
Json matrix_to_json(const IntMatrix& m);
Json lattice_to_json(const Lattice& l);
Json certificate_to_json(const ContextPtr& ctx, const AutoCertificate& cert);
Json projection_report_to_json(const ContextPtr& ctx, const ProjectionReport& rep);
Json chain_report_to_json(const ContextPtr& ctx, const ChainReport& rep);
Json per_power_report_to_json(const PerPowerReport& rep);

// Bundled end-to-end scenarios; names: thm-endo, thm-auto, ex-fgyes, ex-fgno.
Json demo_report(const std::string& name);

// Canonical byte rendering of a report (sorted keys, two-space indent).
std::string dump_report(const Json& report);

// Structured plain-text rendering of the same data.
std::string render_text(const Json& report);

} // namespace raagfix
