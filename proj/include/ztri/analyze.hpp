#pragma once

#include <json.hpp>

#include "ztri/io.hpp"
#include "ztri/oracle.hpp"
#include "ztri/ultrametric.hpp"

namespace ztri {

struct AnalyzeOptions {
    Tolerance tol;
    std::size_t minor_budget = kDefaultMinorBudget;
    // Oracles (dense inverse, minor enumeration, definition classifier) run
    // only up to this order; beyond it the report carries closed forms alone.
    std::size_t oracle_order_limit = 12;
};

nlohmann::json ls_to_json(const LsClassification& c);
nlohmann::json gum_certificate_to_json(const GumCertificate& cert);

/// Full analysis report: structural flags, recognizer cascade
/// (type_d -> cyclops -> green -> ultrametric decomposition), determinant
/// and inverse with oracle cross-checks, and the L_s classification of the
/// inverse. Sets report["consistent"] = false when any closed form disagrees
/// with its oracle beyond tolerance.
nlohmann::json analyze_input(const ParsedInput& in, const AnalyzeOptions& opt = {});

}  // namespace ztri
