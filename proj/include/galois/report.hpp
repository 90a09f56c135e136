#ifndef GALOIS_REPORT_HPP
#define GALOIS_REPORT_HPP

#include <json.hpp>
#include <string>

#include "galois/pipeline.hpp"

namespace galois {

enum class Command { Group, Resolvent, Roots, Fixed, Verify };

/// Stable JSON form of a run.  Exact integers are decimal strings.  Stage
/// timings are included only when `with_timings` is set, so that repeated
/// runs produce identical bytes by default.
nlohmann::ordered_json report_json(const RunReport& report, bool with_timings);

/// Human-readable output of one subcommand.
std::string render_text(const RunReport& report, Command command, bool with_timings);

/// Coefficients highest degree first, as decimal strings.
nlohmann::ordered_json coefficients_json(const IntPolynomial& p);

}  // namespace galois

#endif  // GALOIS_REPORT_HPP
