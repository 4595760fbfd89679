#ifndef CYCLECUT_SERIALIZE_HPP
#define CYCLECUT_SERIALIZE_HPP

#include <json.hpp>

#include "cyclecut/cuts.hpp"
#include "cyclecut/enumeration.hpp"
#include "cyclecut/verifier.hpp"

namespace cyclecut {

// All CLI records use nlohmann::ordered_json so key order is stable and
// output diffs cleanly.
using Record = nlohmann::ordered_json;

Record constraints_json(const EnumerationConstraints& c);
Record bound_report_json(const BoundReport& r);
Record cut_certificate_json(const std::optional<CutCertificate>& cert);

}  // namespace cyclecut

#endif
