#include "cyclecut/serialize.hpp"

namespace cyclecut {

namespace {

Record opt_int(const std::optional<int>& v) {
  return v ? Record(*v) : Record(nullptr);
}

}  // namespace

Record constraints_json(const EnumerationConstraints& c) {
  Record j;
  j["n"] = c.n;
  j["connected_only"] = c.connected_only;
  j["min_degree"] = opt_int(c.min_degree);
  j["min_connectivity"] = opt_int(c.min_connectivity);
  j["max_edges"] = opt_int(c.max_edges);
  j["min_edges"] = opt_int(c.min_edges);
  j["require_neighborhood_cycles"] = c.require_neighborhood_cycles;
  return j;
}

Record bound_report_json(const BoundReport& r) {
  Record j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["v3_size"] = r.v3_size;
  j["lhs_handshake"] = r.lhs_handshake;
  j["rhs_eq1"] = r.rhs_eq1;
  j["rhs_eq2"] = r.rhs_eq2;
  j["eq1_holds"] = r.eq1_holds;
  j["eq2_holds"] = r.eq2_holds;
  j["final_lhs"] = r.final_lhs;
  j["final_rhs"] = r.final_rhs;
  j["bound_holds"] = r.bound_holds;
  Record fails = Record::array();
  for (const StepFailure& f : r.step_failures) {
    Record e;
    e["step"] = f.step;
    e["witness"] = f.witness;
    fails.push_back(e);
  }
  j["step_failures"] = fails;
  return j;
}

Record cut_certificate_json(const std::optional<CutCertificate>& cert) {
  Record j;
  if (!cert) {
    j["cut"] = nullptr;
    j["component_count_after_removal"] = nullptr;
    return j;
  }
  j["cut"] = cert->cut.members();
  j["component_count_after_removal"] = cert->component_count_after_removal;
  return j;
}

}  // namespace cyclecut
