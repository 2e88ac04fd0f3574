#include "json_io.hpp"

#include <cmath>

namespace chipfire::cli {

json to_json(const srg::SrgParams& p) { return {{"n", p.n}, {"k", p.k}, {"a", p.a}, {"c", p.c}}; }

json to_json(const FamilyTag& tag) {
  return {{"family", tag.spec.to_string()},
          {"display_name", tag.display_name},
          {"vertex_transitive", tag.vertex_transitive},
          {"claimed_srg", tag.claimed_srg ? to_json(*tag.claimed_srg) : json(nullptr)}};
}

json to_json(const GameTrace& t, const FiringStrategy& strategy, std::int64_t cutoff_used) {
  return {{"s", t.s},
          {"x", t.x},
          {"final", t.final.chips},
          {"strategy", strategy.to_string()},
          {"cutoff_used", cutoff_used}};
}

json to_json(const Divergence& d) {
  return {{"reason", to_string(d.reason)}, {"moves_played", d.moves_played}, {"cutoff", d.cutoff}};
}

json to_json(const BoundReport& b) {
  json inputs = json::object();
  for (const auto& [k, v] : b.inputs_used) inputs[k] = v;
  json j{{"name", to_string(b.name)}, {"applicable", b.applicable}, {"inputs_used", inputs}};
  if (b.applicable && std::isfinite(b.value)) {
    j["value"] = b.value;
    j["floor"] = b.floor_value;
    j["reason"] = nullptr;
  } else {
    j["value"] = nullptr;
    j["floor"] = nullptr;
    j["reason"] = b.reason;
  }
  return j;
}

json to_json(const BoundTable& t) {
  json rows = json::array();
  for (const auto& b : t.all) rows.push_back(to_json(b));
  return {{"bounds", rows},
          {"best", {{"name", to_string(t.best.name)}, {"value", t.best.value}, {"floor", t.best.floor_value}}}};
}

json to_json(const spectral::PenroseResiduals& r) {
  return {{"lxl", r.lxl}, {"xlx", r.xlx}, {"lx_asymmetry", r.lx_asymmetry}, {"xl_asymmetry", r.xl_asymmetry}};
}

json spectral_report(const GraphAnalysis& a, const spectral::PenroseResiduals& r) {
  return {{"lambda2", a.spectrum.lambda2()},
          {"lambdaN", a.spectrum.lambda_max()},
          {"f", a.pinv.f},
          {"o", a.pinv.o},
          {"f_witness", a.pinv.f_witness},
          {"o_witness", {a.pinv.o_witness.first, a.pinv.o_witness.second}},
          {"jacobi_sweeps", a.spectrum.sweeps},
          {"penrose_residuals", to_json(r)}};
}

json srg_report(const srg::SrgParams& p) {
  json j{{"params", to_json(p)}, {"d", p.d()}, {"disc", p.disc()}};
  j["theta_tau_rational"] = srg::theta_tau(p).rational;
  if (p.c >= 1 && !p.is_complete()) {
    const auto e = srg::ldag_entries(p);
    j["ldag"] = {{"diag", srg::to_string(e.diag)},
                 {"adj", srg::to_string(e.adj)},
                 {"nonadj", srg::to_string(e.nonadj)},
                 {"f", srg::to_string(e.f())},
                 {"o", srg::to_string(e.o())}};
  } else {
    j["ldag"] = nullptr;
  }
  json lemmas = json::array();
  const auto rep = srg::lemma_suite(p);
  for (const auto& c : rep.checks) {
    lemmas.push_back(
        {{"name", c.name}, {"statement", c.statement}, {"status", srg::to_string(c.status)}, {"detail", c.detail}});
  }
  j["lemmas"] = lemmas;
  j["taylor_equality"] = rep.taylor_equality;
  return j;
}

}  // namespace chipfire::cli
