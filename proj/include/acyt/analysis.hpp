#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "acyt/document.hpp"

namespace acyt {

/// Everything the engine can say about one input, assembled in one pass.
/// Sections that need a torsion connection are absent on non-G1 inputs.
struct AnalysisReport {
  std::string name;
  Convention input_convention = Convention::internal_F;

  bool algebra_ok = false;
  std::string algebra_message;
  bool structure_ok = false;
  std::string structure_message;
  bool unimodular = false;

  ClassFlags flags;
  Form d_kahler = Form(3);  // dF in the internal convention
  Form theta = Form(1);

  bool applicable = false;  // G1 gate for everything below
  struct Connected {
    Form nijenhuis = Form(3);
    Rational lambda = Rational(0);
    Rational mu = Rational(0);
    Form torsion = Form(3);
    Form dT = Form(4);
    Form sigma = Form(4);
    Form delta_T = Form(2);
    Tensor ricci = Tensor(2);
    Form rho = Form(2);
    Rational scal = Rational(0);
    Rational scal_g = Rational(0);
    AcytReport acyt;
    InstantonReport instanton;
    DeltaTorsionReport delta_torsion;
    IdentityReport identities;
    HolonomyResult holonomy;
    bool einstein = false;
    std::optional<Rational> einstein_constant;
    std::optional<ChernReport> chern;  // Hermitian inputs only
  };
  std::optional<Connected> conn;

  bool valid() const { return algebra_ok && structure_ok; }
  /// 0 = clean, 1 = geometric finding (not G1 / not ACYT), 2 = invalid input.
  int finding_code() const {
    if (!valid()) return 2;
    if (!applicable || !conn->acyt.is_acyt()) return 1;
    return 0;
  }
};

inline AnalysisReport analyze(const LieAlgebra& g, const SU3Structure& s,
                              const std::string& name, Convention input_convention) {
  AnalysisReport rep;
  rep.name = name;
  rep.input_convention = input_convention;

  auto av = g.validate();
  rep.algebra_ok = av.ok;
  rep.algebra_message = av.message();
  auto sv = validate_su3(s);
  rep.structure_ok = sv.ok;
  rep.structure_message = sv.ok ? "ok" : sv.first_violated;
  if (!rep.valid()) return rep;

  rep.unimodular = g.is_unimodular();
  rep.flags = classify(g, s);
  rep.d_kahler = g.d(s.F);
  rep.theta = lee_form_from_dF(g, s);
  rep.applicable = rep.flags.is_g1;
  if (!rep.applicable) return rep;

  AnalysisReport::Connected c;
  auto [conn, T] = torsion_connection(g, s);
  c.nijenhuis = nijenhuis_form(g, s);
  c.torsion = T;
  c.acyt = is_acyt(g, s, conn, T);
  c.lambda = c.acyt.lambda;
  c.mu = c.acyt.mu;
  c.dT = g.d(T);
  c.sigma = sigma_T(T);
  c.delta_T = g.codifferential(T);
  CurvatureData cd = curvature(conn, s);
  c.ricci = cd.Ric;
  c.rho = cd.rho;
  c.scal = cd.scal;
  c.scal_g = cd.scal_g;
  c.instanton = instanton_report(g, s, conn, T, c.acyt);
  c.delta_torsion = delta_torsion_identities(g, s, conn, T, c.acyt);
  c.identities = verify_curvature_identities(conn);
  c.holonomy = infinitesimal_holonomy(g, conn);
  auto [ein, einc] = einstein_check(cd.Ric);
  c.einstein = ein;
  c.einstein_constant = einc;
  if (c.nijenhuis.is_zero()) c.chern = chern_appendix_checks(g, s);
  rep.conn = std::move(c);
  return rep;
}

namespace detail {

/// Values whose sign depends on the convention: the structure differential,
/// λ, μ and ρ flip under (F, Ψ) → (−F, −Ψ); torsion-type data does not.
struct OutputConvention {
  Convention conv = Convention::internal_F;
  Rational sign() const { return conv == Convention::paper_omega ? rat(-1) : rat(1); }
};

inline nlohmann::json tensor2_to_json(const Tensor& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= kDim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= kDim; ++j) row.push_back(to_string(t.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

inline nlohmann::json report_to_json(const AnalysisReport& rep,
                                     Convention out_conv = Convention::internal_F) {
  using detail::form_to_json;
  using detail::tensor2_to_json;
  using json = nlohmann::json;
  detail::OutputConvention oc{out_conv};

  json j;
  j["name"] = rep.name;
  j["input_convention"] = to_string(rep.input_convention);
  j["output_convention"] = to_string(out_conv);
  j["validation"] = {
      {"algebra", {{"ok", rep.algebra_ok}, {"message", rep.algebra_message}}},
      {"structure", {{"ok", rep.structure_ok}, {"message", rep.structure_message}}}};
  if (!rep.valid()) {
    j["finding_code"] = rep.finding_code();
    return j;
  }
  j["unimodular"] = rep.unimodular;
  j["class"] = {{"g1", rep.flags.is_g1},
                {"hermitian", rep.flags.is_hermitian},
                {"balanced", rep.flags.is_balanced},
                {"nearly_kahler", rep.flags.is_nearly_kahler},
                {"kahler", rep.flags.is_kahler},
                {"balanced_g1", rep.flags.is_balanced_g1}};
  j["d_kahler_form"] = form_to_json(oc.sign() * rep.d_kahler);
  j["lee_form"] = form_to_json(rep.theta);
  j["applicable"] = rep.applicable;
  if (!rep.applicable) {
    j["connection"] = nullptr;
    j["finding_code"] = rep.finding_code();
    return j;
  }
  const auto& c = *rep.conn;
  j["nijenhuis"] = form_to_json(c.nijenhuis);
  j["lambda"] = to_string(oc.sign() * c.lambda);
  j["mu"] = to_string(oc.sign() * c.mu);
  j["torsion"] = form_to_json(c.torsion);
  j["dT"] = form_to_json(c.dT);
  j["sigma_T"] = form_to_json(c.sigma);
  j["delta_T"] = form_to_json(c.delta_T);
  j["connection"] = {{"ricci", tensor2_to_json(c.ricci)},
                     {"rho", form_to_json(oc.sign() * c.rho)},
                     {"scal", to_string(c.scal)},
                     {"scal_g", to_string(c.scal_g)}};
  j["acyt"] = {{"is_acyt", c.acyt.is_acyt()},
               {"rho_zero", c.acyt.rho_zero},
               {"d_psi_plus_ok", c.acyt.d_psi_plus_ok},
               {"d_psi_minus_ok", c.acyt.d_psi_minus_ok},
               {"torsion_formula_ok", c.acyt.torsion_formula_ok},
               {"psi_parallel", c.acyt.psi_parallel}};
  j["instanton"] = {{"first_pair_su3", c.instanton.first_pair_su3},
                    {"last_pair_su3", c.instanton.last_pair_su3},
                    {"nabla_T_zero", c.instanton.nabla_T_zero},
                    {"nabla_N_zero", c.instanton.nabla_N_zero},
                    {"nabla_theta_zero", c.instanton.nabla_theta_zero},
                    {"dT_zero", c.instanton.dT_zero},
                    {"hull_instanton", c.instanton.hull_instanton},
                    {"pair_symmetric", c.instanton.pair_symmetric},
                    {"holonomy_dim", c.instanton.holonomy_dim}};
  j["einstein"] = {{"is_einstein", c.einstein},
                   {"constant", c.einstein_constant ? to_string(*c.einstein_constant)
                                                    : std::string("none")}};
  json ids = json::array();
  for (const auto& item : c.identities.items)
    ids.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  j["identities"] = ids;
  j["delta_torsion"] = {{"applicable", c.delta_torsion.applicable},
                        {"coclosure_formula_ok", c.delta_torsion.coclosure_formula_ok},
                        {"coclosure_contraction_ok", c.delta_torsion.coclosure_contraction_ok},
                        {"nabla_theta_form_ok", c.delta_torsion.nabla_theta_form_ok},
                        {"dtheta_su3_ok", c.delta_torsion.dtheta_su3_ok},
                        {"dtheta_invariant_ok", c.delta_torsion.dtheta_invariant_ok}};
  if (c.chern) {
    j["chern"] = {{"applicable", c.chern->applicable},
                  {"torsion_norm_sq", to_string(c.chern->torsion_norm_sq)},
                  {"chern_torsion_norm_sq", to_string(c.chern->chern_torsion_norm_sq)},
                  {"norm_identity_ok", c.chern->norm_identity_ok},
                  {"torsion_reassembly_ok", c.chern->torsion_reassembly_ok},
                  {"j_transfer_ok", c.chern->j_transfer_ok},
                  {"trace_identity_ok", c.chern->trace_identity_ok},
                  {"chern_instanton", c.chern->chern_instanton},
                  {"chern_trace_zero", c.chern->chern_trace_zero},
                  {"balanced_consistency_ok", c.chern->balanced_consistency_ok}};
  } else {
    j["chern"] = nullptr;
  }
  j["holonomy"] = {{"dim", c.holonomy.dim},
                   {"stabilized", c.holonomy.stabilized},
                   {"order_used", c.holonomy.order_used}};
  j["finding_code"] = rep.finding_code();
  return j;
}

inline std::string report_to_machine(const AnalysisReport& rep,
                                     Convention out_conv = Convention::internal_F) {
  return report_to_json(rep, out_conv).dump(2) + "\n";
}

inline std::string report_to_text(const AnalysisReport& rep,
                                  Convention out_conv = Convention::internal_F) {
  detail::OutputConvention oc{out_conv};
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "input: " << rep.name << "  (convention " << to_string(rep.input_convention) << ")\n";
  os << "algebra valid:   " << rep.algebra_message << "\n";
  os << "structure valid: " << rep.structure_message << "\n";
  if (!rep.valid()) return os.str();
  os << "unimodular:      " << yn(rep.unimodular) << "\n";
  os << "classes: g1=" << yn(rep.flags.is_g1) << " hermitian=" << yn(rep.flags.is_hermitian)
     << " balanced=" << yn(rep.flags.is_balanced)
     << " nearly_kahler=" << yn(rep.flags.is_nearly_kahler)
     << " kahler=" << yn(rep.flags.is_kahler) << "\n";
  os << "d(kahler form):  " << (oc.sign() * rep.d_kahler).str() << "\n";
  os << "lee form:        " << rep.theta.str() << "\n";
  if (!rep.applicable) {
    os << "no metric connection with skew torsion preserves this structure;\n";
    os << "connection-level sections are not applicable.\n";
    return os.str();
  }
  const auto& c = *rep.conn;
  os << "nijenhuis form:  " << c.nijenhuis.str() << "\n";
  os << "lambda, mu:      " << to_string(oc.sign() * c.lambda) << ", "
     << to_string(oc.sign() * c.mu) << "\n";
  os << "torsion T:       " << c.torsion.str() << "\n";
  os << "dT:              " << c.dT.str() << "\n";
  os << "sigma_T:         " << c.sigma.str() << "\n";
  os << "delta T:         " << c.delta_T.str() << "\n";
  os << "scal, scal_g:    " << to_string(c.scal) << ", " << to_string(c.scal_g) << "\n";
  os << "ricci 2-form:    " << (oc.sign() * c.rho).str() << "\n";
  os << "acyt:            " << yn(c.acyt.is_acyt())
     << " (rho_zero=" << yn(c.acyt.rho_zero) << ", structure_eqs=" << yn(c.acyt.d_psi_plus_ok)
     << "/" << yn(c.acyt.d_psi_minus_ok) << ", psi_parallel=" << yn(c.acyt.psi_parallel)
     << ", torsion_formula=" << yn(c.acyt.torsion_formula_ok) << ")\n";
  os << "instanton:       first_pair=" << yn(c.instanton.first_pair_su3)
     << " last_pair=" << yn(c.instanton.last_pair_su3)
     << " pair_symmetric=" << yn(c.instanton.pair_symmetric) << "\n";
  os << "parallel:        T=" << yn(c.instanton.nabla_T_zero)
     << " N=" << yn(c.instanton.nabla_N_zero) << " theta=" << yn(c.instanton.nabla_theta_zero)
     << "\n";
  os << "hull:            instanton=" << yn(c.instanton.hull_instanton)
     << " dT_zero=" << yn(c.instanton.dT_zero) << "\n";
  os << "einstein:        " << yn(c.einstein);
  if (c.einstein_constant) os << " (constant " << to_string(*c.einstein_constant) << ")";
  os << "\n";
  os << "holonomy dim:    " << c.holonomy.dim
     << (c.holonomy.stabilized ? "" : " (span not stabilized at the order cap)") << "\n";
  os << "identities:\n";
  for (const auto& item : c.identities.items)
    os << "  " << (item.pass ? "pass" : "FAIL") << "  " << item.name
       << (item.detail.empty() ? "" : "  [" + item.detail + "]") << "\n";
  os << "delta-torsion identities: "
     << (c.delta_torsion.applicable ? (c.delta_torsion.all_ok() ? "pass" : "FAIL")
                                    : "not applicable")
     << "\n";
  if (c.chern) {
    os << "chern: norm_identity=" << yn(c.chern->norm_identity_ok)
       << " trace_identity=" << yn(c.chern->trace_identity_ok)
       << " instanton=" << yn(c.chern->chern_instanton) << "\n";
  }
  return os.str();
}

}  // namespace acyt
