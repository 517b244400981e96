#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acyt/analysis.hpp"

namespace acyt {

namespace cli_detail {

inline std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, Rational> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("--param expects key=value, got \"" + kv + "\"");
    std::string key = kv.substr(0, eq);
    std::string why;
    auto v = parse_rational(kv.substr(eq + 1), &why);
    if (!v) throw InputError("--param " + key + ": " + why);
    out[key] = *v;
  }
  return out;
}

inline bool is_catalog_name(const std::string& s) {
  for (const auto& n : catalog_names())
    if (n == s) return true;
  return false;
}

inline InputDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

struct VerifySummary {
  AnalysisReport analysis;
  bool ran = false;
  MainTheoremReport main;
  HullTheoremReport hull;
};

inline VerifySummary run_verify(const LieAlgebra& g, const SU3Structure& s,
                                const std::string& name, Convention conv) {
  VerifySummary v;
  v.analysis = analyze(g, s, name, conv);
  if (v.analysis.valid() && v.analysis.applicable) {
    v.main = verify_main_theorem(g, s);
    v.hull = verify_hull_theorem(g, s);
    v.ran = true;
  }
  return v;
}

inline nlohmann::json verify_to_json(const VerifySummary& v, Convention out_conv) {
  nlohmann::json j;
  j["analysis"] = report_to_json(v.analysis, out_conv);
  if (v.ran) {
    j["main_theorem"] = {{"applicable", v.main.applicable},
                         {"acyt", v.main.acyt},
                         {"lee_form_parallel", v.main.lee_form_parallel},
                         {"lee_form_coclosed", v.main.lee_form_coclosed},
                         {"constant_nijenhuis_norm", v.main.constant_nijenhuis_norm},
                         {"unimodular_compactness_proxy", v.main.unimodular},
                         {"instanton", v.main.instanton},
                         {"torsion_parallel", v.main.torsion_parallel},
                         {"verdict_ok", v.main.verdict_ok}};
    j["hull_theorem"] = {{"applicable", v.hull.applicable},
                         {"exchange_identity_ok", v.hull.exchange_identity_ok},
                         {"hull_instanton", v.hull.hull_instanton},
                         {"dT_zero", v.hull.dT_zero},
                         {"verdict_ok", v.hull.verdict_ok}};
  } else {
    j["main_theorem"] = nullptr;
    j["hull_theorem"] = nullptr;
  }
  return j;
}

inline std::string verify_to_text(const VerifySummary& v) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "verify: " << v.analysis.name << "\n";
  if (!v.analysis.valid()) {
    os << "input invalid: algebra " << v.analysis.algebra_message << "; structure "
       << v.analysis.structure_message << "\n";
    return os.str();
  }
  if (!v.ran) {
    os << "not applicable: structure is not of class G1\n";
    return os.str();
  }
  const auto& c = *v.analysis.conn;
  os << "acyt: " << yn(c.acyt.is_acyt()) << "\n";
  os << "hypotheses:    lee_parallel=" << yn(v.main.lee_form_parallel)
     << " lee_coclosed=" << yn(v.main.lee_form_coclosed)
     << " constant_|N|=" << yn(v.main.constant_nijenhuis_norm)
     << " unimodular(compactness proxy)=" << yn(v.main.unimodular) << "\n";
  os << "main theorem:  applicable=" << yn(v.main.applicable)
     << " instanton=" << yn(v.main.instanton)
     << " torsion_parallel=" << yn(v.main.torsion_parallel)
     << " verdict=" << (v.main.verdict_ok ? "pass" : "FAIL") << "\n";
  os << "hull theorem:  applicable=" << yn(v.hull.applicable)
     << " hull_instanton=" << yn(v.hull.hull_instanton) << " dT_zero=" << yn(v.hull.dT_zero)
     << " exchange_identity=" << (v.hull.exchange_identity_ok ? "pass" : "FAIL")
     << " verdict=" << (v.hull.verdict_ok ? "pass" : "FAIL") << "\n";
  os << "curvature identities: " << (c.identities.all_pass() ? "all pass" : "FAIL") << "\n";
  os << "delta-torsion identities: "
     << (c.delta_torsion.applicable ? (c.delta_torsion.all_ok() ? "pass" : "FAIL")
                                    : "not applicable")
     << "\n";
  return os.str();
}

}  // namespace cli_detail

/// Command-line entry point; returns the process exit code.
/// 0 analysis clean; 1 geometric finding (not G1 / not ACYT); 2 input error;
/// 3 internal-consistency or theorem-violation error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Exact torsion-connection and instanton analysis for invariant "
               "SU(3)-structures on 6-dimensional Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string convention = "internal";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--convention", convention, "Convention for printed values")
      ->check(CLI::IsMember({"paper", "internal"}));

  std::string analyze_file;
  auto* cmd_analyze = app.add_subcommand("analyze", "Analyze an input document");
  cmd_analyze->fallthrough();
  cmd_analyze->add_option("file", analyze_file, "Input document (JSON)")->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "Built-in examples");
  cmd_catalog->fallthrough();
  auto* cmd_list = cmd_catalog->add_subcommand("list", "List built-in entries");
  cmd_list->fallthrough();
  std::string run_name;
  std::vector<std::string> run_params;
  auto* cmd_run = cmd_catalog->add_subcommand("run", "Analyze a built-in entry");
  cmd_run->fallthrough();
  cmd_run->add_option("name", run_name, "Entry name")->required();
  cmd_run->add_option("--param", run_params, "Parameter override key=value");
  cmd_catalog->require_subcommand(1);

  std::string verify_target;
  auto* cmd_verify = app.add_subcommand("verify", "Run the theorem suite only");
  cmd_verify->fallthrough();
  cmd_verify->add_option("target", verify_target, "Catalog name or input file")->required();

  std::string export_name;
  std::vector<std::string> export_params;
  auto* cmd_export = app.add_subcommand("export", "Write a catalog entry as an input document");
  cmd_export->fallthrough();
  cmd_export->add_option("name", export_name, "Entry name")->required();
  cmd_export->add_option("--param", export_params, "Parameter override key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Convention out_conv = convention == "paper" ? Convention::paper_omega : Convention::internal_F;
  bool machine = format == "machine";

  try {
    if (*cmd_list) {
      for (const auto& n : catalog_names()) out << n << "\n";
      return 0;
    }
    if (*cmd_run || *cmd_analyze) {
      AnalysisReport rep;
      if (*cmd_run) {
        CatalogEntry e = get_entry(run_name, parse_params(run_params));
        rep = analyze(e.algebra, e.structure, e.name, e.convention);
      } else {
        InputDocument doc = load_document(analyze_file);
        auto [g, s] = realize(doc);
        rep = analyze(g, s, doc.name, doc.convention);
      }
      out << (machine ? report_to_machine(rep, out_conv) : report_to_text(rep, out_conv));
      return rep.finding_code();
    }
    if (*cmd_verify) {
      VerifySummary v;
      if (is_catalog_name(verify_target)) {
        CatalogEntry e = get_entry(verify_target);
        v = run_verify(e.algebra, e.structure, e.name, e.convention);
      } else {
        InputDocument doc = load_document(verify_target);
        auto [g, s] = realize(doc);
        v = run_verify(g, s, doc.name, doc.convention);
      }
      if (machine)
        out << verify_to_json(v, out_conv).dump(2) << "\n";
      else
        out << verify_to_text(v);
      if (v.ran && v.analysis.conn && !v.analysis.conn->identities.all_pass()) return 3;
      return v.analysis.finding_code();
    }
    if (*cmd_export) {
      CatalogEntry e = get_entry(export_name, parse_params(export_params));
      out << serialize_document(document_from_catalog(e, out_conv));
      return 0;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  std::vector<const char*> argv;
  argv.push_back("acyt");
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace acyt
