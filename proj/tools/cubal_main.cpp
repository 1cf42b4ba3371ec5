#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubal/counting.hpp"
#include "cubal/cubic_table.hpp"
#include "cubal/free_construction.hpp"
#include "cubal/generation.hpp"
#include "cubal/kernels.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string atom_set(const cubal::Element& e) {
  std::string s = "{";
  bool first = true;
  for (unsigned i : e.atom_indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

int cmd_size(unsigned m, unsigned table, bool json, const std::string& out) {
  if (table > 0) {
    emit(json ? dump(cubal::size_table_json(table)) : cubal::size_table_text(table), out);
    return 0;
  }
  if (json) {
    emit(dump(nlohmann::json{{"m", m}, {"free_size", cubal::free_algebra_size(m).get_str()}}),
         out);
  } else {
    emit(cubal::free_algebra_size(m).get_str() + "\n", out);
  }
  return 0;
}

int cmd_build(unsigned k, bool enumerate, bool json, const std::string& out) {
  if (enumerate && k > 2)
    throw CLI::ValidationError("--enumerate", "interval enumeration needs --k <= 2");
  cubal::FreeInstance inst = cubal::build(k);
  std::optional<uint64_t> lx_size;
  if (enumerate) lx_size = cubal::build_LX(inst).size();

  auto st = cubal::sigma_tau(inst);
  const bool st_zero = st[k].first.is_bottom() && st[k].second.is_bottom();
  std::ostringstream os;
  os << "k: " << k << "\n";
  os << "atoms: " << inst.algebra.atom_count() << "\n";
  for (unsigned i = 0; i <= k; ++i)
    os << "I_" << i << " = [" << atom_set(inst.gens[i].lo()) << ", "
       << atom_set(inst.gens[i].hi()) << "]\n";
  os << "sigma_" << k << " = tau_" << k << " = 0: " << (st_zero ? "OK" : "FAILED") << "\n";
  if (lx_size) os << "|L(X)| = " << *lx_size << "\n";

  if (!out.empty())
    emit(dump(cubal::instance_json(inst, lx_size)), out);
  if (json)
    std::cout << dump(cubal::instance_json(inst, lx_size));
  else
    std::cout << os.str();
  return st_zero ? 0 : 1;
}

int cmd_verify(unsigned k, bool long_mode, bool json) {
  if (k > 2 || (k == 2 && !long_mode))
    throw CLI::ValidationError("--k", "verify supports k <= 1, or k = 2 with --long");
  cubal::FreeInstance inst = cubal::build(k);
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  auto note = [&](const std::string& name, bool pass, nlohmann::json detail = {}) {
    all = all && pass;
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!json)
      std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
  };

  auto st = cubal::sigma_tau(inst);
  note("sigma_tau_zero", st[k].first.is_bottom() && st[k].second.is_bottom());
  note("atom_count_formula",
       cubal::BigCount(inst.algebra.atom_count()) == cubal::alpha_total(k));

  cubal::GenerationReport gen = cubal::verify_generation(inst);
  note("generation_closure_equals_lx", gen.equal, gen.to_json());

  if (k <= 1) {
    auto lx = cubal::build_LX(inst);
    cubal::CubicTable table = cubal::CubicTable::from_intervals(lx);
    cubal::AxiomReport ax = cubal::check_cubic_axioms(table);
    note("lx_cubic_axioms", ax.all_pass(), ax.to_json());
  }

  auto inductive = cubal::r_map_inductive_all(inst);
  bool rmap_ok = true;
  for (unsigned i = 0; rmap_ok && i < inst.algebra.atom_count(); ++i)
    rmap_ok = cubal::r_map(inst, inst.algebra.atom(i)) == inductive[i];
  note("r_map_closed_form_matches_inductive", rmap_ok);

  if (json) std::cout << dump(nlohmann::json{{"k", k}, {"pass", all}, {"checks", checks}});
  return all ? 0 : 1;
}

int cmd_check(const std::string& input, bool json) {
  std::ifstream f(input);
  if (!f) throw std::runtime_error("cannot open input file: " + input);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + input + ": " + e.what());
  }
  cubal::CubicTable table = cubal::CubicTable::from_json(j);
  cubal::AxiomReport ax = cubal::check_cubic_axioms(table);
  cubal::MrReport mr = cubal::check_mr_axiom(table);
  const bool pass = ax.all_pass() && mr.table_ok && mr.pass;
  if (json) {
    std::cout << dump(nlohmann::json{
        {"axioms", ax.to_json()}, {"mr", mr.to_json()}, {"pass", pass}});
  } else {
    if (!ax.table_ok) {
      std::cout << "table: FAIL (" << ax.table_error << ")\n";
    } else {
      std::cout << "table: ok\n";
      for (const auto& a : ax.axioms) {
        std::cout << "  " << a.name << ": " << (a.pass ? "pass" : "FAIL");
        if (a.witness)
          std::cout << " at (" << (*a.witness)[0] << ", " << (*a.witness)[1] << ", "
                    << (*a.witness)[2] << ")";
        std::cout << "\n";
      }
      std::cout << "cubic: " << (ax.all_pass() ? "pass" : "FAIL") << "\n";
      std::cout << "MR: " << (mr.pass ? "pass" : "FAIL");
      if (mr.witness)
        std::cout << " at (" << (*mr.witness)[0] << ", " << (*mr.witness)[1] << ", "
                  << (*mr.witness)[2] << ")";
      std::cout << "\n";
    }
  }
  return pass ? 0 : 1;
}

int cmd_export(unsigned k, const std::string& what, const std::string& out) {
  if (what == "atoms") {
    cubal::FreeInstance inst = cubal::build(k);
    nlohmann::json j = inst.algebra.to_json();
    j["k"] = k;
    j["atom_count"] = inst.algebra.atom_count();
    emit(dump(j), out);
    return 0;
  }
  if (k > 1)
    throw CLI::ValidationError(
        "--what", "table/hasse exports tabulate L(X); feasible only for --k <= 1");
  cubal::FreeInstance inst = cubal::build(k);
  auto lx = cubal::build_LX(inst);
  if (what == "table") {
    emit(dump(cubal::CubicTable::from_intervals(lx).to_json()), out);
    return 0;
  }
  if (what == "hasse") {
    emit(cubal::hasse_dot(lx), out);
    return 0;
  }
  throw CLI::ValidationError("--what", "expected one of: table, hasse, atoms");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free cubic implication algebra toolkit"};
  app.require_subcommand(1);

  unsigned m = 1, table_n = 0;
  bool json = false;
  std::string out;
  auto* size = app.add_subcommand("size", "exact size of the free algebra on m generators");
  size->add_option("--generators", m, "number of generators (m >= 1)")->required();
  size->add_option("--table", table_n, "print rows m = 1..N");
  size->add_flag("--json", json, "JSON output");
  size->add_option("--out", out, "write to file instead of stdout");

  unsigned build_k = 0;
  bool enumerate = false, build_json = false;
  std::string build_out;
  auto* build = app.add_subcommand("build", "construct the k-th quotient algebra");
  build->add_option("--k", build_k, "stage index k (m = k+1 generators)")->required();
  build->add_flag("--enumerate", enumerate, "also enumerate L(X) (k <= 2)");
  build->add_flag("--json", build_json, "JSON output");
  build->add_option("--out", build_out, "write the JSON dump to a file");

  unsigned verify_k = 0;
  bool long_mode = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the construction checks for stage k");
  verify->add_option("--k", verify_k, "stage index")->required();
  verify->add_flag("--long", long_mode, "allow the long k = 2 run");
  verify->add_flag("--json", verify_json, "JSON output");

  std::string check_input;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "axiom/MR check an external cubic table");
  check->add_option("--input", check_input, "CubicTable JSON file")->required();
  check->add_flag("--json", check_json, "JSON output");

  unsigned export_k = 0;
  std::string what, export_out;
  auto* exp = app.add_subcommand("export", "export tables, Hasse diagrams, or atoms");
  exp->add_option("--k", export_k, "stage index")->required();
  exp->add_option("--what", what, "table | hasse | atoms")->required();
  exp->add_option("--out", export_out, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (size->parsed()) return cmd_size(m, table_n, json, out);
    if (build->parsed()) return cmd_build(build_k, enumerate, build_json, build_out);
    if (verify->parsed()) return cmd_verify(verify_k, long_mode, verify_json);
    if (check->parsed()) return cmd_check(check_input, check_json);
    if (exp->parsed()) return cmd_export(export_k, what, export_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
