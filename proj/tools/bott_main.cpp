// Command-line front end: generators, localization reports, theorem
// verdicts, surgeries, and harmonic-morphism obstruction checks over the
// JSON action-data format. `-` means stdin/stdout.
//
// Exit status: 0 success / admissible / pass, 1 blocked / failing
// verdict, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bott/bott.hpp"

namespace {

constexpr const char* kConvention = "p_1[CP^2]=+3 orientation convention";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw bott::ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bott::ParseError("cannot write file '" + path + "'");
  out << content;
}

std::vector<long long> parse_int_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw bott::ParseError(std::string("bad ") + what + " entry: '" + tok +
                             "'");
    }
  }
  if (out.empty())
    throw bott::ParseError(std::string("empty ") + what + " list");
  return out;
}

void print_invariants_human(const bott::ManifoldInvariants& inv,
                            std::ostream& os) {
  if (!inv.label.empty()) os << "label: " << inv.label << "\n";
  os << "dimension: " << inv.dimension << "\n";
  os << "euler: " << (inv.euler ? inv.euler->str() : "unknown") << "\n";
  os << "signature: " << (inv.signature ? inv.signature->str() : "unknown")
     << "\n";
  for (const auto& [I, value] : inv.pontryagin)
    os << "p[" << I.str() << "] = " << (value ? value->str() : "unknown")
       << "\n";
  os << "convention: " << kConvention << "\n";
}

int report_invariants(const bott::CircleActionData& data, bool as_json) {
  bott::ManifoldInvariants inv = bott::compute_invariants(data);
  if (as_json) {
    nlohmann::json j = bott::to_json(inv);
    j["convention"] = kConvention;
    std::cout << j.dump(2) << "\n";
  } else {
    print_invariants_human(inv, std::cout);
  }
  return 0;
}

void print_surgery_report(const bott::SurgeryReport& rep, std::ostream& os) {
  auto opt = [](const std::optional<bott::Int>& v) {
    return v ? v->str() : std::string("n/a");
  };
  os << "euler: " << rep.before.euler.str() << " -> " << rep.after.euler.str()
     << " (predicted " << opt(rep.predicted_euler) << ")\n";
  os << "signature: " << opt(rep.before.sigma) << " -> "
     << opt(rep.after.sigma) << " (predicted " << opt(rep.predicted_sigma)
     << ")\n";
  if (rep.before.p1 && rep.after.p1)
    os << "p[1]: " << rep.before.p1->str() << " -> " << rep.after.p1->str()
       << "\n";
  os << "consistent: " << (rep.consistent ? "yes" : "NO") << "\n";
}

int obstruct_report(const bott::ManifoldInvariants& inv, bool as_json) {
  bott::ObstructionVerdict verdict = bott::check_domain(inv);
  if (as_json) {
    nlohmann::json j = bott::to_json(verdict);
    j["manifold"] = bott::to_json(inv);
    std::cout << j.dump(2) << "\n";
  } else {
    if (!inv.label.empty()) std::cout << "manifold: " << inv.label << "\n";
    std::cout << "admissible: " << bott::to_string(verdict.admissible) << "\n";
    for (const auto& v : verdict.violations)
      std::cout << "violation: " << v.condition << " (" << v.anchor
                << "), observed " << v.observed.str() << "\n";
    if (verdict.critical_points)
      std::cout << "critical points: " << verdict.critical_points->str()
                << "\n";
  }
  return verdict.admissible == bott::Admissibility::No ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact localization toolkit for circle-action fixed-point data"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate standard action datasets");
  gen->require_subcommand(1);
  std::string gen_weights, gen_exponents, gen_out = "-";
  auto* gen_cp = gen->add_subcommand("cp", "weighted action on CP^n");
  gen_cp->add_option("--weights", gen_weights, "comma-separated distinct integers")
      ->required();
  gen_cp->add_option("-o,--output", gen_out, "output file (default stdout)");
  auto* gen_sphere = gen->add_subcommand("sphere", "rotation action on S^2n");
  gen_sphere
      ->add_option("--exponents", gen_exponents,
                   "comma-separated positive integers")
      ->required();
  gen_sphere->add_option("-o,--output", gen_out, "output file (default stdout)");

  // invariants
  auto* invc = app.add_subcommand("invariants",
                                  "localized invariants of a dataset");
  std::string inv_file;
  bool inv_json = false;
  invc->add_option("file", inv_file, "action-data file, or - for stdin")
      ->required();
  invc->add_flag("--json", inv_json, "emit JSON");

  // verify
  auto* verc = app.add_subcommand("verify", "run a theorem verdict");
  std::string ver_file, ver_theorem;
  bool ver_json = false;
  verc->add_option("file", ver_file, "action-data file, or - for stdin")
      ->required();
  verc->add_option("--theorem", ver_theorem, "1.1 or 2.8")->required();
  verc->add_flag("--json", ver_json, "emit JSON");

  // blowup
  auto* blowc = app.add_subcommand("blowup", "blow up an isolated fixed point");
  std::string blow_file, blow_out = "-";
  long long blow_point = 0;
  blowc->add_option("file", blow_file, "action-data file, or - for stdin")
      ->required();
  blowc->add_option("--point", blow_point, "index of the fixed point")
      ->required();
  blowc->add_option("-o,--output", blow_out, "output file (default stdout)");

  // consum
  auto* conc = app.add_subcommand("consum", "equivariant connected sum");
  std::string con_a, con_b, con_points, con_out = "-";
  conc->add_option("fileA", con_a, "first dataset")->required();
  conc->add_option("fileB", con_b, "second dataset")->required();
  conc->add_option("--points", con_points, "indices I,J of the glued points")
      ->required();
  conc->add_option("-o,--output", con_out, "output file (default stdout)");

  // obstruct
  auto* obsc = app.add_subcommand(
      "obstruct", "harmonic-morphism domain obstruction check");
  std::string obs_manifold, obs_file;
  bool obs_json = false;
  std::optional<long long> obs_euler, obs_sigma, obs_dim;
  std::string obs_p1;
  obsc->add_option("--manifold", obs_manifold, "catalog manifold name");
  obsc->add_option("--file", obs_file, "manifold-invariants JSON file");
  obsc->add_option("--euler", obs_euler, "Euler number");
  obsc->add_option("--signature", obs_sigma, "signature");
  obsc->add_option("--p1", obs_p1, "first Pontryagin number (rational)");
  obsc->add_option("--dimension", obs_dim, "dimension (default 4)");
  obsc->add_flag("--json", obs_json, "emit JSON");

  // catalog
  auto* catc = app.add_subcommand("catalog", "list named manifolds");
  bool cat_json = false;
  catc->add_flag("--json", cat_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return 2;
  }

  try {
    if (gen_cp->parsed()) {
      auto data = bott::cp_action(parse_int_list(gen_weights, "weights"));
      write_output(gen_out, bott::serialize(data));
      return 0;
    }
    if (gen_sphere->parsed()) {
      auto data =
          bott::sphere_action(parse_int_list(gen_exponents, "exponents"));
      write_output(gen_out, bott::serialize(data));
      return 0;
    }
    if (invc->parsed())
      return report_invariants(bott::parse_action_data(read_input(inv_file)),
                               inv_json);
    if (verc->parsed()) {
      auto data = bott::parse_action_data(read_input(ver_file));
      bool applicable = false, pass = false;
      if (ver_theorem == "1.1") {
        auto v = bott::verify_theorem_1_1(data);
        applicable = v.applicable;
        pass = v.pass;
        if (ver_json)
          std::cout << bott::to_json(v).dump(2) << "\n";
        else {
          std::cout << "theorem 1.1: "
                    << (!applicable ? "inapplicable" : pass ? "pass" : "FAIL")
                    << "\n";
          if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
          std::cout << "sign sum: " << v.sign_sum.str()
                    << "\neuler: " << v.euler.str() << " (" << v.isolated_count
                    << " isolated points)\n";
          for (const auto& [I, p] : v.pontryagin)
            std::cout << "p[" << I.str() << "] = " << p.str() << "\n";
        }
      } else if (ver_theorem == "2.8") {
        auto v = bott::verify_theorem_2_8(data);
        applicable = v.applicable;
        pass = v.pass;
        if (ver_json)
          std::cout << bott::to_json(v).dump(2) << "\n";
        else {
          std::cout << "theorem 2.8: "
                    << (!applicable ? "inapplicable" : pass ? "pass" : "FAIL")
                    << "\n";
          if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
          std::cout << "p_1/3: " << v.p1_third.str()
                    << "\nsign sum: " << v.sign_sum.str()
                    << "\nnormal euler sum: " << v.normal_sum.str() << "\n";
        }
      } else {
        std::cerr << "error: --theorem must be 1.1 or 2.8\n";
        return 2;
      }
      if (!ver_json)
        std::cout << "convention: " << kConvention << "\n";
      return applicable && !pass ? 1 : 0;
    }
    if (blowc->parsed()) {
      auto before = bott::parse_action_data(read_input(blow_file));
      if (blow_point < 0)
        throw std::invalid_argument("blowup: --point must be nonnegative");
      auto after =
          bott::blow_up(before, static_cast<std::size_t>(blow_point));
      bott::SurgeryOp op;
      op.kind = bott::SurgeryOp::Kind::BlowUp;
      op.index = static_cast<std::size_t>(blow_point);
      auto rep = bott::bookkeeping(before, after, op);
      write_output(blow_out, bott::serialize(after));
      print_surgery_report(rep, blow_out == "-" ? std::cerr : std::cout);
      return 0;
    }
    if (conc->parsed()) {
      auto a = bott::parse_action_data(read_input(con_a));
      auto b = bott::parse_action_data(read_input(con_b));
      auto pts = parse_int_list(con_points, "points");
      if (pts.size() != 2 || pts[0] < 0 || pts[1] < 0)
        throw std::invalid_argument(
            "consum: --points needs two nonnegative indices I,J");
      auto after = bott::connected_sum(a, static_cast<std::size_t>(pts[0]), b,
                                       static_cast<std::size_t>(pts[1]));
      bott::SurgeryOp op;
      op.kind = bott::SurgeryOp::Kind::ConnectedSum;
      op.index = static_cast<std::size_t>(pts[0]);
      op.index_b = static_cast<std::size_t>(pts[1]);
      op.second = b;
      auto rep = bott::bookkeeping(a, after, op);
      write_output(con_out, bott::serialize(after));
      print_surgery_report(rep, con_out == "-" ? std::cerr : std::cout);
      return 0;
    }
    if (obsc->parsed()) {
      bott::ManifoldInvariants inv;
      if (!obs_manifold.empty()) {
        inv = bott::catalog(obs_manifold);
      } else if (!obs_file.empty()) {
        inv = bott::parse_invariants(read_input(obs_file));
      } else if (obs_euler || obs_sigma || !obs_p1.empty()) {
        inv.dimension = obs_dim.value_or(4);
        if (obs_euler) inv.euler = bott::Int(*obs_euler);
        if (obs_sigma) inv.signature = bott::Int(*obs_sigma);
        if (!obs_p1.empty()) {
          if (inv.dimension != 4)
            throw std::invalid_argument(
                "obstruct: --p1 is only meaningful in dimension 4");
          inv.pontryagin.emplace(bott::Partition{1},
                                 bott::parse_rational(obs_p1));
        }
      } else {
        std::cerr << "error: obstruct needs --manifold, --file, or invariant "
                     "flags\n";
        return 2;
      }
      return obstruct_report(inv, obs_json);
    }
    if (catc->parsed()) {
      if (cat_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& name : bott::catalog_names()) j.push_back(name);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& name : bott::catalog_names())
          std::cout << name << "\n";
      }
      return 0;
    }
  } catch (const bott::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations)
      std::cerr << "  " << v.path << ": " << v.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
