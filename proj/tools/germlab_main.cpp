// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "germlab.h"
#include "json.hpp"

namespace {

using J = nlohmann::ordered_json;

constexpr int kExitInput = GERMLAB_ERR_INPUT;

struct Owned {
  char* p = nullptr;
  ~Owned() { germlab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitInput);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int report_error(int status, const Owned& err) {
  std::cerr << "error: " << (err.p ? err.str() : "unknown failure") << "\n";
  return status;
}

// "x,y,z" with rational components -> JSON triple.
J parse_point_arg(const std::string& text) {
  J out = J::array();
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  if (out.size() != 3) {
    std::cerr << "error: point must be 'x,y,z' with rational entries\n";
    std::exit(kExitInput);
  }
  return out;
}

void print_direction(const J& d) {
  std::cout << "(";
  for (size_t i = 0; i < d["approx"].size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << d["approx"][i].get<double>();
  }
  std::cout << ")";
}

void print_analysis(const J& a) {
  std::cout << "input: " << a["input_kind"].get<std::string>() << "\n";
  std::cout << "branches: " << a["branches"].size() << "\n";
  for (const auto& b : a["branches"])
    std::cout << "  " << b["summary"].get<std::string>() << "\n";
  std::cout << "k-map:\n";
  for (const auto& e : a["k_map"]) {
    std::cout << "  ";
    print_direction(e["direction"]);
    std::cout << " -> " << e["k"].get<int>() << "\n";
  }
  std::cout << "odd part: " << a["odd_part"].size() << " half-line(s)\n";
  if (a["multiplicity"]["m"].is_null())
    std::cout << "multiplicity: parity " << a["multiplicity"]["parity"].get<int>()
              << " (parametric input: parity only)\n";
  else
    std::cout << "multiplicity: m = " << a["multiplicity"]["m"].get<int>()
              << ", parity " << a["multiplicity"]["parity"].get<int>() << "\n";
  std::cout << "invariant rows (r_minus, r_zero, r_plus):\n";
  for (const auto& r : a["invariant"]["rows"])
    std::cout << "  (" << r[0].get<int>() << ", " << r[1].get<int>() << ", "
              << r[2].get<int>() << ")\n";
  std::cout << "tree: " << a["tree"].get<std::string>() << "\n";
  if (a.contains("oracle")) {
    const auto& o = a["oracle"];
    std::cout << "oracle parity: " << o["parity"].get<int>() << " ("
              << (o["agrees_with_exact"].get<bool>() ? "agrees" : "DISAGREES")
              << " with the exact computation)\n";
    for (const auto& t : o["trials"])
      std::cout << "  s = " << t["s"].get<std::string>() << ": count "
                << t["count"].get<int>() << " stabilized at scale "
                << t["stabilized_at"].get<int>() << "\n";
  }
}

struct InputPair {
  std::string kind;
  std::string payload;  // expression text or file content
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germlab: blow-spherical invariants of real plane curve germs"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze one germ");
  std::string a_poly, a_param, a_tree_out;
  bool a_json = false, a_oracle = false;
  auto* a_poly_opt = analyze->add_option("--poly", a_poly, "Polynomial in x, y");
  auto* a_param_opt =
      analyze->add_option("--param", a_param, "Parametric branches JSON file");
  a_poly_opt->excludes(a_param_opt);
  analyze->add_flag("--json", a_json, "Print the JSON document");
  analyze->add_option("--tree-out", a_tree_out, "Write the tree in DOT format");
  analyze->add_flag("--oracle", a_oracle,
                    "Append the projection-count oracle section");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare two germs");
  std::vector<std::string> c_polys, c_params;
  bool c_json = false;
  compare->add_option("--poly", c_polys, "Polynomial input (repeatable)");
  compare->add_option("--param", c_params, "Parametric JSON file (repeatable)");
  compare->add_flag("--json", c_json, "Print the JSON document");

  // realize
  auto* realize = app.add_subcommand("realize", "Realize an invariant");
  std::string r_invariant;
  bool r_verify = false, r_json = false;
  realize->add_option("--invariant", r_invariant, "Invariant rows JSON file")
      ->required();
  realize->add_flag("--verify", r_verify, "Re-analyze and check the round trip");
  realize->add_flag("--json", r_json, "Print the JSON document");

  // link
  auto* link = app.add_subcommand("link", "Analyze a PL sphere link");
  std::string l_file, l_point = "0,0,1";
  bool l_euler = false, l_diam = false, l_parity = false, l_nac = false,
       l_anti = false, l_json = false;
  int l_cap = 0;
  link->add_option("--file", l_file, "Link JSON file")->required();
  link->add_flag("--euler", l_euler, "Check the Euler-cycle condition");
  link->add_flag("--diameter", l_diam, "Crossing-distance diameter");
  link->add_flag("--parity", l_parity, "Antipodal crossing parity");
  link->add_option("--parity-point", l_point,
                   "Generic point 'x,y,z' for --parity");
  link->add_flag("--nac", l_nac, "Number of allowed circles");
  link->add_flag("--antipodal", l_anti, "Antipodal correspondence report");
  link->add_option("--cycle-cap", l_cap, "Simple-cycle enumeration cap");
  link->add_flag("--json", l_json, "Print the JSON document");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    if (a_poly.empty() == a_param.empty()) {
      std::cerr << "error: provide exactly one of --poly or --param\n";
      return kExitInput;
    }
    std::string kind = a_poly.empty() ? "param" : "poly";
    std::string payload = a_poly.empty() ? read_file(a_param) : a_poly;
    Owned out, err;
    int status =
        germlab_analyze(kind.c_str(), payload.c_str(), a_oracle, &out.p, &err.p);
    if (!out.p) return report_error(status, err);
    J doc = J::parse(out.str());
    if (!a_tree_out.empty()) {
      std::ofstream tf(a_tree_out);
      if (!tf) {
        std::cerr << "error: cannot write '" << a_tree_out << "'\n";
        return kExitInput;
      }
      tf << doc["analysis"]["tree_dot"].get<std::string>();
    }
    if (a_json)
      std::cout << out.str();
    else
      print_analysis(doc["analysis"]);
    if (status != GERMLAB_OK && err.p) std::cerr << "error: " << err.str() << "\n";
    return status;
  }

  if (compare->parsed()) {
    std::vector<InputPair> inputs;
    for (const auto& p : c_polys) inputs.push_back({"poly", p});
    for (const auto& p : c_params) inputs.push_back({"param", read_file(p)});
    if (inputs.size() != 2) {
      std::cerr << "error: compare needs exactly two inputs\n";
      return kExitInput;
    }
    Owned out, err;
    int status = germlab_compare(inputs[0].kind.c_str(),
                                 inputs[0].payload.c_str(),
                                 inputs[1].kind.c_str(),
                                 inputs[1].payload.c_str(), &out.p, &err.p);
    if (!out.p) return report_error(status, err);
    if (c_json) {
      std::cout << out.str();
    } else {
      J doc = J::parse(out.str());
      std::cout << "blow-spherically equivalent: "
                << (doc["bs_equivalent"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "branch-by-branch (same invariant): "
                << (doc["branch_by_branch"].get<bool>() ? "yes" : "no") << "\n";
      if (doc["bs_equivalent"].get<bool>()) {
        std::cout << "matching (k-map entry pairs):";
        for (const auto& m : doc["matching"])
          std::cout << " " << m[0].get<int>() << "-" << m[1].get<int>();
        std::cout << "\n";
      }
    }
    return status;
  }

  if (realize->parsed()) {
    Owned out, err;
    int status = germlab_realize(read_file(r_invariant).c_str(), r_verify,
                                 &out.p, &err.p);
    if (!out.p) return report_error(status, err);
    J doc = J::parse(out.str());
    if (r_json) {
      std::cout << out.str();
    } else {
      std::cout << doc["polynomial"].get<std::string>() << "\n";
      if (!doc["verified"].is_null())
        std::cout << "round-trip verified: "
                  << (doc["verified"].get<bool>() ? "yes" : "no") << "\n";
    }
    return status;
  }

  if (link->parsed()) {
    J req;
    req["euler"] = l_euler;
    req["diameter"] = l_diam;
    req["parity"] = l_parity;
    req["antipodal"] = l_anti;
    req["nac"] = l_nac;
    if (l_parity) req["parity_point"] = parse_point_arg(l_point);
    if (l_cap > 0) req["cycle_cap"] = l_cap;
    Owned out, err;
    int status = germlab_link(read_file(l_file).c_str(), req.dump().c_str(),
                              &out.p, &err.p);
    if (!out.p) return report_error(status, err);
    if (l_json) {
      std::cout << out.str();
      return status;
    }
    J doc = J::parse(out.str());
    std::cout << "vertices " << doc["vertices"].get<int>() << ", edges "
              << doc["edges"].get<int>() << ", faces " << doc["faces"].get<int>()
              << ", circles " << doc["circles"].get<int>() << "\n";
    if (doc.contains("euler_cycle"))
      std::cout << "euler cycle: "
                << (doc["euler_cycle"].get<bool>() ? "yes" : "no") << "\n";
    if (doc.contains("diameter"))
      std::cout << "diameter: " << doc["diameter"].get<int>() << "\n";
    if (doc.contains("antipodal_parity"))
      std::cout << "antipodal parity: " << doc["antipodal_parity"].get<int>()
                << "\n";
    if (doc.contains("antipodal")) {
      std::cout << "antipodally invariant: "
                << (doc["antipodal"]["invariant"].get<bool>() ? "yes" : "no")
                << "; circle images:";
      for (const auto& c : doc["antipodal"]["circle_image"])
        std::cout << " " << c.get<int>();
      std::cout << "\n";
    }
    if (doc.contains("nac")) {
      std::cout << "nac: " << doc["nac"]["value"].get<int>();
      if (doc["nac"]["capped"].get<bool>()) std::cout << " (lower bound only)";
      std::cout << " with " << doc["nac"]["witness"].size()
                << " witness circle(s)\n";
    }
    return status;
  }

  return kExitInput;
}
