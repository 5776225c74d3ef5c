#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfpo/alt.hpp"
#include "cfpo/aut.hpp"
#include "cfpo/dot.hpp"
#include "cfpo/enumerate.hpp"
#include "cfpo/error.hpp"
#include "cfpo/json_io.hpp"
#include "cfpo/paths.hpp"
#include "cfpo/treeify.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) cfpo::fail("MalformedInput", "cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json perm_to_json(const cfpo::PermGroup& g, const cfpo::Perm& f) {
  json obj = json::object();
  for (size_t i = 0; i < g.carrier().size(); ++i) obj[g.carrier()[i]] = g.carrier()[f[i]];
  return obj;
}

struct Verdict {
  bool aut_preserved = false;
  bool roundtrip = false;
};

Verdict verify_one(const cfpo::ColoredPoset& m) {
  cfpo::TreeifyResult t = cfpo::treeify(m);  // asserts group preservation internally
  Verdict v;
  v.aut_preserved = true;
  cfpo::ColoredPoset back = cfpo::interpret_back(t.tree, t.provenance == "disconnected");
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto sorted_pairs = [](std::vector<std::pair<std::string, std::string>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  v.roundtrip = sorted(back.elements()) == sorted(m.elements()) &&
                sorted_pairs(back.relation_pairs()) == sorted_pairs(m.relation_pairs()) &&
                back.colors() == m.colors();
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"finite coloured partial orders: paths, fences, automorphisms, tree conversion"};
  app.require_subcommand(1);
  std::string input = "-";
  int k = 1;
  int max_n = 5;
  int bound = 10;
  bool completed = false;
  bool exclude_root = false;
  std::string route = "auto";
  std::string root;

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "input file or - for stdin"); };
  auto* c_check = app.add_subcommand("check", "CFPO status and components");
  add_input(c_check);
  auto* c_classify = app.add_subcommand("classify", "largest embedded fence");
  add_input(c_classify);
  auto* c_aut = app.add_subcommand("aut", "automorphism group");
  add_input(c_aut);
  c_aut->add_option("--materialise-bound", bound);
  auto* c_orbits = app.add_subcommand("orbits", "orbit partition of k-tuples");
  add_input(c_orbits);
  c_orbits->add_option("--k", k);
  c_orbits->add_option("--materialise-bound", bound);
  auto* c_fixed = app.add_subcommand("fixed", "fixed points");
  add_input(c_fixed);
  auto* c_complete = app.add_subcommand("complete", "bounded-cut completion");
  add_input(c_complete);
  auto* c_treeify = app.add_subcommand("treeify", "tree conversion");
  add_input(c_treeify);
  c_treeify->add_option("--route", route)->check(CLI::IsMember({"auto", "fixed", "odd", "even", "disconnected"}));
  c_treeify->add_option("--root", root);
  auto* c_interpret = app.add_subcommand("interpret", "recover the order from a converted tree");
  add_input(c_interpret);
  c_interpret->add_flag("--exclude-root", exclude_root);
  auto* c_verify = app.add_subcommand("verify", "group preservation and round-trip on one input");
  add_input(c_verify);
  auto* c_dot = app.add_subcommand("dot", "Hasse diagram in DOT form");
  add_input(c_dot);
  c_dot->add_flag("--completed", completed);
  auto* c_enum = app.add_subcommand("enumerate", "connected CFPOs up to isomorphism with verdicts");
  c_enum->add_option("--max-n", max_n)->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_enum->parsed()) {
      for (int n = 1; n <= max_n; ++n) {
        int index = 0;
        for (const auto& p : cfpo::connected_cfpos(n)) {
          json line;
          line["n"] = n;
          line["index"] = index++;
          line["poset"] = cfpo::poset_to_json(p);
          try {
            Verdict v = verify_one(p);
            line["verdict"] = {{"aut_preserved", v.aut_preserved}, {"roundtrip", v.roundtrip}};
          } catch (const cfpo::Error& e) {
            line["verdict"] = {{"error", e.name()}};
          }
          std::cout << line.dump() << "\n";
        }
      }
      return 0;
    }

    cfpo::ColoredPoset p = cfpo::parse_poset_text(read_input(input), c_interpret->parsed());

    if (c_check->parsed()) {
      cfpo::PathContext ctx(p);
      if (!ctx.cfpo()) {
        json err;
        err["error"] = "NotACFPO";
        err["components"] = static_cast<int>(ctx.components().size());
        if (auto w = ctx.non_unique_witness()) {
          err["witness"] = {{"x", w->x}, {"y", w->y}, {"path1", w->path1}, {"path2", w->path2}};
        }
        std::cout << err.dump(2) << "\n";
        return 1;
      }
      json out;
      out["cfpo"] = true;
      out["components"] = static_cast<int>(ctx.components().size());
      std::cout << out.dump(2) << "\n";
    } else if (c_classify->parsed()) {
      cfpo::Classification c = cfpo::classify(p);
      json out;
      out["n"] = c.n;
      out["witness"] = {{"length", c.witness.n},
                        {"reversed", c.witness.reversed},
                        {"images", c.witness.images}};
      std::cout << out.dump(2) << "\n";
    } else if (c_aut->parsed()) {
      cfpo::PermGroup g = cfpo::automorphisms(p, cfpo::AutOptions{bound, 1'000'000});
      json out;
      out["order"] = g.order();
      json gens = json::array();
      for (const auto& f : g.generators()) gens.push_back(perm_to_json(g, f));
      out["generators"] = gens;
      std::cout << out.dump(2) << "\n";
    } else if (c_orbits->parsed()) {
      json out;
      out["k"] = k;
      out["orbits"] = cfpo::orbits(p, k, cfpo::AutOptions{bound, 1'000'000});
      std::cout << out.dump(2) << "\n";
    } else if (c_fixed->parsed()) {
      json out;
      out["fixed"] = cfpo::fixed_points(p);
      std::cout << out.dump(2) << "\n";
    } else if (c_complete->parsed()) {
      std::cout << cfpo::completion_to_json(cfpo::complete(p)).dump(2) << "\n";
    } else if (c_treeify->parsed()) {
      cfpo::TreeifyResult t;
      if (route == "auto") {
        t = cfpo::treeify(p);
      } else if (route == "fixed") {
        std::string r = root;
        if (r.empty()) {
          auto fixed = cfpo::fixed_points(p);
          if (fixed.empty()) cfpo::fail("NoFixedPoint", "no fixed point available");
          r = fixed.front();
        }
        t = cfpo::treeify_fixed_point(p, r);
      } else if (route == "odd") {
        t = cfpo::treeify_odd(p);
      } else if (route == "disconnected") {
        t = cfpo::treeify_disconnected(p);
      } else {  // even
        std::string e = root;
        if (e.empty()) {
          cfpo::Classification c = cfpo::classify(p);
          if (c.n % 2 != 0) cfpo::fail("NotEvenClass", "class is odd; no witness to adjoin under");
          for (const auto& emb : cfpo::alt_embeddings(p, c.n))
            if (!emb.reversed) {
              e = emb.images.front();
              break;
            }
        }
        cfpo::ColoredPoset adjoined = cfpo::adjoin_orbit_points(p, e);
        t = cfpo::treeify_odd(adjoined);
        t.provenance = "even_adjoin";
      }
      std::cout << cfpo::treeify_to_json(t).dump(2) << "\n";
    } else if (c_interpret->parsed()) {
      std::cout << cfpo::poset_to_json(cfpo::interpret_back(p, exclude_root)).dump(2) << "\n";
    } else if (c_verify->parsed()) {
      Verdict v = verify_one(p);
      json out;
      out["aut_preserved"] = v.aut_preserved;
      out["roundtrip"] = v.roundtrip;
      std::cout << out.dump(2) << "\n";
    } else if (c_dot->parsed()) {
      std::set<std::string> u;
      if (p.colors().count("U"))
        u = p.colors().at("U");
      if (completed) {
        cfpo::Completion c = cfpo::complete(p);
        std::set<std::string> virtuals(c.virtual_ids.begin(), c.virtual_ids.end());
        std::cout << cfpo::emit_dot(c.completed, u, virtuals);
      } else {
        std::set<std::string> virtuals;
        if (p.colors().count("VIRTUAL")) virtuals = p.colors().at("VIRTUAL");
        std::cout << cfpo::emit_dot(p, u, virtuals);
      }
    }
    return 0;
  } catch (const cfpo::Error& e) {
    json err;
    err["error"] = e.name();
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return e.name() == "MalformedInput" ? 2 : 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
