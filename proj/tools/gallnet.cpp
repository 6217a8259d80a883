#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gallnet/encoding.hpp"
#include "gallnet/hierarchy.hpp"
#include "gallnet/newick.hpp"
#include "gallnet/oracle.hpp"
#include "gallnet/systems.hpp"

using namespace gallnet;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_input, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string one_line(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      if (!out.empty() && out.back() != ' ') out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

int exit_code(errc c) {
  switch (c) {
    case errc::too_many_reticulations:
    case errc::class_too_large:
    case errc::budget_exceeded:
    case errc::ground_set_too_large:
    case errc::blowup:
      return 3;
    default:
      return 2;
  }
}

long long class_cap_from_env() {
  const char* env = std::getenv("LEVEL1_MAX_CLASS");
  if (!env || !*env) return default_class_cap;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) fail(errc::bad_input, "invalid LEVEL1_MAX_CLASS value");
  return v;
}

std::string join(const cluster& c) {
  std::string s;
  for (const std::string& x : c) {
    if (!s.empty()) s += ",";
    s += x;
  }
  return s;
}

int run_report(const oracle_report& rep) {
  std::cout << rep.text;
  if (!rep.counterexamples.empty()) {
    std::cout << "counterexamples:\n";
    for (const std::string& w : rep.counterexamples) std::cout << "  " << one_line(w) << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted binary phylogenetic networks and the systems they induce"};
  app.require_subcommand(1);

  std::string net_file, other_file, which, by, emit_dir, clusters_file, leaves;
  int max_leaves = 5, search_leaves = 4, gen_level = 0;
  bool no_trees = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate an extended-newick network");
  validate_cmd->add_option("file", net_file, "eNewick file")->required();

  CLI::App* systems_cmd = app.add_subcommand("systems", "emit one induced system");
  systems_cmd->add_option("file", net_file, "eNewick file")->required();
  systems_cmd->add_option("--which", which, "triplets|trees|hard|soft|mul")
      ->required()
      ->check(CLI::IsMember({"triplets", "trees", "hard", "soft", "mul"}));

  CLI::App* encoded_cmd = app.add_subcommand("encoded", "decide encodedness, report the class");
  encoded_cmd->add_option("file", net_file, "eNewick file")->required();
  encoded_cmd->add_option("--emit-class", emit_dir, "write every class member into this directory");

  CLI::App* compare_cmd = app.add_subcommand("compare", "compare two networks");
  compare_cmd->add_option("a", net_file, "first eNewick file")->required();
  compare_cmd->add_option("b", other_file, "second eNewick file")->required();
  compare_cmd->add_option("--by", by, "triplets|trees|soft|hard|iso")
      ->required()
      ->check(CLI::IsMember({"triplets", "trees", "soft", "hard", "iso"}));

  CLI::App* weak_cmd = app.add_subcommand("weak-hierarchy", "test a cluster file");
  weak_cmd->add_option("file", clusters_file, "cluster-system file")->required();

  CLI::App* export_cmd = app.add_subcommand("export-dot", "emit the network as DOT");
  export_cmd->add_option("file", net_file, "eNewick file")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force verification suite");
  oracle_cmd->require_subcommand(1);
  CLI::App* theorem_cmd = oracle_cmd->add_subcommand("verify-theorem",
                                                     "exhaustive encoding checks on small leaf sets");
  theorem_cmd->add_option("--max-leaves", max_leaves, "largest ground set, 3..5")
      ->capture_default_str();
  CLI::App* lemma_cmd = oracle_cmd->add_subcommand("lemma", "leaf-attachment distinctness check");
  CLI::App* gens_cmd = oracle_cmd->add_subcommand("generators", "list level-k generators");
  gens_cmd->add_option("--level", gen_level, "level, 1..3")->required();
  CLI::App* search_cmd = oracle_cmd->add_subcommand("level2-search",
                                                    "search level-2 counterexample phenomena");
  search_cmd->add_option("--max-leaves", search_leaves, "largest ground set, 3..4")
      ->capture_default_str();
  CLI::App* enum_cmd = oracle_cmd->add_subcommand("enumerate", "list admissible level-1 networks");
  enum_cmd->add_option("--leaves", leaves, "comma-separated leaf labels")->required();
  enum_cmd->add_flag("--no-trees", no_trees, "skip reticulation-free networks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      validation_report rep = validate(parse_enewick(read_file(net_file)));
      std::cout << rep.to_text();
      return rep.valid ? 0 : 1;
    }
    if (systems_cmd->parsed()) {
      network n = parse_network(read_file(net_file));
      if (which == "triplets")
        std::cout << triplet_lines(consistent_triplets(n));
      else if (which == "trees")
        std::cout << tree_lines(displayed_trees(n));
      else if (which == "hard")
        std::cout << cluster_lines(hardwired_clusters(n));
      else if (which == "soft")
        std::cout << cluster_lines(softwired_clusters(n));
      else
        std::cout << mul_tree(n).newick() << "\n";
      return 0;
    }
    if (encoded_cmd->parsed()) {
      network n = parse_network(read_file(net_file));
      encoding_report rep = is_encoded(n, !emit_dir.empty(), class_cap_from_env());
      std::cout << rep.to_text();
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        int i = 0;
        for (const std::string& w : *rep.witnesses) {
          char name[32];
          std::snprintf(name, sizeof name, "%06d.enwk", ++i);
          std::ofstream out(std::filesystem::path(emit_dir) / name, std::ios::binary);
          if (!out) fail(errc::bad_input, "cannot write into " + emit_dir);
          out << w << "\n";
        }
      }
      return rep.encoded ? 0 : 1;
    }
    if (compare_cmd->parsed()) {
      network a = parse_network(read_file(net_file));
      network b = parse_network(read_file(other_file));
      bool eq;
      if (by == "iso")
        eq = isomorphic(a, b);
      else
        eq = systems_equal(a, b,
                           by == "triplets"  ? system_kind::triplets
                           : by == "trees"   ? system_kind::trees
                           : by == "soft"    ? system_kind::clusters_soft
                                             : system_kind::clusters_hard);
      std::cout << (eq ? "equal\n" : "different\n");
      return eq ? 0 : 1;
    }
    if (weak_cmd->parsed()) {
      weak_hierarchy_check chk = is_weak_hierarchy(parse_cluster_lines(read_file(clusters_file)));
      std::cout << "weak hierarchy: " << (chk.ok ? "yes" : "no") << "\n";
      if (chk.witness) {
        std::cout << "violating triple:\n";
        for (const cluster* c : {&chk.witness->c1, &chk.witness->c2, &chk.witness->c3})
          std::cout << "  " << join(*c) << "\n";
      }
      return chk.ok ? 0 : 1;
    }
    if (export_cmd->parsed()) {
      std::cout << export_dot(parse_network(read_file(net_file)));
      return 0;
    }
    if (theorem_cmd->parsed()) return run_report(verify_theorem(max_leaves));
    if (lemma_cmd->parsed()) return run_report(verify_lemma_montpellier());
    if (gens_cmd->parsed()) {
      std::vector<generator> gens = enumerate_generators(gen_level);
      std::cout << "level " << gen_level << " generators: " << gens.size() << "\n";
      for (const generator& g : gens) {
        std::cout << "vertices=" << g.vertex_count << " sinks=" << g.sink_rets.size() << " arcs=";
        for (std::size_t i = 0; i < g.arcs.size(); i++)
          std::cout << (i ? "," : "") << g.arcs[i].tail << "->" << g.arcs[i].head;
        std::cout << "\n";
      }
      return 0;
    }
    if (search_cmd->parsed()) {
      phenomena_report rep = search_level2_phenomena(search_leaves);
      std::cout << rep.to_text();
      return rep.all_found() ? 0 : 1;
    }
    if (enum_cmd->parsed()) {
      std::vector<std::string> labels;
      std::stringstream ss(leaves);
      std::string item;
      while (std::getline(ss, item, ',')) labels.push_back(item);
      for (const network& n : enumerate_level1(labels, !no_trees))
        std::cout << canonical_newick(n) << "\n";
      return 0;
    }
  } catch (const error& e) {
    std::cerr << "gallnet: " << errc_name(e.code()) << ": " << one_line(e.what()) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "gallnet: " << one_line(e.what()) << "\n";
    return 2;
  }
  return 2;
}
