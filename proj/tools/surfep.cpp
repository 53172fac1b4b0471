// surfep: solve and verify split embedding problems from JSON workspace files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "surfep/io.hpp"
#include "surfep/oracle.hpp"
#include "surfep/solver.hpp"

using namespace surfep;
using io::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0, exit_invalid = 1, exit_bound = 2, exit_not_reduced = 3;

int exit_for(const Error& e) { return e.code() == Errc::GenusTooSmall ? exit_bound : exit_invalid; }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

int cmd_solve(const std::string& file, const std::string& problem,
              const std::optional<std::string>& relative, const std::string& out) {
  const io::Workspace ws = io::load_workspace_file(file);
  const io::ResolvedProblem rp = io::resolve_problem(ws, problem, relative);
  SolutionCertificate cert = [&] {
    if (!rp.ep.free_factor().empty()) {
      if (rp.relative)
        throw Error(Errc::InvalidArgument, "relative specs are not supported with a free factor");
      return solve_free_product(rp.ep);
    }
    return rp.relative ? solve_relative(rp.ep, *rp.relative) : solve_gamma_level(rp.ep);
  }();
  write_output(io::certificate_to_json(cert, rp).dump(2) + "\n", out);

  std::cerr << problem << ": " << to_string(cert.outcome) << " (g=" << rp.ep.genus()
            << ", |A|=" << rp.ep.A().order() << ", m=" << cert.m << ", s=" << cert.s
            << ", n=" << cert.n << ")\n";
  if (cert.outcome == Outcome::NotReduced) {
    std::cerr << "normalized x_" << cert.offending_index.value_or(0)
              << " does not reduce into N; the reduction hypotheses do not hold\n";
    return exit_not_reduced;
  }
  if (!cert.proper) {
    if (const auto* f = cert.first_failure())
      std::cerr << "check failed: " << f->name << " (" << f->failure << ")\n";
    return exit_invalid;
  }
  return exit_ok;
}

void print_table(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.pass) std::cout << "  [" << c.failure << "]";
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
}

int finish_verify(const std::vector<CheckRecord>& checks) {
  print_table(checks);
  for (const auto& c : checks)
    if (!c.pass) {
      std::cerr << "verification failed at \"" << c.name << "\": " << c.failure << "\n";
      return exit_invalid;
    }
  std::cerr << "all " << checks.size() << " checks passed\n";
  return exit_ok;
}

int cmd_verify(const std::string& cert_path, const std::string& instance_path) {
  const io::CertificateFile cf = io::certificate_from_json(io::read_json_file(cert_path));
  const io::Workspace ws = io::load_workspace_file(instance_path);
  const io::ResolvedProblem rp = io::resolve_problem(ws, cf.problem, cf.relative_name);
  const FiniteGroup& A = rp.ep.A();

  std::vector<CheckRecord> checks;
  checks.push_back({"instance hash", cf.instance_hash == rp.hash, "InstanceMismatch",
                    "certificate " + cf.instance_hash + ", instance " + rp.hash});

  // phi is validated from the raw indices first so that a broken relation is
  // reported as a failed check rather than a parse error.
  const std::size_t g = rp.ep.genus();
  bool shape = cf.x.size() == g && cf.y.size() == g;
  std::vector<Elem> x, y;
  for (const auto* src : {&cf.x, &cf.y})
    for (std::int64_t v : *src) {
      shape = shape && A.contains(v);
      (src == &cf.x ? x : y).push_back(Elem(shape ? v : 0));
    }
  checks.push_back({"raw indices", shape, "GenusMismatch",
                    shape ? "" : "phi needs " + std::to_string(g) + " x and y images in A"});
  if (!shape) return finish_verify(checks);
  const Elem rel = relation_value(A, x, y);
  if (rel != A.identity()) {
    checks.push_back({"relation", false, "RelationViolated", "product of commutators = " + A.label(rel)});
    return finish_verify(checks);
  }

  const SolutionCertificate fresh = recheck_certificate(
      rp.ep, cf.with_phi(SurfaceTuple(A, x, y)), rp.relative ? &*rp.relative : nullptr);
  checks.insert(checks.end(), fresh.checks.begin(), fresh.checks.end());
  checks.push_back({"claimed outcome", cf.claimed_proper == fresh.proper && cf.outcome == fresh.outcome,
                    "OutcomeMismatch",
                    "certificate says " + std::string(to_string(cf.outcome)) + ", recomputed " +
                        std::string(to_string(fresh.outcome))});
  checks.push_back({"proper", fresh.proper, "NotProper", std::string(to_string(fresh.outcome))});
  return finish_verify(checks);
}

std::int64_t positive(std::int64_t v, const char* name) {
  if (v < 1) throw Error(Errc::InvalidArgument, std::string(name) + " must be positive");
  return v;
}

int cmd_gen(const oracle::InstanceRecipe& recipe, std::size_t count, const std::string& out) {
  const auto instances = oracle::generate_instances(recipe, count);
  json problems = json::object();
  char name[32];
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::snprintf(name, sizeof name, "inst%04zu", i);
    json p = io::problem_to_json(instances[i].ep, instances[i].relative);
    p["description"] = instances[i].description;
    if (instances[i].adversarial) p["adversarial"] = true;
    problems[name] = std::move(p);
  }
  write_output(json{{"problems", problems}}.dump(2) + "\n", out);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive solver for finite split embedding problems over surface groups"};
  app.require_subcommand(1);

  std::string file, problem, out, cert_path;
  std::optional<std::string> relative;
  auto* solve = app.add_subcommand("solve", "Solve a problem from a workspace file");
  solve->add_option("file", file, "Workspace JSON")->required();
  solve->add_option("problem", problem, "Problem name")->required();
  solve->add_option("--relative", relative, "Relative spec name from \"relatives\"");
  solve->add_option("--out", out, "Certificate output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against its instance");
  verify->add_option("certificate", cert_path, "Certificate JSON")->required();
  verify->add_option("instance", file, "Workspace JSON")->required();

  std::int64_t genus = 0, size_k = 0, size_h = 0, index = 0;
  auto* plan = app.add_subcommand("plan", "Index and genus plan for an extension");
  plan->add_option("--genus", genus)->required();
  plan->add_option("--K", size_k, "|K|")->required();
  plan->add_option("--H", size_h, "|H|")->required();

  auto* genus_cmd = app.add_subcommand("genus", "Genus of an open subgroup of given index");
  genus_cmd->add_option("--genus", genus)->required();
  genus_cmd->add_option("--index", index)->required();

  std::string group_name;
  auto* count = app.add_subcommand("count", "Count surface-relation tuples by enumeration");
  count->add_option("--group", group_name, "Catalog name, or a group of --file")->required();
  count->add_option("--genus", genus)->required();
  count->add_option("--file", file, "Workspace JSON holding the group");

  oracle::InstanceRecipe recipe;
  std::size_t n_instances = 10;
  std::string action = "random", genus_rule = "exact", rel_mode = "none";
  auto* gen = app.add_subcommand("gen", "Generate a workspace of random instances");
  gen->add_option("--seed", recipe.seed);
  gen->add_option("--count", n_instances);
  gen->add_option("--k-sizes", recipe.k_sizes);
  gen->add_option("--h-sizes", recipe.h_sizes);
  gen->add_option("--max-a", recipe.max_a);
  gen->add_option("--slack", recipe.slack);
  gen->add_option("--action", action)->check(CLI::IsMember({"trivial", "inversion", "random"}));
  gen->add_option("--genus-rule", genus_rule)->check(CLI::IsMember({"exact", "slack"}));
  gen->add_option("--relative", rel_mode)
      ->check(CLI::IsMember({"none", "mixed", "independent", "adversarial"}));
  gen->add_option("--out", out, "Output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(file, problem, relative, out);
    if (*verify) return cmd_verify(cert_path, file);
    if (*plan) {
      const ExtensionPlan p = plan_extension(genus, positive(size_k, "--K"), positive(size_h, "--H"));
      std::cout << ojson{{"m", p.m}, {"required_index", p.required_index}, {"h", p.h}}.dump() << "\n";
      return exit_ok;
    }
    if (*genus_cmd) {
      std::cout << ojson{{"genus", open_subgroup_genus(genus, index)}}.dump() << "\n";
      return exit_ok;
    }
    if (*count) {
      const FiniteGroup g =
          file.empty() ? catalog::by_name(group_name) : io::load_workspace_file(file).group(group_name);
      const auto n = oracle::enumerate_surface_tuples(g, std::size_t(positive(genus, "--genus")));
      std::cout << ojson{{"count", n}}.dump() << "\n";
      return exit_ok;
    }
    if (*gen) {
      recipe.action = action == "trivial"     ? oracle::ActionMode::Trivial
                      : action == "inversion" ? oracle::ActionMode::Inversion
                                              : oracle::ActionMode::RandomValid;
      recipe.genus = genus_rule == "exact" ? oracle::GenusRule::ExactBound
                                           : oracle::GenusRule::BoundPlusSlack;
      const std::map<std::string, oracle::RelativeMode> modes{
          {"none", oracle::RelativeMode::None},
          {"mixed", oracle::RelativeMode::Mixed},
          {"independent", oracle::RelativeMode::Independent},
          {"adversarial", oracle::RelativeMode::Adversarial}};
      recipe.relative = modes.at(rel_mode);
      return cmd_gen(recipe, n_instances, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *solve ? exit_for(e) : exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
