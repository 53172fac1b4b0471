#pragma once

// JSON interchange: workspace files (named groups, homomorphisms, tuples,
// problems and relative specs) and solution certificates.
//
// Elements of A = K x| H are written as indices k*|H| + h.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "surfep/embedding.hpp"

namespace surfep::io {

using json = nlohmann::json;

inline constexpr const char* certificate_format = "surfep-certificate/1";

json group_to_json(const FiniteGroup& g);
// A group object ("order", optional "labels", one of "table"/"permutations").
FiniteGroup group_from_json(const json& j);

struct Workspace {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupHom> homomorphisms;
  std::map<std::string, SurfaceTuple> tuples;
  json problems = json::object();
  json relatives = json::object();

  // Named workspace group, else a catalog name.
  FiniteGroup group(const std::string& name) const;
  // A name or an inline group object.
  FiniteGroup group_ref(const json& j) const;
};

// Validates every named object and every problem/relative reference.
Workspace load_workspace(const json& doc);
Workspace load_workspace_file(const std::string& path);
json read_json_file(const std::string& path);

struct ResolvedProblem {
  SplitEP ep;
  std::optional<SubgroupSpec> relative;
  std::string problem_name;
  std::optional<std::string> relative_name;  // set when taken from "relatives"
  std::string hash;
};

// `relative_name` overrides an inline "relative" of the problem.
ResolvedProblem resolve_problem(const Workspace& ws, const std::string& problem_name,
                                const std::optional<std::string>& relative_name = {});

// Self-contained problem object with inline groups.
json problem_to_json(const SplitEP& ep, const std::optional<SubgroupSpec>& relative = {});
json relative_to_json(const SubgroupSpec& spec);

// FNV-1a 64 over the canonical dump of problem_to_json, as 16 hex digits.
std::string content_hash(const SplitEP& ep, const std::optional<SubgroupSpec>& relative);

json certificate_to_json(const SolutionCertificate& cert, const ResolvedProblem& problem);

// The parts of a certificate file that verification needs. `phi` is kept as
// raw indices so that a tuple violating the relation can still be reported.
struct CertificateFile {
  std::string instance_hash;
  std::string problem;
  std::optional<std::string> relative_name;
  std::vector<std::int64_t> x, y;
  std::vector<Elem> free_images;
  bool relative = false;
  bool claimed_proper = false;
  Outcome outcome = Outcome::NotSolution;
  std::vector<KernelWitness> witnesses;
  std::vector<MembershipRecord> memberships;
  std::vector<std::size_t> selected;
  std::vector<Word> prefix_x, prefix_y;
  std::size_t s = 0, n = 0, m = 0;
  std::optional<std::size_t> offending_index;
  std::vector<std::string> notes;

  // Certificate over a validated phi, carrying the recorded auxiliary data.
  SolutionCertificate with_phi(SurfaceTuple phi) const;
};

CertificateFile certificate_from_json(const json& j);

}  // namespace surfep::io
