#include "surfep/io.hpp"

#include <cstdio>
#include <fstream>

namespace surfep::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<Elem> elems(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an index list");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::int64_t(UINT32_MAX))
      parse_error(where + ": indices must be non-negative integers");
    out.push_back(v.get<Elem>());
  }
  return out;
}

std::vector<std::vector<Elem>> elem_rows(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected a list of index lists");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : j) out.push_back(elems(row, where));
  return out;
}

json tuple_lists(const SurfaceTuple& t) { return {{"x", t.x()}, {"y", t.y()}}; }

SurfaceTuple tuple_over(const Workspace& ws, const FiniteGroup& target, const json& j,
                        const std::string& where) {
  if (j.is_string()) {
    const auto it = ws.tuples.find(j.get<std::string>());
    if (it == ws.tuples.end()) parse_error(where + ": unknown tuple \"" + j.get<std::string>() + "\"");
    if (!(it->second.target() == target)) parse_error(where + ": tuple has the wrong target group");
    return it->second;
  }
  return SurfaceTuple(target, elems(field(j, "x", where), where + ".x"),
                      elems(field(j, "y", where), where + ".y"));
}

SubgroupSpec relative_from(const Workspace& ws, const json& j, const std::string& where) {
  const FiniteGroup q = ws.group_ref(field(j, "Q", where));
  return make_subgroup_spec(tuple_over(ws, q, field(j, "nu", where), where + ".nu"),
                            elems(field(j, "S", where), where + ".S"));
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Outcome outcome_from(const std::string& s) {
  for (Outcome o : {Outcome::Proper, Outcome::NotProper, Outcome::NotSolution, Outcome::NotReduced})
    if (to_string(o) == s) return o;
  parse_error("unknown outcome \"" + s + "\"");
}

template <class F>
auto translating(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
  json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

FiniteGroup group_from_json(const json& j) {
  return translating([&] {
    const auto& ord = field(j, "order", "group");
    if (!ord.is_number_integer() || ord.get<std::int64_t>() < 1) parse_error("group: bad \"order\"");
    const bool has_table = j.contains("table"), has_perms = j.contains("permutations");
    if (has_table == has_perms) parse_error("group: need exactly one of \"table\" and \"permutations\"");
    FiniteGroup g = has_table ? FiniteGroup::from_table(elem_rows(j.at("table"), "group.table"))
                              : FiniteGroup::from_permutations(
                                    elem_rows(j.at("permutations"), "group.permutations"));
    if (g.order() != ord.get<std::size_t>())
      throw Error(Errc::InvalidTable, "group: \"order\" disagrees with the generated group",
                  {ord.get<std::int64_t>(), std::int64_t(g.order())});
    if (j.contains("labels")) g = g.with_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
  });
}

FiniteGroup Workspace::group(const std::string& name) const {
  if (const auto it = groups.find(name); it != groups.end()) return it->second;
  return catalog::by_name(name);
}

FiniteGroup Workspace::group_ref(const json& j) const {
  return j.is_string() ? group(j.get<std::string>()) : group_from_json(j);
}

Workspace load_workspace(const json& doc) {
  return translating([&] {
    if (!doc.is_object()) parse_error("workspace: expected a JSON object");
    Workspace ws;
    if (doc.contains("groups"))
      for (const auto& [name, g] : doc.at("groups").items())
        ws.groups.emplace(name, g.is_string() ? catalog::by_name(g.get<std::string>())
                                              : group_from_json(g));
    if (doc.contains("homomorphisms"))
      for (const auto& [name, h] : doc.at("homomorphisms").items()) {
        const std::string where = "homomorphism " + name;
        ws.homomorphisms.emplace(
            name, GroupHom(ws.group(field(h, "domain", where).get<std::string>()),
                           ws.group(field(h, "codomain", where).get<std::string>()),
                           elems(field(h, "map", where), where)));
      }
    if (doc.contains("tuples"))
      for (const auto& [name, t] : doc.at("tuples").items()) {
        const std::string where = "tuple " + name;
        SurfaceTuple tup(ws.group(field(t, "target", where).get<std::string>()),
                         elems(field(t, "x", where), where), elems(field(t, "y", where), where));
        if (t.contains("genus") && t.at("genus").get<std::size_t>() != tup.genus())
          throw Error(Errc::GenusMismatch, where + ": \"genus\" disagrees with the image lists");
        ws.tuples.emplace(name, std::move(tup));
      }
    if (doc.contains("relatives")) ws.relatives = doc.at("relatives");
    if (doc.contains("problems")) ws.problems = doc.at("problems");
    for (const auto& [name, r] : ws.relatives.items()) relative_from(ws, r, "relative " + name);
    for (const auto& [name, p] : ws.problems.items()) resolve_problem(ws, name);
    return ws;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Workspace load_workspace_file(const std::string& path) { return load_workspace(read_json_file(path)); }

ResolvedProblem resolve_problem(const Workspace& ws, const std::string& problem_name,
                                const std::optional<std::string>& relative_name) {
  return translating([&]() -> ResolvedProblem {
    if (!ws.problems.contains(problem_name))
      throw Error(Errc::InvalidArgument, "unknown problem \"" + problem_name + "\"");
    const json& p = ws.problems.at(problem_name);
    const std::string where = "problem " + problem_name;
    const FiniteGroup k = ws.group_ref(field(p, "K", where));
    const FiniteGroup h = ws.group_ref(field(p, "H", where));
    const ActionSpec action = p.contains("action")
                                  ? ActionSpec(h, k, elem_rows(p.at("action"), where + ".action"))
                                  : ActionSpec::trivial(h, k);
    const SurfaceTuple beta = tuple_over(ws, h, field(p, "beta_bar", where), where + ".beta_bar");
    std::vector<Elem> free;
    if (p.contains("free_factor")) free = elems(p.at("free_factor"), where + ".free_factor");
    SplitEP ep = make_split_ep(k, h, action, beta, field(p, "genus", where).get<std::size_t>(),
                               std::move(free));

    std::optional<SubgroupSpec> rel;
    std::optional<std::string> rel_name = relative_name;
    if (!rel_name && p.contains("relative") && p.at("relative").is_string())
      rel_name = p.at("relative").get<std::string>();
    if (rel_name) {
      if (!ws.relatives.contains(*rel_name))
        throw Error(Errc::InvalidArgument, "unknown relative spec \"" + *rel_name + "\"");
      rel = relative_from(ws, ws.relatives.at(*rel_name), "relative " + *rel_name);
    } else if (p.contains("relative")) {
      rel = relative_from(ws, p.at("relative"), where + ".relative");
    }
    if (rel && rel->nu.genus() != ep.genus())
      throw Error(Errc::GenusMismatch, where + ": relative spec has genus " +
                                           std::to_string(rel->nu.genus()));
    std::string hash = content_hash(ep, rel);
    return {std::move(ep), std::move(rel), problem_name, std::move(rel_name), std::move(hash)};
  });
}

json relative_to_json(const SubgroupSpec& spec) {
  return {{"Q", group_to_json(spec.Q())}, {"nu", tuple_lists(spec.nu)}, {"S", spec.S.members()}};
}

json problem_to_json(const SplitEP& ep, const std::optional<SubgroupSpec>& relative) {
  json j{{"genus", ep.genus()},
         {"K", group_to_json(ep.K())},
         {"H", group_to_json(ep.H())},
         {"action", ep.action().perms()},
         {"beta_bar", tuple_lists(ep.beta_bar())}};
  if (!ep.free_factor().empty()) j["free_factor"] = ep.free_factor();
  if (relative) j["relative"] = relative_to_json(*relative);
  return j;
}

std::string content_hash(const SplitEP& ep, const std::optional<SubgroupSpec>& relative) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : problem_to_json(ep, relative).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

json certificate_to_json(const SolutionCertificate& cert, const ResolvedProblem& problem) {
  json checks = json::array(), witnesses = json::array(), memberships = json::array();
  for (const auto& c : cert.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"failure", c.failure}, {"detail", c.detail}});
  for (const auto& w : cert.witnesses)
    witnesses.push_back({{"word", w.word.to_string()}, {"value", w.value}});
  for (const auto& m : cert.memberships)
    memberships.push_back(
        {{"kind", m.kind}, {"slot", m.slot}, {"word", m.word.to_string()}, {"holds", m.holds}});
  auto words = [](const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(w.to_string());
    return out;
  };
  return {{"format", certificate_format},
          {"instance_hash", problem.hash},
          {"problem", problem.problem_name},
          {"relative_name", problem.relative_name ? json(*problem.relative_name) : json(nullptr)},
          {"genus", cert.phi.genus()},
          {"A_order", cert.phi.target().order()},
          {"phi", tuple_lists(cert.phi)},
          {"free_images", cert.free_images},
          {"relative", cert.relative},
          {"solution", cert.solution},
          {"proper", cert.proper},
          {"outcome", std::string(to_string(cert.outcome))},
          {"checks", checks},
          {"witnesses", witnesses},
          {"memberships", memberships},
          {"selected", cert.selected},
          {"prefix_x", words(cert.prefix_x)},
          {"prefix_y", words(cert.prefix_y)},
          {"s", cert.s},
          {"n", cert.n},
          {"m", cert.m},
          {"offending_index", cert.offending_index ? json(*cert.offending_index) : json(nullptr)},
          {"notes", cert.notes}};
}

CertificateFile certificate_from_json(const json& j) {
  return translating([&] {
    const std::string where = "certificate";
    if (field(j, "format", where) != certificate_format)
      parse_error("certificate: unsupported format " + j.at("format").dump());
    CertificateFile f;
    f.instance_hash = field(j, "instance_hash", where).get<std::string>();
    f.problem = field(j, "problem", where).get<std::string>();
    if (j.contains("relative_name") && !j.at("relative_name").is_null())
      f.relative_name = j.at("relative_name").get<std::string>();
    const json& phi = field(j, "phi", where);
    f.x = field(phi, "x", "certificate.phi").get<std::vector<std::int64_t>>();
    f.y = field(phi, "y", "certificate.phi").get<std::vector<std::int64_t>>();
    f.free_images = elems(j.value("free_images", json::array()), "certificate.free_images");
    f.relative = j.value("relative", false);
    f.claimed_proper = j.value("proper", false);
    f.outcome = outcome_from(j.value("outcome", std::string("not_solution")));
    for (const auto& w : j.value("witnesses", json::array()))
      f.witnesses.push_back({Word::parse(field(w, "word", "witness").get<std::string>()),
                             field(w, "value", "witness").get<Elem>()});
    for (const auto& m : j.value("memberships", json::array()))
      f.memberships.push_back({field(m, "kind", "membership").get<std::string>(),
                               field(m, "slot", "membership").get<std::size_t>(),
                               Word::parse(field(m, "word", "membership").get<std::string>()),
                               field(m, "holds", "membership").get<bool>()});
    f.selected = j.value("selected", std::vector<std::size_t>{});
    for (const auto& w : j.value("prefix_x", std::vector<std::string>{}))
      f.prefix_x.push_back(Word::parse(w));
    for (const auto& w : j.value("prefix_y", std::vector<std::string>{}))
      f.prefix_y.push_back(Word::parse(w));
    f.s = j.value("s", std::size_t{0});
    f.n = j.value("n", std::size_t{0});
    f.m = j.value("m", std::size_t{0});
    if (j.contains("offending_index") && !j.at("offending_index").is_null())
      f.offending_index = j.at("offending_index").get<std::size_t>();
    f.notes = j.value("notes", std::vector<std::string>{});
    return f;
  });
}

SolutionCertificate CertificateFile::with_phi(SurfaceTuple phi) const {
  SolutionCertificate c{.phi = std::move(phi), .free_images = free_images};
  c.relative = relative;
  c.proper = claimed_proper;
  c.outcome = outcome;
  c.witnesses = witnesses;
  c.memberships = memberships;
  c.selected = selected;
  c.prefix_x = prefix_x;
  c.prefix_y = prefix_y;
  c.s = s;
  c.n = n;
  c.m = m;
  c.offending_index = offending_index;
  c.notes = notes;
  return c;
}

}  // namespace surfep::io
