#include "surfep/embedding.hpp"

#include <algorithm>

namespace surfep {

namespace {

SubgroupHandle closure_of_images(const SurfaceTuple& t, const std::vector<Elem>& extra) {
  auto seeds = t.images();
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  return subgroup_closure(t.target(), seeds);
}

bool compatible(const SplitEP& ep, const SurfaceTuple& phi, std::string* detail) {
  for (std::size_t i = 1; i <= phi.genus(); ++i) {
    if (ep.alpha()(phi.x(i)) != ep.beta_bar().x(i)) {
      if (detail) *detail = "alpha(phi(x" + std::to_string(i) + ")) != beta(x" + std::to_string(i) + ")";
      return false;
    }
    if (ep.alpha()(phi.y(i)) != ep.beta_bar().y(i)) {
      if (detail) *detail = "alpha(phi(y" + std::to_string(i) + ")) != beta(y" + std::to_string(i) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Proper: return "proper";
    case Outcome::NotProper: return "not_proper";
    case Outcome::NotSolution: return "not_solution";
    case Outcome::NotReduced: return "not_reduced";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// SplitEP

SplitEP::SplitEP(FiniteGroup k, FiniteGroup h, ActionSpec action, SurfaceTuple beta_bar,
                 std::vector<Elem> free_factor)
    : k_(std::move(k)),
      h_(std::move(h)),
      action_(std::move(action)),
      sdp_(semidirect_product(k_, h_, action_)),
      kernel_(surfep::kernel(sdp_.alpha)),
      beta_bar_(std::move(beta_bar)),
      free_(std::move(free_factor)) {
  if (!(beta_bar_.target() == h_))
    throw Error(Errc::InvalidArgument, "beta_bar must map into H");
  for (Elem b : free_)
    if (!h_.contains(b))
      throw Error(Errc::IndexOutOfRange, "free factor image " + std::to_string(b) + " out of range",
                  {std::int64_t(b)});
  if (!closure_of_images(beta_bar_, free_).is_whole())
    throw Error(Errc::BetaNotSurjective, "beta does not map onto H");
  for (Elem b = 0; b < h_.order(); ++b)
    if (sdp_.alpha(sdp_.gamma(b)) != b)
      throw std::logic_error("semidirect product section is not a right inverse");
}

SplitEP SplitEP::with_beta(SurfaceTuple beta_bar) const {
  return SplitEP(k_, h_, action_, std::move(beta_bar), free_);
}

SplitEP make_split_ep(const FiniteGroup& k, const FiniteGroup& h, const ActionSpec& action,
                      const SurfaceTuple& beta_bar, std::size_t genus,
                      std::vector<Elem> free_factor) {
  if (beta_bar.genus() != genus)
    throw Error(Errc::GenusMismatch,
                "beta_bar has genus " + std::to_string(beta_bar.genus()) + ", problem says " +
                    std::to_string(genus),
                {std::int64_t(genus), std::int64_t(beta_bar.genus())});
  return SplitEP(k, h, action, beta_bar, std::move(free_factor));
}

SubgroupSpec make_subgroup_spec(const SurfaceTuple& nu, std::vector<Elem> s_members) {
  std::sort(s_members.begin(), s_members.end());
  s_members.erase(std::unique(s_members.begin(), s_members.end()), s_members.end());
  return SubgroupSpec{nu, SubgroupHandle(nu.target(), std::move(s_members))};
}

// ---------------------------------------------------------------------------
// Checks

const CheckRecord* SolutionCertificate::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

bool claim_proper(const SplitEP& ep, const SurfaceTuple& phi,
                  const std::vector<Elem>& extra_image_elements) {
  std::string detail;
  if (!(phi.target() == ep.A()) || phi.genus() != ep.genus() || !compatible(ep, phi, &detail))
    throw Error(Errc::NotASolution, detail.empty() ? "phi is not over A with the problem genus" : detail);
  for (Elem e : extra_image_elements)
    if (!ep.A().contains(e))
      throw Error(Errc::IndexOutOfRange, "extra element out of range", {std::int64_t(e)});
  return ep.kernel().is_subset_of(closure_of_images(phi, extra_image_elements));
}

SubgroupHandle subgroup_image_under(const SurfaceTuple& beta_bar, const SubgroupSpec& spec) {
  if (beta_bar.genus() != spec.nu.genus())
    throw Error(Errc::GenusMismatch, "beta_bar and nu differ in genus",
                {std::int64_t(beta_bar.genus()), std::int64_t(spec.nu.genus())});
  const FiniteGroup& B = beta_bar.target();
  const FiniteGroup& Q = spec.Q();
  const DirectProduct bq = direct_product(B, Q);

  // T = <(beta(x_i), nu(x_i)), (beta(y_i), nu(y_i))> is the image of the
  // surface group under gamma |-> (beta(gamma), nu(gamma)). An element gamma
  // lies in N = nu^-1(S) iff its T-image has second coordinate in S, so
  // beta(N) = {b : (b,s) in T for some s in S}, the first projection of the
  // subgroup T n (B x S); in particular it is a subgroup of B.
  std::vector<Elem> gens;
  for (std::size_t i = 1; i <= beta_bar.genus(); ++i) {
    gens.push_back(bq.pair(beta_bar.x(i), spec.nu.x(i)));
    gens.push_back(bq.pair(beta_bar.y(i), spec.nu.y(i)));
  }
  const SubgroupHandle t = subgroup_closure(bq.group, gens);
  std::vector<Elem> out;
  for (Elem p : t.members())
    if (spec.S.contains(bq.proj2(p))) out.push_back(bq.proj1(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SubgroupHandle(B, std::move(out));
}

bool word_in_N(const SubgroupSpec& spec, const Word& w) {
  return spec.S.contains(evaluate_word(spec.nu, w));
}

SolutionCertificate verify_solution(const SplitEP& ep, const SurfaceTuple& phi,
                                    const SubgroupSpec* relative,
                                    std::vector<KernelWitness> witnesses,
                                    std::vector<Elem> free_images) {
  SolutionCertificate cert{.phi = phi, .free_images = std::move(free_images)};
  cert.relative = relative != nullptr;
  cert.witnesses = std::move(witnesses);
  auto add = [&](std::string name, bool pass, std::string failure, std::string detail = {}) {
    cert.checks.push_back({std::move(name), pass, std::move(failure), std::move(detail)});
    return pass;
  };

  const FiniteGroup& A = ep.A();
  bool shape_ok = phi.target() == A && phi.genus() == ep.genus();
  add("shape", shape_ok, "GenusMismatch", shape_ok ? "" : "phi must map the problem's surface group into A");
  if (!shape_ok) return cert;

  // SurfaceTuple construction already enforces the relation; re-evaluated
  // here so the certificate records it.
  const Elem rel = relation_value(A, phi.x(), phi.y());
  const bool rel_ok = add("relation", rel == A.identity(), "RelationViolated",
                          "product of commutators = " + A.label(rel));

  std::string detail;
  bool compat_ok = compatible(ep, phi, &detail);
  if (compat_ok && cert.free_images.size() != ep.free_factor().size()) {
    compat_ok = false;
    detail = "free factor image count mismatch";
  }
  for (std::size_t f = 0; compat_ok && f < cert.free_images.size(); ++f) {
    const Elem a = cert.free_images[f];
    if (!A.contains(a) || ep.alpha()(a) != ep.free_factor()[f]) {
      compat_ok = false;
      detail = "alpha(phi(f" + std::to_string(f + 1) + ")) != beta(f" + std::to_string(f + 1) + ")";
    }
  }
  add("compatibility", compat_ok, "CompatibilityFailed", detail);
  cert.solution = rel_ok && compat_ok;

  // Kernel witnesses: each word evaluates under phi to its recorded value.
  bool witnesses_ok = true;
  std::vector<Elem> witness_values;
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const auto& w = cert.witnesses[i];
    bool ok = w.word.max_index() <= phi.genus() && A.contains(w.value) &&
              evaluate_word(phi, w.word) == w.value && ep.kernel().contains(w.value);
    witnesses_ok &= add("witness " + std::to_string(i + 1), ok, "WitnessMismatch",
                        "phi(" + w.word.to_string() + ") = " + std::to_string(w.value));
    witness_values.push_back(w.value);
  }

  if (!relative) {
    const bool onto = closure_of_images(phi, cert.free_images).is_whole();
    add("surjective", onto, "NotSurjective", "closure of phi images = A");
    if (!cert.witnesses.empty()) {
      const bool covered = ep.kernel().is_subset_of(subgroup_closure(A, witness_values));
      add("witnesses generate Ker(alpha)", covered, "KernelNotCovered");
      witnesses_ok &= covered;
    }
    cert.proper = cert.solution && onto && witnesses_ok;
  } else {
    bool n_ok = true;
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
      const Word& w = cert.witnesses[i].word;
      const bool in = w.max_index() <= relative->nu.genus() && word_in_N(*relative, w);
      n_ok &= add("witness " + std::to_string(i + 1) + " in N", in, "WitnessNotInN", w.to_string());
    }
    const bool covered = ep.kernel().is_subset_of(subgroup_closure(A, witness_values));
    add("witnesses generate Ker(alpha)", covered, "KernelNotCovered");
    const bool beta_n = subgroup_image_under(ep.beta_bar(), *relative).is_whole();
    add("beta(N) = B", beta_n, "BetaNRestrictionNotSurjective");
    // eta restricted to N solves the problem over N (beta(N) = B) and its image
    // contains Ker(alpha), hence eta(N) = A.
    cert.proper = cert.solution && witnesses_ok && n_ok && covered && beta_n;
  }

  cert.outcome = !cert.solution ? Outcome::NotSolution
                 : cert.proper  ? Outcome::Proper
                                : Outcome::NotProper;
  return cert;
}

SolutionCertificate recheck_certificate(const SplitEP& ep, const SolutionCertificate& cert,
                                        const SubgroupSpec* relative) {
  if (cert.relative && !relative)
    throw Error(Errc::InvalidArgument, "certificate is relative but no subgroup spec was given");
  SolutionCertificate fresh =
      verify_solution(ep, cert.phi, cert.relative ? relative : nullptr, cert.witnesses,
                      cert.free_images);
  fresh.memberships = cert.memberships;
  fresh.selected = cert.selected;
  fresh.prefix_x = cert.prefix_x;
  fresh.prefix_y = cert.prefix_y;
  fresh.s = cert.s;
  fresh.n = cert.n;
  fresh.m = cert.m;
  fresh.notes = cert.notes;
  fresh.offending_index = cert.offending_index;

  for (const auto& rec : cert.memberships) {
    bool value = false;
    bool known = true;
    if (rec.kind.ends_with("in N")) {
      if (relative) value = word_in_N(*relative, rec.word);
      else known = false;
    } else {
      value = evaluate_word(ep.beta_bar(), rec.word) == ep.B().identity();
    }
    if (!known) continue;
    fresh.checks.push_back({rec.kind + " (slot " + std::to_string(rec.slot) + ")",
                            value == rec.holds, "MembershipMismatch", rec.word.to_string()});
  }
  // The normalized prefix consists of untouched original handles.
  for (std::size_t i = 0; i < cert.prefix_x.size() && i < cert.selected.size(); ++i) {
    const auto j = std::uint32_t(cert.selected[i]);
    const bool ok = cert.prefix_x[i] == Word::x(j) && i < cert.prefix_y.size() &&
                    cert.prefix_y[i] == Word::y(j);
    fresh.checks.push_back({"prefix slot " + std::to_string(i + 1), ok, "BasisMismatch",
                            "expected x" + std::to_string(j) + ", y" + std::to_string(j)});
  }
  if (fresh.first_failure() && fresh.solution) {
    fresh.proper = false;
    fresh.outcome = Outcome::NotProper;
  }
  if (cert.outcome == Outcome::NotReduced) fresh.outcome = Outcome::NotReduced;
  return fresh;
}

}  // namespace surfep
