#include "surfep/solver.hpp"

#include <stdexcept>
#include <string>

namespace surfep {

namespace {

[[noreturn]] void hypothesis(const std::string& which, const std::string& what,
                             std::vector<std::int64_t> data) {
  throw Error(Errc::HypothesisViolated, which + ": " + what, std::move(data));
}

void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("solver invariant violated: ") + what);
}

// Membership words of normalized slot i against slot 1, in the original basis.
Word right_quotient(const BasisState& st, std::size_t i) {
  return st.x_word(i) * st.x_word(1).inverse();
}
Word left_quotient(const BasisState& st, std::size_t i) {
  return st.x_word(1).inverse() * st.x_word(i);
}

struct Pipeline {
  BasisState state;
  std::vector<std::size_t> selected;
  EtaParams params;
};

// Steps shared by the Gamma-level and relative solvers: phi = gamma o beta,
// pigeonhole m equal handles, rotate them to the front.
Pipeline normalize(const SplitEP& ep, const SubgroupSpec* relative) {
  const SurfaceTuple phi = map_tuple(ep.gamma(), ep.beta_bar());
  EtaParams params = make_eta_params(ep, phi);
  ensure(params.n == ep.A().order(), "n = |A| when phi = gamma o beta is onto gamma(B)");

  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t i = 1; i <= phi.genus(); ++i) pairs.emplace_back(phi.x(i), phi.y(i));
  std::vector<std::size_t> selected = pigeonhole_select(pairs, params.m);

  std::vector<SurfaceTuple> channels{phi, ep.beta_bar()};
  if (relative) channels.push_back(relative->nu);
  BasisState state(std::move(channels));
  // Ascending order: every later j lies beyond the range touched so far.
  for (std::size_t t = 0; t < selected.size(); ++t)
    state = move_pair_to_front(state, selected[t], t + 1);
  return {std::move(state), std::move(selected), std::move(params)};
}

void record_kernel_memberships(const SplitEP& ep, const Pipeline& p, SolutionCertificate& cert) {
  for (std::size_t i = 2; i <= p.params.m; ++i) {
    const Word xw = right_quotient(p.state, i);
    const Word yw = p.state.y_word(i) * p.state.y_word(1).inverse();
    cert.memberships.push_back({"x_i x_1^-1 in Ker(beta)", i, xw,
                                evaluate_word(ep.beta_bar(), xw) == ep.B().identity()});
    cert.memberships.push_back({"y_i y_1^-1 in Ker(beta)", i, yw,
                                evaluate_word(ep.beta_bar(), yw) == ep.B().identity()});
  }
}

// Applies eta on the normalized basis, transports it back to the original
// basis and assembles the certificate.
SolutionCertificate finish(const SplitEP& ep, const Pipeline& p, const SubgroupSpec* relative,
                           std::vector<MembershipRecord> memberships) {
  const SurfaceTuple phi_norm = p.state.channel(0);
  const SplitEP ep_norm = ep.with_beta(p.state.channel(1));
  std::optional<SubgroupSpec> rel_norm;
  if (relative) rel_norm = SubgroupSpec{p.state.channel(2), relative->S};
  const SurfaceTuple eta_norm =
      eta_construct(phi_norm, p.params, ep_norm, rel_norm ? &*rel_norm : nullptr);

  const SurfaceTuple eta = to_original_basis(p.state, eta_norm);
  // Every slot word, evaluated under eta in the original basis, reproduces
  // eta on the normalized basis.
  for (std::size_t i = 1; i <= eta.genus(); ++i) {
    ensure(evaluate_word(eta, p.state.x_word(i)) == eta_norm.x(i), "x slot word round trip");
    ensure(evaluate_word(eta, p.state.y_word(i)) == eta_norm.y(i), "y slot word round trip");
  }

  std::vector<KernelWitness> witnesses;
  for (std::size_t j = 0; j < p.params.s; ++j) {
    Word w = left_quotient(p.state, j * p.params.n + 2);
    witnesses.push_back({w, p.params.kgens[j]});
  }

  std::vector<Elem> free_images;
  for (Elem b : ep.free_factor()) free_images.push_back(ep.gamma()(b));

  SolutionCertificate cert = verify_solution(ep, eta, relative, std::move(witnesses),
                                             std::move(free_images));
  cert.memberships = std::move(memberships);
  record_kernel_memberships(ep, p, cert);
  cert.selected = p.selected;
  for (std::size_t i = 1; i <= p.params.m; ++i) {
    cert.prefix_x.push_back(p.state.x_word(i));
    cert.prefix_y.push_back(p.state.y_word(i));
  }
  cert.s = p.params.s;
  cert.n = p.params.n;
  cert.m = p.params.m;

  for (const auto& b : eta_block_identities(phi_norm, eta_norm, p.params)) {
    const std::string tag = "block " + std::to_string(b.block);
    cert.checks.push_back({"eta " + tag + " commutator^n = 1", b.eta_holds, "BlockIdentityFailed", ""});
    cert.checks.push_back({"phi " + tag + " commutator^n = 1", b.phi_holds, "BlockIdentityFailed", ""});
  }
  const bool claim = claim_proper(ep, eta, cert.free_images);
  cert.checks.push_back({"Ker(alpha) in image", claim, "KernelNotCovered", ""});
  if (!claim && !relative) cert.proper = false;
  cert.notes.push_back(
      "y_i y_1^-1 in Ker(beta) is recorded for i <= m but only x-memberships feed the relative "
      "argument");
  return cert;
}

void require_genus(std::int64_t needed, std::size_t got) {
  if (std::int64_t(got) < needed)
    throw Error(Errc::GenusTooSmall,
                "genus " + std::to_string(got) + " is below the bound " + std::to_string(needed),
                {needed, std::int64_t(got)});
}

}  // namespace

EtaParams make_eta_params(const SplitEP& ep, const SurfaceTuple& phi) {
  EtaParams p;
  const GeneratorCount gc = minimal_generator_count(ep.kernel());
  p.s = gc.count;
  p.kgens = gc.witness;
  std::vector<Elem> seeds = ep.kernel().members();
  const auto imgs = phi.images();
  seeds.insert(seeds.end(), imgs.begin(), imgs.end());
  p.n = subgroup_closure(ep.A(), seeds).order();
  const std::size_t a = ep.A().order(), b = ep.B().order();
  ensure((2 * a * a) % b == 0, "|B| divides 2|A|^2");
  p.m = 2 * a * a / b;
  ensure(p.s <= a / b, "s <= |A|/|B|");
  return p;
}

std::vector<BlockIdentity> eta_block_identities(const SurfaceTuple& phi, const SurfaceTuple& eta,
                                                const EtaParams& params) {
  std::vector<BlockIdentity> out;
  const FiniteGroup& A = phi.target();
  for (std::size_t i = 0; i < params.s; ++i) {
    const std::size_t idx = i * params.n + 2;
    const auto n = std::int64_t(params.n);
    out.push_back({i, A.pow(A.comm(eta.x(idx), eta.y(idx)), n) == A.identity(),
                   A.pow(A.comm(phi.x(idx), phi.y(idx)), n) == A.identity()});
  }
  return out;
}

SurfaceTuple eta_construct(const SurfaceTuple& phi, const EtaParams& params,
                           const SplitEP& beta_check, const SubgroupSpec* relative) {
  const FiniteGroup& A = phi.target();
  const std::size_t g = phi.genus();
  const std::size_t s = params.s, n = params.n, span = s * n + s;
  if (params.kgens.size() != s) hypothesis("params", "kgens must have s entries", {std::int64_t(s)});
  if (s == 0) return phi;
  if (g < span)
    hypothesis("genus", "need g >= sn+s = " + std::to_string(span) + ", got " + std::to_string(g),
               {std::int64_t(span), std::int64_t(g)});
  for (std::size_t i = 2; i <= span; ++i)
    if (phi.x(i) != phi.x(1) || phi.y(i) != phi.y(1))
      hypothesis("equal-images", "phi(x_i), phi(y_i) differ from slot 1 at i = " + std::to_string(i),
                 {std::int64_t(i)});
  if (!(A == beta_check.A()) || g != beta_check.genus())
    hypothesis("solution", "phi is not over the problem's A and genus", {});
  for (std::size_t i = 1; i <= g; ++i)
    if (beta_check.alpha()(phi.x(i)) != beta_check.beta_bar().x(i) ||
        beta_check.alpha()(phi.y(i)) != beta_check.beta_bar().y(i))
      hypothesis("solution", "alpha o phi != beta at handle " + std::to_string(i), {std::int64_t(i)});
  for (Elem k : params.kgens)
    if (!beta_check.kernel().contains(k))
      hypothesis("params", "kgens must lie in Ker(alpha)", {std::int64_t(k)});
  if (relative) {
    for (std::size_t i = 2; i <= span; ++i) {
      const Word xi = Word::x(std::uint32_t(i)), x1 = Word::x(1);
      if (!word_in_N(*relative, xi * x1.inverse()) || !word_in_N(*relative, x1.inverse() * xi))
        hypothesis("membership", "x_i x_1^-1 or x_1^-1 x_i not in N at i = " + std::to_string(i),
                   {std::int64_t(i)});
    }
  }

  // Slot in+j+1 (1-based) sits at index in+j.
  std::vector<Elem> x = phi.x();
  const std::vector<Elem>& y = phi.y();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 1; j <= n; ++j) x[i * n + j] = A.mul(phi.x(1), params.kgens[i]);
  ensure(relation_value(A, x, y) == A.identity(), "eta satisfies the surface relation");
  SurfaceTuple eta(A, std::move(x), y);
  for (const auto& b : eta_block_identities(phi, eta, params))
    ensure(b.eta_holds && b.phi_holds, "block identity [.,.]^n = 1");
  for (std::size_t i = 1; i <= g; ++i)
    ensure(beta_check.alpha()(eta.x(i)) == beta_check.beta_bar().x(i), "alpha o eta = beta");
  for (std::size_t j = 0; j < s; ++j)
    ensure(evaluate_word(eta, Word::x(1, -1) * Word::x(std::uint32_t(j * n + 2))) == params.kgens[j],
           "eta(x_1^-1 x_{jn+2}) = k_{j+1}");
  return eta;
}

std::int64_t gamma_level_genus_bound(const SplitEP& ep) {
  const auto a = std::int64_t(ep.A().order()), b = std::int64_t(ep.B().order());
  return 2 * a * a * b;
}

SolutionCertificate solve_gamma_level(const SplitEP& ep) {
  require_genus(gamma_level_genus_bound(ep), ep.genus());
  if (!tuple_image(ep.beta_bar()).is_whole())
    throw Error(Errc::BetaNotSurjective, "beta restricted to the surface group is not onto B");
  const Pipeline p = normalize(ep, nullptr);
  return finish(ep, p, nullptr, {});
}

SolutionCertificate solve_relative(const SplitEP& ep, const SubgroupSpec& nspec) {
  require_genus(gamma_level_genus_bound(ep), ep.genus());
  if (nspec.nu.genus() != ep.genus())
    throw Error(Errc::GenusMismatch, "nu genus differs from the problem genus",
                {std::int64_t(ep.genus()), std::int64_t(nspec.nu.genus())});
  if (!tuple_image(ep.beta_bar()).is_whole())
    throw Error(Errc::BetaNotSurjective, "beta restricted to the surface group is not onto B");
  if (!subgroup_image_under(ep.beta_bar(), nspec).is_whole())
    throw Error(Errc::BetaNRestrictionNotSurjective, "beta(N) is a proper subgroup of B");

  const Pipeline p = normalize(ep, &nspec);
  std::vector<MembershipRecord> memberships;
  std::optional<std::size_t> offending;
  for (std::size_t i = 2; i <= p.params.m; ++i) {
    const Word r = right_quotient(p.state, i), l = left_quotient(p.state, i);
    const bool rin = word_in_N(nspec, r), lin = word_in_N(nspec, l);
    // The tracked nu channel must agree with evaluating the words.
    const FiniteGroup& Q = nspec.Q();
    ensure(rin == nspec.S.contains(Q.mul(p.state.x_image(2, i), Q.inv(p.state.x_image(2, 1)))),
           "nu channel agrees with word evaluation");
    memberships.push_back({"x_i x_1^-1 in N", i, r, rin});
    memberships.push_back({"x_1^-1 x_i in N", i, l, lin});
    if ((!rin || !lin) && !offending) offending = i;
  }

  if (offending) {
    // Outside the finite reduction; the escalation would pass to the
    // quotient by the normal closure of these words.
    SolutionCertificate cert = verify_solution(ep, map_tuple(ep.gamma(), ep.beta_bar()));
    cert.relative = true;
    cert.proper = false;
    cert.outcome = Outcome::NotReduced;
    cert.offending_index = offending;
    cert.memberships = std::move(memberships);
    cert.selected = p.selected;
    cert.s = p.params.s;
    cert.n = p.params.n;
    cert.m = p.params.m;
    cert.notes.push_back("x_" + std::to_string(*offending) +
                         " x_1^-1 is not in N; m = " + std::to_string(p.params.m) +
                         ", genus = " + std::to_string(ep.genus()));
    return cert;
  }
  return finish(ep, p, &nspec, std::move(memberships));
}

SolutionCertificate solve_free_product(const SplitEP& ep) {
  const auto k = std::int64_t(ep.K().order()), h = std::int64_t(ep.H().order());
  require_genus(2 * k * k * h * h * h, ep.genus());

  const SubgroupHandle h0 = tuple_image(ep.beta_bar());
  const InducedGroup sub = induced_group(h0);
  std::vector<Elem> pos(ep.H().order(), 0);
  for (Elem i = 0; i < h0.order(); ++i) pos[h0.members()[i]] = i;

  std::vector<std::vector<Elem>> perms;
  for (Elem i = 0; i < h0.order(); ++i) perms.push_back(ep.action().perms()[sub.inclusion(i)]);
  const ActionSpec action0(sub.group, ep.K(), std::move(perms));

  std::vector<Elem> bx, by;
  for (std::size_t i = 1; i <= ep.genus(); ++i) {
    bx.push_back(pos[ep.beta_bar().x(i)]);
    by.push_back(pos[ep.beta_bar().y(i)]);
  }
  const SplitEP ep0(ep.K(), sub.group, action0, SurfaceTuple(sub.group, bx, by));
  // 2|K|^2|H|^3 >= 2|K x| H0|^2 |H0| = 2|K|^2|H0|^3
  const SolutionCertificate c0 = solve_gamma_level(ep0);
  ensure(c0.proper, "surface part is proper onto K x| H0");

  // (k, h0) |-> (k, inclusion(h0))
  const auto& sdp0 = ep0.product();
  const auto& sdp = ep.product();
  auto lift = [&](Elem a0) { return sdp.pair(sdp0.k_part(a0), sub.inclusion(sdp0.h_part(a0))); };
  std::vector<Elem> x, y;
  for (std::size_t i = 1; i <= ep.genus(); ++i) {
    x.push_back(lift(c0.phi.x(i)));
    y.push_back(lift(c0.phi.y(i)));
  }
  std::vector<KernelWitness> witnesses;
  for (const auto& w : c0.witnesses) witnesses.push_back({w.word, lift(w.value)});
  std::vector<Elem> free_images;
  for (Elem b : ep.free_factor()) free_images.push_back(sdp.pair(ep.K().identity(), b));

  SolutionCertificate cert = verify_solution(ep, SurfaceTuple(ep.A(), x, y), nullptr,
                                             std::move(witnesses), free_images);
  const bool claim = claim_proper(ep, cert.phi, free_images);
  cert.checks.push_back({"Ker(alpha) in image", claim, "KernelNotCovered", ""});
  cert.proper = cert.proper && claim;
  cert.selected = c0.selected;
  cert.prefix_x = c0.prefix_x;
  cert.prefix_y = c0.prefix_y;
  cert.memberships = c0.memberships;
  cert.s = c0.s;
  cert.n = c0.n;
  cert.m = c0.m;
  cert.notes.push_back("surface part solved over the image subgroup H0 of order " +
                       std::to_string(h0.order()) + "; free factor mapped through (1, beta(f))");
  return cert;
}

SolutionCertificate solve_free_product(const FiniteGroup& k, const FiniteGroup& h,
                                       const ActionSpec& action, std::size_t genus,
                                       const SurfaceTuple& beta_surface,
                                       const std::vector<Elem>& beta_free) {
  const auto kk = std::int64_t(k.order()), hh = std::int64_t(h.order());
  require_genus(2 * kk * kk * hh * hh * hh, beta_surface.genus());
  return solve_free_product(make_split_ep(k, h, action, beta_surface, genus, beta_free));
}

ExtensionPlan plan_extension(std::int64_t g, std::int64_t size_k, std::int64_t size_h) {
  if (g < 2) throw Error(Errc::GenusTooSmall, "planning needs g >= 2", {2, g});
  if (size_k < 1 || size_h < 1)
    throw Error(Errc::InvalidArgument, "group orders must be positive", {size_k, size_h});
  ExtensionPlan p{g, size_k, size_h};
  const std::int64_t target = 2 * size_k * size_k * size_h * size_h * size_h;
  p.m = 2 * size_k * size_k * size_h;
  const std::int64_t num = target + p.m - 1;
  p.required_index = (num + (g - 1) - 1) / (g - 1);
  p.h = open_subgroup_genus(g, p.required_index);
  ensure(p.h - p.m >= target, "h - m >= 2|K|^2|H|^3");
  return p;
}

}  // namespace surfep
