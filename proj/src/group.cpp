#include "surfep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace surfep {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

bool is_permutation_of_range(const std::vector<Elem>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Elem x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::from_table(const Table& mul, std::optional<Elem> identity_hint,
                                    const ValidationOptions& opts) {
  const std::size_t n = mul.size();
  if (n == 0) throw Error(Errc::InvalidTable, "empty multiplication table");
  for (std::size_t r = 0; r < n; ++r) {
    if (mul[r].size() != n)
      throw Error(Errc::InvalidTable, "row " + std::to_string(r) + " has wrong length",
                  {std::int64_t(r)});
    for (Elem v : mul[r])
      if (v >= n)
        throw Error(Errc::InvalidTable, "entry out of range in row " + std::to_string(r),
                    {std::int64_t(r), std::int64_t(v)});
  }

  auto is_identity = [&](Elem e) {
    for (Elem a = 0; a < n; ++a)
      if (mul[e][a] != a || mul[a][e] != a) return false;
    return true;
  };
  Elem e = 0;
  if (identity_hint) {
    if (*identity_hint >= n || !is_identity(*identity_hint))
      throw Error(Errc::NoIdentity, "hinted identity " + std::to_string(*identity_hint) +
                                        " is not a two-sided identity",
                  {std::int64_t(*identity_hint)});
    e = *identity_hint;
  } else {
    bool found = false;
    for (Elem c = 0; c < n && !found; ++c)
      if (is_identity(c)) {
        e = c;
        found = true;
      }
    if (!found) throw Error(Errc::NoIdentity, "no two-sided identity element");
  }

  auto d = std::make_shared<Data>();
  d->order = n;
  d->identity = e;
  d->mul.assign(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    std::copy(mul[r].begin(), mul[r].end(), d->mul.begin() + std::ptrdiff_t(r * n));

  d->inv.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b)
      if (mul[a][b] == e && mul[b][a] == e) {
        d->inv[a] = b;
        found = true;
        break;
      }
    if (!found)
      throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse",
                  {std::int64_t(a)});
  }

  auto check = [&](Elem a, Elem b, Elem c) {
    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
      throw Error(Errc::NotAssociative, "(ab)c != a(bc) at " + triple(a, b, c),
                  {std::int64_t(a), std::int64_t(b), std::int64_t(c)});
  };
  if (n <= opts.full_check_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
    const std::size_t samples = opts.sample_factor * n * n;
    for (std::size_t i = 0; i < samples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<Elem>>& gens) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_permutation_of_range(gens[i], degree))
      throw Error(Errc::InvalidTable,
                  "generator " + std::to_string(i) + " is not a permutation of 0.." +
                      std::to_string(degree == 0 ? 0 : degree - 1),
                  {std::int64_t(i)});

  using Perm = std::vector<Elem>;
  auto then = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& gen : gens) {
      Perm next = then(elems[head], gen);
      if (index.emplace(next, Elem(elems.size())).second) elems.push_back(std::move(next));
    }
  }

  const std::size_t n = elems.size();
  Table mul(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(then(elems[a], elems[b]));
  return from_table(mul, Elem{0});
}

Elem FiniteGroup::pow(Elem a, std::int64_t e) const {
  Elem base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? std::uint64_t(-(e + 1)) + 1 : std::uint64_t(e);
  k %= element_order(a);
  Elem r = identity();
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Elem FiniteGroup::comm(Elem a, Elem b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Elem FiniteGroup::conj(Elem a, Elem c) const { return mul(mul(inv(c), a), c); }

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Table FiniteGroup::table() const {
  Table t(order(), std::vector<Elem>(order()));
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order())
    throw Error(Errc::InvalidArgument, "label count " + std::to_string(labels.size()) +
                                           " does not match order " + std::to_string(order()));
  auto d = std::make_shared<Data>(*d_);
  d->labels = std::move(labels);
  return FiniteGroup(std::move(d));
}

std::string FiniteGroup::label(Elem a) const {
  return d_->labels.empty() ? std::to_string(a) : d_->labels.at(a);
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->order == b.d_->order && a.d_->identity == b.d_->identity &&
         a.d_->mul == b.d_->mul;
}

// ---------------------------------------------------------------------------
// SubgroupHandle

SubgroupHandle::SubgroupHandle(FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!std::is_sorted(members_.begin(), members_.end()) ||
      std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(Errc::InvalidArgument, "subgroup members must be sorted and distinct");
  for (Elem a : members_)
    if (!parent_.contains(a))
      throw Error(Errc::IndexOutOfRange, "subgroup member " + std::to_string(a) + " out of range",
                  {std::int64_t(a)});
  if (!contains(parent_.identity()))
    throw Error(Errc::InvalidArgument, "subgroup does not contain the identity");
  for (Elem a : members_) {
    if (!contains(parent_.inv(a)))
      throw Error(Errc::InvalidArgument, "subgroup not closed under inverse at " + std::to_string(a),
                  {std::int64_t(a)});
    for (Elem b : members_)
      if (!contains(parent_.mul(a, b)))
        throw Error(Errc::InvalidArgument,
                    "subgroup not closed under product at (" + std::to_string(a) + ", " +
                        std::to_string(b) + ")",
                    {std::int64_t(a), std::int64_t(b)});
  }
}

SubgroupHandle SubgroupHandle::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return SubgroupHandle(g, std::move(all));
}

SubgroupHandle SubgroupHandle::trivial(const FiniteGroup& g) {
  return SubgroupHandle(g, {g.identity()});
}

bool SubgroupHandle::contains(Elem a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool SubgroupHandle::is_normal() const {
  for (Elem c = 0; c < parent_.order(); ++c)
    for (Elem a : members_)
      if (!contains(parent_.conj(a, c))) return false;
  return true;
}

bool SubgroupHandle::is_subset_of(const SubgroupHandle& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map,
                   const ValidationOptions& opts)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  const std::size_t n = domain_.order();
  if (map_.size() != n)
    throw Error(Errc::NotHomomorphism, "map has " + std::to_string(map_.size()) +
                                           " entries, domain order is " + std::to_string(n));
  for (Elem v : map_)
    if (!codomain_.contains(v))
      throw Error(Errc::IndexOutOfRange, "map value " + std::to_string(v) + " out of range",
                  {std::int64_t(v)});
  if (map_[domain_.identity()] != codomain_.identity())
    throw Error(Errc::NotHomomorphism, "identity not mapped to identity");

  auto check = [&](Elem a, Elem b) {
    if (map_[domain_.mul(a, b)] != codomain_.mul(map_[a], map_[b]))
      throw Error(Errc::NotHomomorphism,
                  "map(ab) != map(a)map(b) at (" + std::to_string(a) + ", " + std::to_string(b) + ")",
                  {std::int64_t(a), std::int64_t(b)});
  };
  if (n <= opts.full_check_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) check(a, b);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
    for (std::size_t i = 0; i < opts.sample_factor * n * n; ++i) check(pick(rng), pick(rng));
  }
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Elem> map(g.order());
  std::iota(map.begin(), map.end(), Elem{0});
  return GroupHom(g, g, std::move(map));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.codomain() == outer.domain()))
    throw Error(Errc::InvalidArgument, "compose: codomain/domain mismatch");
  std::vector<Elem> map(inner.domain().order());
  for (Elem a = 0; a < map.size(); ++a) map[a] = outer(inner(a));
  return GroupHom(inner.domain(), outer.codomain(), std::move(map));
}

// ---------------------------------------------------------------------------
// ActionSpec

ActionSpec::ActionSpec(FiniteGroup acting, FiniteGroup acted, std::vector<std::vector<Elem>> perms)
    : acting_(std::move(acting)), acted_(std::move(acted)), perms_(std::move(perms)) {
  const std::size_t nh = acting_.order();
  const std::size_t nk = acted_.order();
  if (perms_.size() != nh)
    throw Error(Errc::InvalidAction, "expected one permutation per acting element (" +
                                         std::to_string(nh) + "), got " +
                                         std::to_string(perms_.size()));
  for (Elem h = 0; h < nh; ++h) {
    const auto& p = perms_[h];
    if (!is_permutation_of_range(p, nk))
      throw Error(Errc::InvalidAction, "entry for h=" + std::to_string(h) + " is not a permutation",
                  {std::int64_t(h)});
    for (Elem a = 0; a < nk; ++a)
      for (Elem b = 0; b < nk; ++b)
        if (p[acted_.mul(a, b)] != acted_.mul(p[a], p[b]))
          throw Error(Errc::InvalidAction,
                      "h=" + std::to_string(h) + " is not an automorphism at (" + std::to_string(a) +
                          ", " + std::to_string(b) + ")",
                      {std::int64_t(h), std::int64_t(a), std::int64_t(b)});
  }
  for (Elem k = 0; k < nk; ++k)
    if (perms_[acting_.identity()][k] != k)
      throw Error(Errc::InvalidAction, "identity of H does not act trivially");
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) {
      const auto& p12 = perms_[acting_.mul(h1, h2)];
      for (Elem k = 0; k < nk; ++k)
        if (p12[k] != perms_[h1][perms_[h2][k]])
          throw Error(Errc::InvalidAction,
                      "action law fails at (" + std::to_string(h1) + ", " + std::to_string(h2) + ")",
                      {std::int64_t(h1), std::int64_t(h2), std::int64_t(k)});
    }
}

ActionSpec ActionSpec::trivial(const FiniteGroup& acting, const FiniteGroup& acted) {
  std::vector<Elem> id(acted.order());
  std::iota(id.begin(), id.end(), Elem{0});
  return ActionSpec(acting, acted, std::vector<std::vector<Elem>>(acting.order(), id));
}

// ---------------------------------------------------------------------------
// Products

DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  Table mul(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      mul[a][b] = Elem(g1.mul(Elem(a / n2), Elem(b / n2)) * n2 + g2.mul(Elem(a % n2), Elem(b % n2)));
  FiniteGroup g = FiniteGroup::from_table(mul, Elem(g1.identity() * n2 + g2.identity()));
  std::vector<Elem> p1(n), p2(n);
  for (Elem a = 0; a < n; ++a) {
    p1[a] = Elem(a / n2);
    p2[a] = Elem(a % n2);
  }
  return {g, GroupHom(g, g1, std::move(p1)), GroupHom(g, g2, std::move(p2)), n2};
}

SemidirectProduct semidirect_product(const FiniteGroup& k, const FiniteGroup& h,
                                     const ActionSpec& action) {
  if (!(action.acting() == h) || !(action.acted() == k))
    throw Error(Errc::InvalidAction, "action is not defined for these groups");
  const std::size_t nk = k.order(), nh = h.order(), n = nk * nh;
  Table mul(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    const Elem ka = Elem(a / nh), ha = Elem(a % nh);
    for (Elem b = 0; b < n; ++b) {
      const Elem kb = Elem(b / nh), hb = Elem(b % nh);
      mul[a][b] = Elem(k.mul(ka, action.apply(ha, kb)) * nh + h.mul(ha, hb));
    }
  }
  FiniteGroup g = FiniteGroup::from_table(mul, Elem(k.identity() * nh + h.identity()));
  std::vector<Elem> alpha(n), gamma(nh), embed(nk);
  for (Elem a = 0; a < n; ++a) alpha[a] = Elem(a % nh);
  for (Elem x = 0; x < nh; ++x) gamma[x] = Elem(k.identity() * nh + x);
  for (Elem x = 0; x < nk; ++x) embed[x] = Elem(x * nh + h.identity());
  return {g, GroupHom(g, h, std::move(alpha)), GroupHom(h, g, std::move(gamma)),
          GroupHom(k, g, std::move(embed)), nh};
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupHandle subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  for (Elem s : seeds)
    if (!g.contains(s))
      throw Error(Errc::IndexOutOfRange, "seed " + std::to_string(s) + " out of range",
                  {std::int64_t(s)});
  std::vector<Elem> gens;
  for (Elem s : seeds)
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end())
      gens.push_back(s);

  // In a finite group the monoid generated by the seeds is already a group.
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> found{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head)
    for (Elem s : gens) {
      const Elem next = g.mul(found[head], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  std::sort(found.begin(), found.end());
  return SubgroupHandle(g, std::move(found));
}

SubgroupHandle kernel(const GroupHom& hom) {
  std::vector<Elem> members;
  for (Elem a = 0; a < hom.domain().order(); ++a)
    if (hom(a) == hom.codomain().identity()) members.push_back(a);
  return SubgroupHandle(hom.domain(), std::move(members));
}

SubgroupHandle image(const GroupHom& hom) {
  std::vector<Elem> values = hom.map();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return SubgroupHandle(hom.codomain(), std::move(values));
}

GroupHom find_section(const GroupHom& alpha) {
  const FiniteGroup& a = alpha.domain();
  const FiniteGroup& b = alpha.codomain();
  if (!image(alpha).is_whole()) throw Error(Errc::NotSurjective, "alpha is not surjective");

  const std::size_t nb = b.order();
  std::vector<std::vector<Elem>> fibers(nb);
  for (Elem x = 0; x < a.order(); ++x) fibers[alpha(x)].push_back(x);

  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> sec(nb, unset);

  // Checks every product relation that involves `x` and whose three
  // participants are all assigned.
  auto consistent = [&](Elem x) {
    for (Elem y = 0; y < nb; ++y) {
      if (sec[y] == unset) continue;
      const Elem xy = b.mul(x, y), yx = b.mul(y, x), z = b.mul(b.inv(y), x);
      if (sec[xy] != unset && sec[xy] != a.mul(sec[x], sec[y])) return false;
      if (sec[yx] != unset && sec[yx] != a.mul(sec[y], sec[x])) return false;
      if (sec[z] != unset && sec[x] != a.mul(sec[y], sec[z])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, Elem x) -> bool {
    if (x == nb) return true;
    for (Elem cand : fibers[x]) {
      sec[x] = cand;
      if (consistent(x) && self(self, x + 1)) return true;
    }
    sec[x] = unset;
    return false;
  };
  if (!search(search, 0)) throw Error(Errc::NotSplit, "alpha admits no section");
  return GroupHom(b, a, std::move(sec));
}

GeneratorCount minimal_generator_count(const SubgroupHandle& s) {
  if (s.is_trivial()) return {0, {}};
  const FiniteGroup& g = s.parent();
  std::vector<Elem> cands;
  for (Elem x : s.members())
    if (x != g.identity()) cands.push_back(x);

  // Depth-limited search over ascending combinations; an element already in
  // the closure of the chosen prefix never shortens a generating tuple.
  std::vector<Elem> chosen;
  auto search = [&](auto&& self, std::size_t start, std::size_t left,
                    const SubgroupHandle& sofar) -> bool {
    if (sofar.order() == s.order()) return true;
    if (left == 0) return false;
    for (std::size_t i = start; i < cands.size(); ++i) {
      if (sofar.contains(cands[i])) continue;
      chosen.push_back(cands[i]);
      if (self(self, i + 1, left - 1, subgroup_closure(g, chosen))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t r = 1;; ++r) {
    chosen.clear();
    if (search(search, 0, r, SubgroupHandle::trivial(g))) return {r, chosen};
  }
}

InducedGroup induced_group(const SubgroupHandle& s) {
  const FiniteGroup& g = s.parent();
  const auto& mem = s.members();
  std::vector<Elem> pos(g.order(), 0);
  for (Elem i = 0; i < mem.size(); ++i) pos[mem[i]] = i;
  Table mul(mem.size(), std::vector<Elem>(mem.size()));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) mul[i][j] = pos[g.mul(mem[i], mem[j])];
  FiniteGroup sub = FiniteGroup::from_table(mul, pos[g.identity()]);
  return {sub, GroupHom(sub, g, mem)};
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> rest;
  for (Elem a = 0; a < n; ++a)
    if (a != g.identity()) rest.push_back(a);
  std::vector<std::vector<Elem>> out;
  do {
    std::vector<Elem> p(n);
    p[g.identity()] = g.identity();
    std::size_t i = 0;
    for (Elem a = 0; a < n; ++a)
      if (a != g.identity()) p[a] = rest[i++];
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) ok = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    if (ok) out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace catalog {

FiniteGroup trivial() { return FiniteGroup(); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group of order 0");
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = Elem((a + b) % n);
  return FiniteGroup::from_table(t, Elem{0});
}

FiniteGroup klein_four() {
  Table t(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup::from_table(t, Elem{0});
}

FiniteGroup symmetric3() { return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "dihedral group of order 0");
  // f*n + i  <->  r^i s^f;  (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g)
  const std::size_t m = 2 * n;
  Table t(m, std::vector<Elem>(m));
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      const std::size_t a = x % n, f = x / n, b = y % n, g = y / n;
      const std::size_t rot = f == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = Elem(((f + g) % 2) * n + rot);
    }
  return FiniteGroup::from_table(t, Elem{0});
}

FiniteGroup quaternion8() {
  // sign*4 + unit, units 1,i,j,k
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const int s = (int(x / 4) + int(y / 4) + sign[x % 4][y % 4]) % 2;
      t[x][y] = Elem(s * 4 + unit[x % 4][y % 4]);
    }
  return FiniteGroup::from_table(t, Elem{0});
}

FiniteGroup by_name(const std::string& name) {
  if (name == "V4") return klein_four();
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral(4);
  if (name == "Q8") return quaternion8();
  if (name.size() >= 2 && name[0] == 'C') {
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1 && n >= 1) return n == 1 ? trivial() : cyclic(n);
  }
  throw Error(Errc::InvalidArgument, "unknown catalog group '" + name + "'");
}

std::vector<std::string> names() {
  return {"C1", "C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8"};
}

}  // namespace catalog

}  // namespace surfep
