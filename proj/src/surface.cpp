#include "surfep/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace surfep {

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push(l);
}

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().sym == l.sym) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "word '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Letter l;
    if (text[i] == 'x') l.sym.is_y = false;
    else if (text[i] == 'y') l.sym.is_y = true;
    else fail("expected 'x' or 'y' at offset " + std::to_string(i));
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    auto [p, ec] = std::from_chars(first, last, l.sym.index);
    if (ec != std::errc() || p == first || l.sym.index == 0) fail("bad generator index");
    i += std::size_t(p - first);
    if (i < text.size() && text[i] == '^') {
      ++i;
      first = text.data() + i;
      auto [q, ec2] = std::from_chars(first, last, l.exp);
      if (ec2 != std::errc() || q == first) fail("bad exponent");
      if (l.exp == 0) fail("zero exponent");
      i += std::size_t(q - first);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      fail("unexpected character at offset " + std::to_string(i));
    out.push_back(l);
  }
  return Word(std::move(out));
}

std::uint32_t Word::max_index() const noexcept {
  std::uint32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.sym.index);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->sym, -it->exp});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters_.reserve(a.size() + b.size());
  for (const Letter& l : b.letters_) w.push(l);
  return w;
}

Word Word::conjugated_by(const Word& c) const { return c.inverse() * *this * c; }

std::string Word::to_string() const {
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.sym.is_y ? 'y' : 'x';
    s += std::to_string(l.sym.index);
    if (l.exp != 1) s += '^' + std::to_string(l.exp);
  }
  return s;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

// ---------------------------------------------------------------------------
// SurfaceTuple

Elem relation_value(const FiniteGroup& g, std::span<const Elem> x, std::span<const Elem> y) {
  Elem r = g.identity();
  for (std::size_t i = 0; i < x.size(); ++i) r = g.mul(r, g.comm(x[i], y[i]));
  return r;
}

SurfaceTuple::SurfaceTuple(FiniteGroup target, std::vector<Elem> ximg, std::vector<Elem> yimg)
    : target_(std::move(target)), x_(std::move(ximg)), y_(std::move(yimg)) {
  if (x_.empty() || x_.size() != y_.size())
    throw Error(Errc::InvalidArgument, "surface tuple needs g >= 1 x- and y-images of equal count");
  for (Elem a : x_)
    if (!target_.contains(a))
      throw Error(Errc::IndexOutOfRange, "image " + std::to_string(a) + " out of range",
                  {std::int64_t(a)});
  for (Elem a : y_)
    if (!target_.contains(a))
      throw Error(Errc::IndexOutOfRange, "image " + std::to_string(a) + " out of range",
                  {std::int64_t(a)});
  const Elem r = relation_value(target_, x_, y_);
  if (r != target_.identity())
    throw Error(Errc::RelationViolated,
                "product of commutators is " + target_.label(r) + ", not the identity",
                {std::int64_t(r)});
}

std::vector<Elem> SurfaceTuple::images() const {
  std::vector<Elem> all = x_;
  all.insert(all.end(), y_.begin(), y_.end());
  return all;
}

SurfaceTuple make_surface_tuple(const FiniteGroup& target, std::vector<Elem> ximg,
                                std::vector<Elem> yimg) {
  return SurfaceTuple(target, std::move(ximg), std::move(yimg));
}

Elem evaluate_word(const SurfaceTuple& t, const Word& w) {
  const FiniteGroup& g = t.target();
  Elem r = g.identity();
  for (const Letter& l : w.letters()) {
    if (l.sym.index == 0 || l.sym.index > t.genus())
      throw Error(Errc::IndexOutOfRange,
                  "generator index " + std::to_string(l.sym.index) + " exceeds genus " +
                      std::to_string(t.genus()),
                  {std::int64_t(l.sym.index)});
    const Elem base = l.sym.is_y ? t.y(l.sym.index) : t.x(l.sym.index);
    r = g.mul(r, g.pow(base, l.exp));
  }
  return r;
}

SubgroupHandle tuple_image(const SurfaceTuple& t) {
  const auto all = t.images();
  return subgroup_closure(t.target(), all);
}

SurfaceTuple map_tuple(const GroupHom& hom, const SurfaceTuple& t) {
  if (!(hom.domain() == t.target()))
    throw Error(Errc::InvalidArgument, "map_tuple: homomorphism domain is not the tuple target");
  std::vector<Elem> x(t.genus()), y(t.genus());
  for (std::size_t i = 0; i < t.genus(); ++i) {
    x[i] = hom(t.x()[i]);
    y[i] = hom(t.y()[i]);
  }
  return SurfaceTuple(hom.codomain(), std::move(x), std::move(y));
}

std::vector<std::size_t> pigeonhole_select(std::span<const std::pair<Elem, Elem>> pairs,
                                           std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "pigeonhole_select needs m >= 1");
  std::map<std::pair<Elem, Elem>, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < pairs.size(); ++i) where[pairs[i]].push_back(i + 1);
  for (auto& [value, pos] : where)
    if (pos.size() >= m) {
      pos.resize(m);
      return pos;
    }
  throw Error(Errc::NoRepeatedPair, "no value pair occurs " + std::to_string(m) + " times",
              {std::int64_t(m)});
}

// ---------------------------------------------------------------------------
// BasisState

BasisState::BasisState(std::vector<SurfaceTuple> channels) : original_(std::move(channels)) {
  if (original_.empty()) throw Error(Errc::InvalidArgument, "basis state needs a channel");
  const std::size_t g = original_.front().genus();
  for (const auto& c : original_) {
    if (c.genus() != g) throw Error(Errc::GenusMismatch, "channels differ in genus");
    xs_.push_back(c.x());
    ys_.push_back(c.y());
  }
  for (std::uint32_t i = 1; i <= g; ++i) {
    xw_.push_back(Word::x(i));
    yw_.push_back(Word::y(i));
  }
}

SurfaceTuple BasisState::channel(std::size_t c) const {
  return SurfaceTuple(original_.at(c).target(), xs_.at(c), ys_.at(c));
}

BasisState move_pair_to_front(const BasisState& state, std::size_t src, std::size_t dst) {
  const std::size_t g = state.genus();
  if (dst < 1 || dst > src || src > g)
    throw Error(Errc::PositionOutOfRange,
                "move " + std::to_string(src) + " -> " + std::to_string(dst) + " with genus " +
                    std::to_string(g),
                {std::int64_t(src), std::int64_t(dst)});
  BasisState next = state;
  if (src == dst) return next;
  next.moves_.emplace_back(src, dst);

  // [a_1,b_1]...[a_{j-1},b_{j-1}] [a_j,b_j] = [a_j,b_j] prod [a_i^c, b_i^c],
  // c = [a_j,b_j], so rotating slot j to the front of the range keeps the
  // relation.
  const std::size_t s = src - 1, d = dst - 1;
  for (std::size_t ch = 0; ch < state.channel_count(); ++ch) {
    const FiniteGroup& G = state.original_[ch].target();
    const auto& xs = state.xs_[ch];
    const auto& ys = state.ys_[ch];
    const Elem c = G.comm(xs[s], ys[s]);
    auto& nx = next.xs_[ch];
    auto& ny = next.ys_[ch];
    nx[d] = xs[s];
    ny[d] = ys[s];
    for (std::size_t i = d; i < s; ++i) {
      nx[i + 1] = G.conj(xs[i], c);
      ny[i + 1] = G.conj(ys[i], c);
    }
  }
  const Word c = commutator(state.xw_[s], state.yw_[s]);
  next.xw_[d] = state.xw_[s];
  next.yw_[d] = state.yw_[s];
  for (std::size_t i = d; i < s; ++i) {
    next.xw_[i + 1] = state.xw_[i].conjugated_by(c);
    next.yw_[i + 1] = state.yw_[i].conjugated_by(c);
  }
  return next;
}

SurfaceTuple to_original_basis(const BasisState& state, const SurfaceTuple& current) {
  if (current.genus() != state.genus())
    throw Error(Errc::GenusMismatch, "tuple genus does not match basis state");
  const FiniteGroup& G = current.target();
  std::vector<Elem> x = current.x(), y = current.y();
  const auto& moves = state.moves();
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    const std::size_t s = it->first - 1, d = it->second - 1;
    // Before the move: old slot s sat at d; old slots d..s-1 are the new
    // slots d+1..s conjugated back by c^-1.
    const Elem cinv = G.inv(G.comm(x[d], y[d]));
    const Elem ox = x[d], oy = y[d];
    for (std::size_t i = d; i < s; ++i) {
      x[i] = G.conj(x[i + 1], cinv);
      y[i] = G.conj(y[i + 1], cinv);
    }
    x[s] = ox;
    y[s] = oy;
  }
  return SurfaceTuple(G, std::move(x), std::move(y));
}

std::int64_t open_subgroup_genus(std::int64_t g, std::int64_t index) {
  if (g < 2) throw Error(Errc::GenusTooSmall, "genus must be at least 2", {2, g});
  if (index < 1) throw Error(Errc::InvalidArgument, "index must be positive", {index});
  return index * (g - 1) + 1;
}

}  // namespace surfep
