#pragma once

// Homomorphisms out of the genus-g surface group
//   <x_1..x_g, y_1..y_g | [x_1,y_1] ... [x_g,y_g] = 1>,  [a,b] = a^-1 b^-1 a b,
// represented by their 2g generator images, plus words in the generators and
// the basis moves that bring chosen handle pairs to the front.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfep/group.hpp"

namespace surfep {

struct Symbol {
  bool is_y = false;
  std::uint32_t index = 1;  // 1-based handle number

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Letter {
  Symbol sym;
  std::int64_t exp = 1;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the surface generators. Adjacent letters on the same symbol are
// merged (and dropped when the exponent cancels); no other reduction.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word x(std::uint32_t i, std::int64_t e = 1) { return Word({{{false, i}, e}}); }
  static Word y(std::uint32_t i, std::int64_t e = 1) { return Word({{{true, i}, e}}); }
  // "x1^-1 x14 y2^3"; the empty string is the empty word.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  std::uint32_t max_index() const noexcept;

  Word inverse() const;
  // c^-1 w c
  Word conjugated_by(const Word& c) const;
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

// [a,b] = a^-1 b^-1 a b as a word
Word commutator(const Word& a, const Word& b);

class SurfaceTuple {
 public:
  // Throws RelationViolated (data = {value of the product}).
  SurfaceTuple(FiniteGroup target, std::vector<Elem> ximg, std::vector<Elem> yimg);

  const FiniteGroup& target() const noexcept { return target_; }
  std::size_t genus() const noexcept { return x_.size(); }
  const std::vector<Elem>& x() const noexcept { return x_; }
  const std::vector<Elem>& y() const noexcept { return y_; }
  Elem x(std::size_t i) const { return x_.at(i - 1); }  // 1-based
  Elem y(std::size_t i) const { return y_.at(i - 1); }
  // x images followed by y images
  std::vector<Elem> images() const;

  friend bool operator==(const SurfaceTuple&, const SurfaceTuple&) = default;

 private:
  FiniteGroup target_;
  std::vector<Elem> x_;
  std::vector<Elem> y_;
};

// Product of [x_i, y_i] left to right; identity iff the tuple is a
// homomorphism. Does not validate.
Elem relation_value(const FiniteGroup& g, std::span<const Elem> x, std::span<const Elem> y);

SurfaceTuple make_surface_tuple(const FiniteGroup& target, std::vector<Elem> ximg,
                                std::vector<Elem> yimg);

Elem evaluate_word(const SurfaceTuple& t, const Word& w);

SubgroupHandle tuple_image(const SurfaceTuple& t);

// Pushes every image through `hom` (whose domain must be t's target).
SurfaceTuple map_tuple(const GroupHom& hom, const SurfaceTuple& t);

// 1-based positions j_1 < ... < j_m of the lexicographically smallest value
// pair occurring at least m times.
std::vector<std::size_t> pigeonhole_select(std::span<const std::pair<Elem, Elem>> pairs,
                                           std::size_t m);

// A surface basis under change: for each tracked channel, the current images
// of every (x_i, y_i), and for each slot the word expressing the current
// basis element in the original basis. Moves are recorded so images can be
// transported back to the original basis.
class BasisState {
 public:
  explicit BasisState(std::vector<SurfaceTuple> channels);

  std::size_t genus() const noexcept { return xw_.size(); }
  std::size_t channel_count() const noexcept { return original_.size(); }
  const SurfaceTuple& original(std::size_t c) const { return original_.at(c); }
  // Current images of channel c as a validated tuple.
  SurfaceTuple channel(std::size_t c) const;
  Elem x_image(std::size_t c, std::size_t i) const { return xs_.at(c).at(i - 1); }
  Elem y_image(std::size_t c, std::size_t i) const { return ys_.at(c).at(i - 1); }
  const Word& x_word(std::size_t i) const { return xw_.at(i - 1); }
  const Word& y_word(std::size_t i) const { return yw_.at(i - 1); }
  const std::vector<std::pair<std::size_t, std::size_t>>& moves() const noexcept {
    return moves_;
  }

  friend BasisState move_pair_to_front(const BasisState& state, std::size_t src, std::size_t dst);

 private:
  std::vector<SurfaceTuple> original_;
  std::vector<std::vector<Elem>> xs_, ys_;
  std::vector<Word> xw_, yw_;
  std::vector<std::pair<std::size_t, std::size_t>> moves_;  // (src, dst)
};

// Moves slot `src` to position `dst` <= src; slots dst..src-1 shift up by
// one and are conjugated by c = [x_src, y_src]. Slots before dst are frozen.
BasisState move_pair_to_front(const BasisState& state, std::size_t src, std::size_t dst);

// Given a homomorphism described by its images on the current basis of
// `state`, returns its images on the original basis (undoes every move).
SurfaceTuple to_original_basis(const BasisState& state, const SurfaceTuple& current);

// Genus of an index-`index` open subgroup of a genus-g surface group.
std::int64_t open_subgroup_genus(std::int64_t g, std::int64_t index);

}  // namespace surfep
