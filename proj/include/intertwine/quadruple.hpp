#pragma once

#include "intertwine/character.hpp"

#include <array>
#include <cstddef>

namespace intertwine {

/// X = (chi1, chi2; chi3, chi4): Hom(chi1 x chi2, chi3 x chi4) with p1 + p2 = p3 + p4 = n >= 1.
class Quadruple {
 public:
  /// Throws InvalidQuadruple on size imbalance or n = 0, FieldMismatch on mixed fields.
  Quadruple(GLChar c1, GLChar c2, GLChar c3, GLChar c4);

  const FieldSpec& field() const noexcept { return blocks_[0].field(); }
  const GLChar& operator[](std::size_t b) const { return blocks_[b]; }
  const std::array<GLChar, 4>& blocks() const noexcept { return blocks_; }
  int size(std::size_t b) const { return blocks_[b].size(); }
  int n() const noexcept { return blocks_[0].size() + blocks_[1].size(); }

  bool has_empty_block() const noexcept;

  friend bool operator==(const Quadruple& a, const Quadruple& b) noexcept { return a.blocks_ == b.blocks_; }

 private:
  std::array<GLChar, 4> blocks_;
};

}  // namespace intertwine
