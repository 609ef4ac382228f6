#include "intertwine/quadruple.hpp"

#include "intertwine/errors.hpp"

namespace intertwine {

Quadruple::Quadruple(GLChar c1, GLChar c2, GLChar c3, GLChar c4)
    : blocks_{std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {
  for (const auto& b : blocks_)
    if (!(b.field() == blocks_[0].field())) throw FieldMismatch();
  int n = blocks_[0].size() + blocks_[1].size();
  if (n != blocks_[2].size() + blocks_[3].size())
    throw InvalidQuadruple("block sizes do not balance: p1 + p2 = " + std::to_string(n) +
                           ", p3 + p4 = " + std::to_string(blocks_[2].size() + blocks_[3].size()));
  if (n < 1) throw InvalidQuadruple("n = p1 + p2 must be at least 1");
}

bool Quadruple::has_empty_block() const noexcept {
  for (const auto& b : blocks_)
    if (b.empty()) return true;
  return false;
}

}  // namespace intertwine
