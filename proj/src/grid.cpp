#include "intertwine/grid.hpp"

#include "intertwine/inductive.hpp"

namespace intertwine {

std::vector<CharFx> exponent_grid(const FieldSpec& field, Rational lo, Rational hi) {
  std::vector<CharFx> out;
  for (const auto& c : character_grid(field, std::max(abs(lo), abs(hi))))
    if (c.s_re() >= lo && c.s_re() <= hi) out.push_back(c);
  return out;
}

void for_each_grid_quadruple(const FieldSpec& field, int max_n, const std::vector<CharFx>& chars,
                             const std::function<void(const Quadruple&)>& visit) {
  const std::vector<CharFx> trivial{CharFx(field)};
  for (int n = 1; n <= max_n; ++n)
    for (int p1 = 0; p1 <= n; ++p1)
      for (int p3 = 0; p3 <= n; ++p3) {
        const int p2 = n - p1, p4 = n - p3;
        for (const auto& a : p1 ? chars : trivial)
          for (const auto& b : p2 ? chars : trivial)
            for (const auto& c : p3 ? chars : trivial)
              for (const auto& d : p4 ? chars : trivial)
                visit(Quadruple(GLChar(p1, a), GLChar(p2, b), GLChar(p3, c), GLChar(p4, d)));
      }
}

RandomQuadruples::RandomQuadruples(const FieldSpec& field, int max_n, std::uint64_t seed)
    : field_(&field), max_n_(max_n), rng_(seed), grid_(character_grid(field, 2)) {
  for (int n = 1; n <= max_n; ++n) {
    auto m = enumerate_family(field, EnumerationBounds{n, 1, 2, seed});
    members_.insert(members_.end(), m.begin(), m.end());
  }
}

CharFx RandomQuadruples::random_char() {
  std::uniform_int_distribution<std::size_t> pick(0, grid_.size() - 1);
  std::uniform_int_distribution<int> im(-2, 2);
  const CharFx& c = grid_[pick(rng_)];
  return CharFx(*field_, c.s_re(), Rational(im(rng_), 2), c.tag());
}

Quadruple RandomQuadruples::pin(const Quadruple& x) {
  for (std::size_t b : {3, 2, 1, 0}) {
    if (x.size(b) != 1) continue;
    const std::size_t other = b ^ 1, s0 = b < 2 ? 2 : 0;
    const CharFx target = x[s0].chi().pow(x.size(s0)) * x[s0 + 1].chi().pow(x.size(s0 + 1));
    std::array<GLChar, 4> blocks{x[0], x[1], x[2], x[3]};
    blocks[b] = GLChar(1, target / x[other].chi().pow(x.size(other)));
    return Quadruple(blocks[0], blocks[1], blocks[2], blocks[3]);
  }
  return x;
}

Quadruple RandomQuadruples::next() {
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<std::size_t> member(0, members_.size() - 1);
  switch (mode(rng_)) {
    case 0: return twist(members_[member(rng_)].quadruple, random_char());
    case 1: {
      const Quadruple& x = members_[member(rng_)].quadruple;
      std::uniform_int_distribution<std::size_t> block(0, 3);
      std::array<GLChar, 4> blocks{x[0], x[1], x[2], x[3]};
      const std::size_t b = block(rng_);
      blocks[b] = GLChar(x.size(b), x[b].chi() * random_char());
      return twist(pin(Quadruple(blocks[0], blocks[1], blocks[2], blocks[3])), random_char());
    }
    default: break;
  }
  std::uniform_int_distribution<int> size_n(1, max_n_);
  const int n = size_n(rng_);
  std::uniform_int_distribution<int> split(0, n);
  const int p1 = split(rng_), p3 = split(rng_);
  return pin(Quadruple(GLChar(p1, random_char()), GLChar(n - p1, random_char()), GLChar(p3, random_char()),
                       GLChar(n - p3, random_char())));
}

void CrossCheckTally::record(const Quadruple& x) {
  ++checked;
  Classification direct = classify(x);
  Classification inductive = inductive_classify(x);
  if (direct.dim != inductive.dim || kind_of(direct.certificate) != kind_of(inductive.certificate))
    disagreements.push_back({x, std::move(direct), std::move(inductive)});
}

}  // namespace intertwine
