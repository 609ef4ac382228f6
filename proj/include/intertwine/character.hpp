#pragma once

#include "intertwine/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intertwine {

enum class FieldKind { Real, Complex, NonArch };

// Local field descriptor. Instances are interned: two specs describing the
// same field are the same object, so identity comparison is field equality.
class FieldSpec {
 public:
  static const FieldSpec& real();
  static const FieldSpec& complex();
  /// q must be prime or 4; tag orders declare Z/o1 x Z/o2 x ... of unitary tags.
  static const FieldSpec& non_archimedean(int q, std::vector<int> tag_orders = {});

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  FieldKind kind() const noexcept { return kind_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& tag_orders() const noexcept { return tag_orders_; }
  bool archimedean() const noexcept { return kind_ != FieldKind::NonArch; }
  /// Number of components of a unit tag.
  std::size_t tag_arity() const noexcept;
  /// "R", "C" or "NA(q=3;2)".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return &a == &b; }

 private:
  FieldSpec(FieldKind kind, int q, std::vector<int> orders)
      : kind_(kind), q_(q), tag_orders_(std::move(orders)) {}
  friend class FieldRegistry;

  FieldKind kind_;
  int q_;
  std::vector<int> tag_orders_;
};

using UnitTag = boost::container::small_vector<std::int64_t, 2>;

/// Character of F^x: nu^{s_re + i s_im} times a unitary tag.
///   Real:    tag = (e mod 2), sgn^e
///   Complex: tag = (m), (z/|z|)^m
///   NonArch: tag = residues in the declared tag group
class CharFx {
 public:
  explicit CharFx(const FieldSpec& field);
  CharFx(const FieldSpec& field, Rational s_re, Rational s_im = Rational(0), UnitTag tag = {});

  static CharFx nu(const FieldSpec& field, Rational s) { return CharFx(field, s); }

  const FieldSpec& field() const noexcept { return *field_; }
  const Rational& s_re() const noexcept { return s_re_; }
  const Rational& s_im() const noexcept { return s_im_; }
  const UnitTag& tag() const noexcept { return tag_; }

  bool is_trivial() const noexcept;
  bool tag_is_trivial() const noexcept;

  CharFx operator*(const CharFx& other) const;
  CharFx operator/(const CharFx& other) const { return *this * other.inverse(); }
  CharFx inverse() const;
  CharFx pow(std::int64_t e) const;

  friend bool operator==(const CharFx& a, const CharFx& b) noexcept {
    return a.field_ == b.field_ && a.s_re_ == b.s_re_ && a.s_im_ == b.s_im_ && a.tag_ == b.tag_;
  }

 private:
  void normalize_tag();

  const FieldSpec* field_;
  Rational s_re_;
  Rational s_im_;
  UnitTag tag_;
};

inline CharFx char_mul(const CharFx& a, const CharFx& b) { return a * b; }
inline CharFx char_inv(const CharFx& a) { return a.inverse(); }

// Named characters. Over C, nu is the normalized absolute value |z|^2.
CharFx sign_character(const FieldSpec& field);                     // R only
CharFx det_character(const FieldSpec& field, std::int64_t e);      // delta^e, R or C
CharFx det_bar_character(const FieldSpec& field, std::int64_t e);  // deltabar^e, C only
CharFx circle_character(const FieldSpec& field, std::int64_t m);   // C only

/// A character chi o det of GL_p. A p = 0 block always carries the trivial character.
class GLChar {
 public:
  GLChar(int p, CharFx chi);
  static GLChar empty(const FieldSpec& field) { return GLChar(0, CharFx(field)); }

  int size() const noexcept { return p_; }
  bool empty() const noexcept { return p_ == 0; }
  const CharFx& chi() const noexcept { return chi_; }
  const FieldSpec& field() const noexcept { return chi_.field(); }

  /// Restriction to GL_{p-1}. Throws DomainError when p == 0.
  GLChar restricted() const;
  /// The unique character of GL_{p+1} restricting to this one.
  GLChar extended() const;

  friend bool operator==(const GLChar& a, const GLChar& b) noexcept {
    return a.p_ == b.p_ && a.chi_ == b.chi_;
  }

 private:
  int p_;
  CharFx chi_;
};

/// [i,j): the character nu^{(i+j)/2} of GL_{j-i}.
GLChar segment(const FieldSpec& field, int i, int j);

/// Modulus of P_{p1,p2}: (nu^{p2} on GL_{p1}, nu^{-p1} on GL_{p2}).
std::pair<GLChar, GLChar> modular_character(const FieldSpec& field, int p1, int p2);

/// Parses `INT ":" EXPR` or `[i,j)`. Throws ParseError (bad text) or
/// DomainError (tag outside the field's tag group).
GLChar parse_char(std::string_view text, const FieldSpec& field);
CharFx parse_char_expr(std::string_view text, const FieldSpec& field);

std::string render(const CharFx& chi);
std::string render(const GLChar& c);

/// Parses "R", "C", "NA" / "NA:q=3" / "NA:q=3:tags=2,2".
const FieldSpec& parse_field(std::string_view text);

}  // namespace intertwine
