#include "intertwine/character.hpp"

#include "intertwine/errors.hpp"

#include <cctype>
#include <deque>
#include <memory>
#include <mutex>

namespace intertwine {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

class FieldRegistry {
 public:
  static const FieldSpec& get(FieldKind kind, int q, std::vector<int> orders) {
    static std::mutex mutex;
    static std::deque<std::unique_ptr<FieldSpec>> fields;
    std::lock_guard lock(mutex);
    for (const auto& f : fields)
      if (f->kind_ == kind && f->q_ == q && f->tag_orders_ == orders) return *f;
    fields.push_back(std::unique_ptr<FieldSpec>(new FieldSpec(kind, q, std::move(orders))));
    return *fields.back();
  }
};

const FieldSpec& FieldSpec::real() {
  static const FieldSpec& f = FieldRegistry::get(FieldKind::Real, 0, {});
  return f;
}

const FieldSpec& FieldSpec::complex() {
  static const FieldSpec& f = FieldRegistry::get(FieldKind::Complex, 0, {});
  return f;
}

const FieldSpec& FieldSpec::non_archimedean(int q, std::vector<int> tag_orders) {
  if (!(is_prime(q) || q == 4)) throw DomainError("q must be prime or 4, got " + std::to_string(q));
  for (int o : tag_orders)
    if (o < 1) throw DomainError("tag group orders must be >= 1");
  return FieldRegistry::get(FieldKind::NonArch, q, std::move(tag_orders));
}

std::size_t FieldSpec::tag_arity() const noexcept {
  return kind_ == FieldKind::NonArch ? tag_orders_.size() : 1;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::NonArch: break;
  }
  std::string s = "NA(q=" + std::to_string(q_);
  if (!tag_orders_.empty()) {
    s += ";";
    for (std::size_t i = 0; i < tag_orders_.size(); ++i)
      s += (i ? "," : "") + std::to_string(tag_orders_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// CharFx

CharFx::CharFx(const FieldSpec& field) : field_(&field), tag_(field.tag_arity(), 0) {}

CharFx::CharFx(const FieldSpec& field, Rational s_re, Rational s_im, UnitTag tag)
    : field_(&field), s_re_(s_re), s_im_(s_im), tag_(std::move(tag)) {
  if (tag_.empty()) tag_.assign(field.tag_arity(), 0);
  if (tag_.size() != field.tag_arity()) throw DomainError("unit tag has wrong arity for field " + field.name());
  normalize_tag();
}

void CharFx::normalize_tag() {
  switch (field_->kind()) {
    case FieldKind::Real: tag_[0] = mod(tag_[0], 2); break;
    case FieldKind::Complex: break;
    case FieldKind::NonArch:
      for (std::size_t i = 0; i < tag_.size(); ++i) tag_[i] = mod(tag_[i], field_->tag_orders()[i]);
      break;
  }
}

bool CharFx::tag_is_trivial() const noexcept {
  for (auto t : tag_)
    if (t != 0) return false;
  return true;
}

bool CharFx::is_trivial() const noexcept {
  return s_re_ == 0 && s_im_ == 0 && tag_is_trivial();
}

CharFx CharFx::operator*(const CharFx& other) const {
  if (field_ != other.field_) throw FieldMismatch();
  CharFx r(*this);
  r.s_re_ += other.s_re_;
  r.s_im_ += other.s_im_;
  for (std::size_t i = 0; i < r.tag_.size(); ++i) r.tag_[i] += other.tag_[i];
  r.normalize_tag();
  return r;
}

CharFx CharFx::inverse() const {
  CharFx r(*this);
  r.s_re_ = -s_re_;
  r.s_im_ = -s_im_;
  for (auto& t : r.tag_) t = -t;
  r.normalize_tag();
  return r;
}

CharFx CharFx::pow(std::int64_t e) const {
  CharFx r(*this);
  r.s_re_ *= e;
  r.s_im_ *= e;
  for (auto& t : r.tag_) t *= e;
  r.normalize_tag();
  return r;
}

CharFx sign_character(const FieldSpec& field) {
  if (field.kind() != FieldKind::Real) throw DomainError("sgn is only defined over R");
  return CharFx(field, 0, 0, {1});
}

CharFx det_character(const FieldSpec& field, std::int64_t e) {
  switch (field.kind()) {
    case FieldKind::Real: return CharFx(field, Rational(e), 0, {e});
    case FieldKind::Complex: return CharFx(field, Rational(e, 2), 0, {e});
    case FieldKind::NonArch: break;
  }
  throw DomainError("det^e is only defined over R and C");
}

CharFx det_bar_character(const FieldSpec& field, std::int64_t e) {
  if (field.kind() != FieldKind::Complex) throw DomainError("detbar is only defined over C");
  return CharFx(field, Rational(e, 2), 0, {-e});
}

CharFx circle_character(const FieldSpec& field, std::int64_t m) {
  if (field.kind() != FieldKind::Complex) throw DomainError("circ is only defined over C");
  return CharFx(field, 0, 0, {m});
}

// ---------------------------------------------------------------------------
// GLChar

GLChar::GLChar(int p, CharFx chi) : p_(p), chi_(std::move(chi)) {
  if (p < 0) throw DomainError("block size must be non-negative");
  if (p == 0) chi_ = CharFx(chi_.field());
}

GLChar GLChar::restricted() const {
  if (p_ == 0) throw DomainError("cannot restrict a character of GL_0");
  return GLChar(p_ - 1, chi_);
}

GLChar GLChar::extended() const { return GLChar(p_ + 1, chi_); }

GLChar segment(const FieldSpec& field, int i, int j) {
  if (i > j) throw DomainError("segment [i,j) requires i <= j");
  return GLChar(j - i, CharFx::nu(field, Rational(i + j, 2)));
}

std::pair<GLChar, GLChar> modular_character(const FieldSpec& field, int p1, int p2) {
  if (p1 < 0 || p2 < 0) throw DomainError("block sizes must be non-negative");
  return {GLChar(p1, CharFx::nu(field, p2)), GLChar(p2, CharFx::nu(field, -p1))};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class CharParser {
 public:
  CharParser(std::string_view text, const FieldSpec& field) : text_(text), field_(field) {}

  GLChar parse_glchar() {
    skip_ws();
    if (peek() == '[') {
      ++pos_;
      int i = static_cast<int>(parse_int());
      expect(',');
      int j = static_cast<int>(parse_int());
      expect(')');
      finish();
      if (i > j) throw ParseError("segment [i,j) requires i <= j", pos_);
      return segment(field_, i, j);
    }
    auto p = parse_int();
    if (p < 0) throw ParseError("block size must be non-negative", pos_);
    expect(':');
    auto chi = parse_expr();
    finish();
    return GLChar(static_cast<int>(p), chi);
  }

  CharFx parse_expr_only() {
    auto chi = parse_expr();
    finish();
    return chi;
  }

 private:
  CharFx parse_expr() {
    CharFx chi = parse_term();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      chi = chi * parse_term();
      skip_ws();
    }
    return chi;
  }

  CharFx parse_term() {
    skip_ws();
    std::size_t start = pos_;
    if (accept("nu^{")) {
      auto r = parse_rat();
      bool imaginary = false;
      if (peek() == 'i') {
        ++pos_;
        imaginary = true;
      }
      expect('}');
      return imaginary ? CharFx(field_, 0, r) : CharFx(field_, r);
    }
    if (accept("sgn")) {
      std::int64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int();
      }
      require(field_.kind() == FieldKind::Real, "sgn is only defined over R", start);
      return sign_character(field_).pow(e);
    }
    if (accept("detbar^")) {
      auto e = parse_int();
      require(field_.kind() == FieldKind::Complex, "detbar is only defined over C", start);
      return det_bar_character(field_, e);
    }
    if (accept("det^")) {
      auto e = parse_int();
      require(field_.archimedean(), "det is only defined over R and C", start);
      return det_character(field_, e);
    }
    if (accept("circ^")) {
      auto m = parse_int();
      require(field_.kind() == FieldKind::Complex, "circ is only defined over C", start);
      return circle_character(field_, m);
    }
    if (accept("tag(")) {
      require(field_.kind() == FieldKind::NonArch, "tag(...) is only defined over non-archimedean fields",
              start);
      UnitTag tag;
      tag.push_back(parse_int());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        tag.push_back(parse_int());
        skip_ws();
      }
      expect(')');
      const auto& orders = field_.tag_orders();
      require(tag.size() == orders.size(), "tag arity does not match the declared tag group", start);
      for (std::size_t i = 0; i < tag.size(); ++i)
        require(tag[i] >= 0 && tag[i] < orders[i], "tag outside the declared tag group", start);
      return CharFx(field_, 0, 0, tag);
    }
    if (accept("1")) return CharFx(field_);
    throw ParseError("expected a character term", pos_);
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected an integer", start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      throw ParseError("integer out of range", start);
    }
  }

  Rational parse_rat() {
    std::size_t start = pos_;
    auto num = parse_int();
    if (peek() != '/') return Rational(num);
    ++pos_;
    auto den = parse_int();
    if (den <= 0) throw ParseError("denominator must be positive", start);
    return Rational(num, den);
  }

  void require(bool ok, const char* message, std::size_t at) {
    if (!ok) throw ParseError(message, at);
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const FieldSpec& field_;
  std::size_t pos_ = 0;
};

}  // namespace

GLChar parse_char(std::string_view text, const FieldSpec& field) {
  return CharParser(text, field).parse_glchar();
}

CharFx parse_char_expr(std::string_view text, const FieldSpec& field) {
  return CharParser(text, field).parse_expr_only();
}

std::string render(const CharFx& chi) {
  std::string out;
  auto add = [&out](const std::string& term) {
    if (!out.empty()) out += "*";
    out += term;
  };
  if (chi.s_re() != 0) add("nu^{" + to_string(chi.s_re()) + "}");
  if (chi.s_im() != 0) add("nu^{" + to_string(chi.s_im()) + "i}");
  if (!chi.tag_is_trivial()) {
    switch (chi.field().kind()) {
      case FieldKind::Real: add("sgn"); break;
      case FieldKind::Complex: add("circ^" + std::to_string(chi.tag()[0])); break;
      case FieldKind::NonArch: {
        std::string t = "tag(";
        for (std::size_t i = 0; i < chi.tag().size(); ++i)
          t += (i ? "," : "") + std::to_string(chi.tag()[i]);
        add(t + ")");
        break;
      }
    }
  }
  return out.empty() ? "1" : out;
}

std::string render(const GLChar& c) { return std::to_string(c.size()) + ":" + render(c.chi()); }

const FieldSpec& parse_field(std::string_view text) {
  if (text == "R") return FieldSpec::real();
  if (text == "C") return FieldSpec::complex();
  if (text.substr(0, 2) != "NA") throw ParseError("unknown field '" + std::string(text) + "'", 0);
  int q = 3;
  std::vector<int> orders;
  std::size_t pos = 2;
  while (pos < text.size()) {
    if (text[pos] != ':') throw ParseError("expected ':' in field spec", pos);
    ++pos;
    auto next = text.find(':', pos);
    auto item = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    try {
      if (item.substr(0, 2) == "q=") {
        q = std::stoi(std::string(item.substr(2)));
      } else if (item.substr(0, 5) == "tags=") {
        std::string list(item.substr(5));
        std::size_t start = 0;
        while (start <= list.size()) {
          auto comma = list.find(',', start);
          orders.push_back(std::stoi(list.substr(start, comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        throw ParseError("unknown field option", pos);
      }
    } catch (const std::logic_error&) {
      throw ParseError("malformed field option", pos);
    }
    pos = next == std::string_view::npos ? text.size() : next;
  }
  return FieldSpec::non_archimedean(q, std::move(orders));
}

}  // namespace intertwine
