#pragma once

#include "intertwine/character.hpp"

#include <string>
#include <variant>

namespace intertwine {

namespace cert {

struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};
struct KnappStein {
  friend bool operator==(const KnappStein&, const KnappStein&) = default;
};
/// alpha~_j -> alpha_i through the character nu^{k/2}; 0 <= i != j < k.
struct Rank1 {
  int i, j, k;
  friend bool operator==(const Rank1&, const Rank1&) = default;
};

/// a: gamma -> beta, b: gamma~ -> beta, c: beta~ -> gamma, d: beta~ -> gamma~.
enum class RadonCase { A, B, C, D };

/// 0 < i < j < k.
struct Radon {
  RadonCase which;
  int i, j, k;
  friend bool operator==(const Radon&, const Radon&) = default;
};
/// 1 x delta^i sgn -> delta^i x sgn on GL_k(R), i >= 1.
struct RealCapelli {
  int k, i;
  friend bool operator==(const RealCapelli&, const RealCapelli&) = default;
};
/// variant 1: 1 x delta^i deltabar^j -> delta^i x deltabar^j; variant 2 conjugate. i >= 1.
struct ComplexCapelli {
  int variant, k, i, j;
  friend bool operator==(const ComplexCapelli&, const ComplexCapelli&) = default;
};

enum class NoFamilyReason { CentralConstraintFailed, NoPattern, LiftFailed };

struct NoFamily {
  NoFamilyReason reason;
  friend bool operator==(const NoFamily&, const NoFamily&) = default;
};

}  // namespace cert

using Certificate = std::variant<cert::Identity, cert::KnappStein, cert::Rank1, cert::Radon,
                                 cert::RealCapelli, cert::ComplexCapelli, cert::NoFamily>;

/// Indices match the alternatives of Certificate.
enum class CertificateKind { Identity, KnappStein, Rank1, Radon, RealCapelli, ComplexCapelli, NoFamily };

inline CertificateKind kind_of(const Certificate& c) { return static_cast<CertificateKind>(c.index()); }

/// Order in which classify tries the families (lower first).
int priority(CertificateKind kind);

/// "Standard/Identity", "Mixed/Radon", ..., "None".
std::string family_name(CertificateKind kind);
/// Machine label: "std-identity", "std-knapp-stein", "mix1", "mix2-case-a", "exc1", "exc2-variant-1", "none".
std::string reference_label(const Certificate& c);
/// Human one-liner, e.g. "Radon transform (i=1, j=2, k=3) [mix2-case-a]".
std::string describe(const Certificate& c);
std::string to_string(cert::NoFamilyReason reason);
char to_char(cert::RadonCase c);

/// Checks the parameter constraints each certificate carries.
bool well_formed(const Certificate& c);

struct Classification {
  int dim;
  Certificate certificate;
  /// The central twist psi realizing the pattern; trivial for Standard and NoFamily.
  CharFx twist;

  static Classification none(const FieldSpec& field, cert::NoFamilyReason reason) {
    return {0, cert::NoFamily{reason}, CharFx(field)};
  }
};

}  // namespace intertwine
