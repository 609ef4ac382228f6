#include "intertwine/certificate.hpp"

namespace intertwine {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

int priority(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Identity: return 0;
    case CertificateKind::Rank1: return 1;
    case CertificateKind::Radon: return 2;
    case CertificateKind::RealCapelli: return 3;
    case CertificateKind::ComplexCapelli: return 3;
    case CertificateKind::KnappStein: return 4;
    case CertificateKind::NoFamily: return 5;
  }
  return 5;
}

std::string family_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Identity: return "Standard/Identity";
    case CertificateKind::KnappStein: return "Standard/KnappStein";
    case CertificateKind::Rank1: return "Mixed/Rank1";
    case CertificateKind::Radon: return "Mixed/Radon";
    case CertificateKind::RealCapelli: return "Exceptional/RealCapelli";
    case CertificateKind::ComplexCapelli: return "Exceptional/ComplexCapelli";
    case CertificateKind::NoFamily: return "None";
  }
  return "None";
}

char to_char(cert::RadonCase c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::string to_string(cert::NoFamilyReason reason) {
  switch (reason) {
    case cert::NoFamilyReason::CentralConstraintFailed: return "central-constraint-failed";
    case cert::NoFamilyReason::NoPattern: return "no-pattern";
    case cert::NoFamilyReason::LiftFailed: return "lift-failed";
  }
  return "no-pattern";
}

std::string reference_label(const Certificate& c) {
  return std::visit(
      overloaded{
          [](const cert::Identity&) -> std::string { return "std-identity"; },
          [](const cert::KnappStein&) -> std::string { return "std-knapp-stein"; },
          [](const cert::Rank1&) -> std::string { return "mix1"; },
          [](const cert::Radon& r) -> std::string { return std::string("mix2-case-") + to_char(r.which); },
          [](const cert::RealCapelli&) -> std::string { return "exc1"; },
          [](const cert::ComplexCapelli& c) -> std::string {
            return "exc2-variant-" + std::to_string(c.variant);
          },
          [](const cert::NoFamily&) -> std::string { return "none"; },
      },
      c);
}

std::string describe(const Certificate& c) {
  auto ijk = [](int i, int j, int k) {
    return "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k);
  };
  auto body = std::visit(
      overloaded{
          [](const cert::Identity&) -> std::string { return "scalar operator"; },
          [](const cert::KnappStein&) -> std::string { return "Knapp-Stein (cosine) transform"; },
          [&](const cert::Rank1& r) -> std::string {
            return "rank-one operator through nu^{k/2} (" + ijk(r.i, r.j, r.k) + ")";
          },
          [&](const cert::Radon& r) -> std::string { return "Radon transform (" + ijk(r.i, r.j, r.k) + ")"; },
          [](const cert::RealCapelli& r) -> std::string {
            return "Capelli operator det(d)^" + std::to_string(r.i) + " on GL_" + std::to_string(r.k) + "(R)";
          },
          [](const cert::ComplexCapelli& r) -> std::string {
            return std::string("Capelli operator ") + (r.variant == 1 ? "det(d)^" : "det(dbar)^") +
                   std::to_string(r.i) + " on GL_" + std::to_string(r.k) + "(C), j=" + std::to_string(r.j);
          },
          [](const cert::NoFamily& n) -> std::string { return "no intertwiner (" + to_string(n.reason) + ")"; },
      },
      c);
  return body + " [" + reference_label(c) + "]";
}

bool well_formed(const Certificate& c) {
  return std::visit(overloaded{
                        [](const cert::Rank1& r) { return 0 <= r.i && r.i != r.j && 0 <= r.j && r.i < r.k && r.j < r.k; },
                        [](const cert::Radon& r) { return 0 < r.i && r.i < r.j && r.j < r.k; },
                        [](const cert::RealCapelli& r) { return r.k >= 1 && r.i >= 1; },
                        [](const cert::ComplexCapelli& r) {
                          return r.k >= 1 && r.i >= 1 && (r.variant == 1 || r.variant == 2);
                        },
                        [](const auto&) { return true; },
                    },
                    c);
}

}  // namespace intertwine
