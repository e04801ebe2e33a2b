#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace archcop {

/// Raised when an argument lies outside the admissible domain of an operation
/// (a point outside the unit square, a parameter outside the family's range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class FamilyId {
    F1PowerLog,         // phi(z) = (-alpha ln z)^(1/alpha),      0 < alpha <= 1
    F2PowerLogSq,       // phi(z) = (-ln z)^(1/alpha^2),          0 < alpha <= 1
    F3FrailtyRational,  // phi(z) = alpha (sqrt(1 + 24/z) - 5)/2, alpha > 0
    GumbelRef,          // phi(z) = (-ln z)^theta,                theta >= 1
    Independence,       // phi(z) = -ln z
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::F1PowerLog, FamilyId::F2PowerLogSq, FamilyId::F3FrailtyRational,
    FamilyId::GumbelRef, FamilyId::Independence,
};

/// The single dependence parameter of a family: alpha for F1/F2/F3, theta for
/// the Gumbel reference. Independence ignores it.
struct DependenceParam {
    double value = 1.0;
};

/// Lowercase CLI tag: f1, f2, f3, gumbel, independence.
std::string_view family_tag(FamilyId family) noexcept;

/// Inverse of family_tag. Throws DomainError on an unknown tag.
FamilyId parse_family(std::string_view tag);

/// Name of the parameter the family takes ("alpha", "theta" or "" for none).
std::string_view param_name(FamilyId family) noexcept;

/// Human-readable admissible interval, e.g. "(0,1]".
std::string_view param_domain(FamilyId family) noexcept;

bool param_in_domain(FamilyId family, DependenceParam p) noexcept;

/// Throws DomainError("alpha out of domain (0,1]") and similar.
void require_param(FamilyId family, DependenceParam p);

}  // namespace archcop
