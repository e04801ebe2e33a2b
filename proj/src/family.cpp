#include "archcop/family.hpp"

#include <cmath>

namespace archcop {

std::string_view family_tag(FamilyId family) noexcept {
    switch (family) {
    case FamilyId::F1PowerLog: return "f1";
    case FamilyId::F2PowerLogSq: return "f2";
    case FamilyId::F3FrailtyRational: return "f3";
    case FamilyId::GumbelRef: return "gumbel";
    case FamilyId::Independence: return "independence";
    }
    return "unknown";
}

FamilyId parse_family(std::string_view tag) {
    for (FamilyId f : kAllFamilies) {
        if (family_tag(f) == tag) return f;
    }
    throw DomainError("unknown family '" + std::string(tag) +
                      "' (expected f1|f2|f3|gumbel|independence)");
}

std::string_view param_name(FamilyId family) noexcept {
    switch (family) {
    case FamilyId::F1PowerLog:
    case FamilyId::F2PowerLogSq:
    case FamilyId::F3FrailtyRational: return "alpha";
    case FamilyId::GumbelRef: return "theta";
    case FamilyId::Independence: return "";
    }
    return "";
}

std::string_view param_domain(FamilyId family) noexcept {
    switch (family) {
    case FamilyId::F1PowerLog:
    case FamilyId::F2PowerLogSq: return "(0,1]";
    case FamilyId::F3FrailtyRational: return "(0,inf)";
    case FamilyId::GumbelRef: return "[1,inf)";
    case FamilyId::Independence: return "(none)";
    }
    return "";
}

bool param_in_domain(FamilyId family, DependenceParam p) noexcept {
    const double x = p.value;
    switch (family) {
    case FamilyId::F1PowerLog:
    case FamilyId::F2PowerLogSq: return x > 0.0 && x <= 1.0;
    case FamilyId::F3FrailtyRational: return x > 0.0 && std::isfinite(x);
    case FamilyId::GumbelRef: return x >= 1.0 && std::isfinite(x);
    case FamilyId::Independence: return true;
    }
    return false;
}

void require_param(FamilyId family, DependenceParam p) {
    if (!param_in_domain(family, p)) {
        throw DomainError(std::string(param_name(family)) + " out of domain " +
                          std::string(param_domain(family)));
    }
}

}  // namespace archcop
