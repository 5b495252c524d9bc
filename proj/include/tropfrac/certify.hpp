#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tropfrac/spectral.hpp"

namespace tropfrac {

// lambda and witness are in the units of the original instance; the checker
// multiplies them by H.scale.
struct OptimalityCertificate {
  Rational lambda;
  MinStrategy tau;               // over game_at(H, lambda)
  std::optional<Vector> witness;  // y with U y <= V(lambda) y and y_{n+1} finite
};

struct UnboundednessCertificate {
  MaxStrategy sigma;  // over game_at(H, 0); sigma(m+1) is ignored when v is all -inf
};

struct CheckResult {
  bool accepted = false;
  std::string condition;  // "a", "b", "c", "avoid", "nonnegative" on rejection
  std::string reason;
};

struct CertificateSynthesisFailed : std::logic_error {
  using std::logic_error::logic_error;
};

// Throws std::invalid_argument on a malformed strategy or witness.
CheckResult check_optimality(const HomogeneousInstance& H, const OptimalityCertificate& cert);
CheckResult check_unboundedness(const HomogeneousInstance& H, const UnboundednessCertificate& cert);

// lambda_scaled is in H units and must be the minimal zero of phi.
OptimalityCertificate make_optimality_certificate(const HomogeneousInstance& H, const Rational& lambda_scaled);

// sigma from penalized_game; nullopt when node n+1 loses there.
std::optional<UnboundednessCertificate> make_unboundedness_certificate(const HomogeneousInstance& H);

}  // namespace tropfrac
