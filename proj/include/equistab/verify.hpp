#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equistab/stable_range.hpp"

namespace equistab {

struct VerifyRow {
  std::string name;
  long long samples = 0;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifyOptions {
  uint64_t seed = 1;
  /// Test hook: flips a sign inside the alpha-tilde formula used by the
  /// first identity suite, which must then fail.
  bool corrupt_alpha_tilde = false;
};

/// Join-coordinate identities: beta~ = alpha~ o (s',t'), the theta~ endpoint,
/// face and seam conditions, the restriction identities of alpha and beta,
/// the four J_Z/psi diagrams, associativity round trips, and the join-point
/// normalization edge cases.
std::vector<VerifyRow> verify_join_identities(const VerifyOptions& opt);

/// Suspension-side identities: eta endpoints, tau/sigma basepoint contracts,
/// and the h-homotopy endpoint factorizations.
std::vector<VerifyRow> verify_suspension_identities(const VerifyOptions& opt);

/// Group-engine invariants evaluated exhaustively on a concrete group.
std::vector<VerifyRow> verify_group_properties(const PermGroup& G,
                                               const SubgroupLattice& lattice,
                                               const VerifyOptions& opt);

/// Representation and family invariants on a concrete universe: character
/// integrality, projector idempotence, dimension monotonicity/additivity,
/// the join-isotropy dual route, filtration identities, and certificate
/// monotonicity at k = 0.
std::vector<VerifyRow> verify_universe_properties(const Universe& u,
                                                  const VerifyOptions& opt);

bool all_pass(const std::vector<VerifyRow>& rows);

}  // namespace equistab
