#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "o2sep/invariants.hpp"
#include "o2sep/invspace.hpp"
#include "o2sep/orbits.hpp"

namespace o2sep {

/// Evaluations of an ordered invariant set at one point, as canonical
/// element indices. Constant on orbits because every member is invariant.
using Fingerprint = std::vector<std::uint8_t>;

Fingerprint fingerprint_of(const InvariantSet& S, const PointTuple& v);

/// A pair of distinct orbits that some fingerprint fails to distinguish.
/// Both points are canonical representatives; distinct_orbits_checked
/// records a confirming run of the direct orbit oracle.
struct CollisionWitness {
  PointTuple u, v;
  OrbitType u_type = OrbitType::Zero, v_type = OrbitType::Zero;
  bool distinct_orbits_checked = false;
};

struct RemovalWitness {
  std::string removed;  // member label whose removal causes the collision
  CollisionWitness pair;
};

struct SeparationReport {
  unsigned q = 0, m = 0;
  std::string set_name;
  std::size_t set_size = 0;
  std::uint64_t kappa = 0;
  bool separating = false;
  std::optional<CollisionWitness> collision;  // when not separating
  std::optional<bool> minimal;                // set by the minimality check
  std::vector<RemovalWitness> removals;       // one per member when minimal
  std::optional<std::string> redundant_member;  // removal that stayed separating
  double runtime_ms = 0;
};

/// Separation certificate: evaluates the set on all kappa orbit
/// representatives and checks the fingerprints are pairwise distinct. The
/// returned witness (when not separating) is the first collision in the
/// sorted fingerprint table. Throws NonInvariantMember when some member
/// moves under a generator.
SeparationReport is_separating(const InvariantSet& S);

/// Minimality certificate on top of is_separating: every single-member
/// removal must produce a collision, recorded per member.
/// Throws NotSeparating when S itself does not separate.
SeparationReport is_minimal(const InvariantSet& S);

struct BetaDegree {
  unsigned d = 0;
  unsigned dim = 0;             // dimension of the degree-d invariant space
  unsigned cumulative_dim = 0;  // total fingerprint length through degree d
  bool injective = false;
  std::optional<CollisionWitness> witness;  // collision at this degree
};

struct BetaReport {
  unsigned q = 0, m = 0;
  unsigned beta = 0;  // least degree whose cumulative fingerprints separate
  std::vector<BetaDegree> degrees;
  double runtime_ms = 0;
};

/// Least d <= d_max such that the invariants of degree <= d (via the graded
/// bases) separate the orbits. Throws NotFoundWithinBudget past d_max.
BetaReport beta_sep(unsigned m, const FieldSpec& f, unsigned d_max,
                    std::optional<FieldElement> tau_alpha = {});

struct SigmaReport {
  unsigned q = 0, max_m = 0;
  bool t1_expansion_separates_at_2 = true;   // must come out false
  std::optional<CollisionWitness> t1_witness;
  std::vector<std::pair<unsigned, bool>> base2_expansion_separating;  // m -> result
  bool confirmed = false;  // value 2 verified through max_m
  double runtime_ms = 0;
};

/// Certifies, up to max_m: the arity-1 set expands to a non-separating set
/// already at m = 2, while the arity-2 set expands to separating sets for
/// every 2 <= m <= max_m. Together: the least expanding base arity is 2.
SigmaReport sigma_sep_bounded(const Field& f, unsigned max_m);

struct GammaReport {
  unsigned q = 0, m = 0;
  std::uint64_t kappa = 0;
  unsigned gamma = 0;  // least g with q^g >= kappa
  unsigned two_m = 0;
  bool bound_ok = false;  // gamma <= 2m
  std::string pool_name;
  bool pool_checked = false;
  bool no_small_subset = true;  // no separating subset of size < gamma in the pool
  std::vector<std::string> violating_subset;
  double runtime_ms = 0;
};

/// gamma = ceil(log_q kappa) by exact integer arithmetic, the bound
/// gamma <= 2m, and (when a pool is supplied) an exhaustive confirmation
/// that no subset of the pool smaller than gamma separates.
GammaReport gamma_sep_check(unsigned m, const FieldSpec& f, const InvariantSet* pool = nullptr);

struct SubsetSearchResult {
  unsigned q = 0, m = 0;
  std::string pool_name;
  std::size_t size_cap = 0;
  bool found = false;
  std::vector<std::size_t> indices;  // into pool.members
  std::vector<std::string> labels;
  double runtime_ms = 0;
};

/// Lexicographically-first smallest separating subset of the pool, scanning
/// sizes 1..size_cap. Throws PoolTooLarge past 24 members.
SubsetSearchResult min_separating_subset(const InvariantSet& pool, std::size_t size_cap);

}  // namespace o2sep
