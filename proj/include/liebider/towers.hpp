#pragma once

#include <cstddef>
#include <vector>

#include "liebider/map_spaces.hpp"

namespace liebider {

constexpr std::size_t kDefaultDepthLimit = 16;

struct CenterTower {
  std::vector<LieAlgebra> stages;          // L_(1) = L, L_(2), ...
  std::vector<QuotientAlgebra> quotients;  // quotients[r]: stages[r] -> stages[r + 1]
  bool terminated = false;                 // last stage is centerless
  bool limit_hit = false;                  // stopped without reaching a centerless stage
  /// The tower reached an abelian stage; its quotient would be the zero
  /// algebra, which is centerless only vacuously, so the tower is reported
  /// as non-terminating.
  bool collapsed = false;
  std::vector<std::size_t> dims() const;
};

CenterTower center_tower(const LieAlgebra& l, std::size_t depth_limit = kDefaultDepthLimit);

struct ModuleTower {
  std::vector<LModule> stages;            // M_1 = M, M_2, ...
  std::vector<QuotientModule> quotients;  // quotients[r]: stages[r] -> stages[r + 1]
  bool terminated = false;                // Z_{M_r}(L') = 0 at the last stage
  bool limit_hit = false;
  std::vector<std::size_t> dims() const;
};

ModuleTower module_tower(const LModule& m, std::size_t depth_limit = kDefaultDepthLimit);

/// delta-bar(x-bar, y-bar) = pi(delta(s x-bar, s y-bar)) for a quotient by the
/// center. Checks delta(Z, L) inside Z first and throws Error otherwise.
BilinearMap project_biderivation(const BilinearMap& delta, const QuotientAlgebra& q);
/// f-tilde = pi o f.
LinearMap project_commuting(const LinearMap& f, const QuotientModule& q);

/// Optional window restrictions for the audits: block supports for the
/// solvers on L and on L/Z, and a mask of inner basis elements of L. When
/// the mask is given, every space is projected onto pairs of inner
/// elements before kernels and images are compared.
struct AuditOptions {
  BlockSupport source_support;
  BlockSupport quotient_support;
  std::vector<char> inner;
};

struct BiderivationAudit {
  std::size_t dim_source = 0;      // skew biderivations on L
  std::size_t dim_quotient = 0;    // skew biderivations on L/Z
  std::size_t dim_image = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_range_in_center = 0;
  std::size_t dim_trivial = 0;
  bool image_inside_quotient_space = false;
  bool kernel_is_range_in_center = false;
  bool kernel_is_trivial = false;
  bool rank_nullity = false;
  bool passed() const {
    return image_inside_quotient_space && kernel_is_range_in_center && kernel_is_trivial && rank_nullity;
  }
};

BiderivationAudit tower_audit_biderivations(const LieAlgebra& l, const AuditOptions& opt = {});

struct CommutingAudit {
  std::size_t dim_source = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_image = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_special_plus_central = 0;
  bool image_inside_quotient_space = false;
  bool kernel_is_special_plus_central = false;
  bool rank_nullity = false;
  bool passed() const { return image_inside_quotient_space && kernel_is_special_plus_central && rank_nullity; }
};

/// Audit of f -> f-tilde from commuting maps L -> M to L -> M / Z_M(L').
CommutingAudit tower_audit_commuting(const LModule& m);

/// Restriction of a skew biderivation on a centerless L to L' x L', in
/// coordinates of the canonical basis of L'. Throws when L has a center or
/// delta(L', L') leaves L'.
struct Restriction {
  Subalgebra derived;
  BilinearMap delta;
};
Restriction restrict_biderivation_to_derived(const BilinearMap& delta, const LieAlgebra& l);

struct RestrictionAudit {
  std::size_t dim_source = 0;
  std::size_t dim_kernel = 0;
  bool restrictions_are_biderivations = false;
  bool kernel_inside_special = false;
  bool passed() const { return restrictions_are_biderivations && kernel_inside_special; }
};

/// Checks on every basis element of the skew space that the restriction is a
/// skew biderivation of L', and that the kernel of restriction lies in the
/// special biderivations.
RestrictionAudit restriction_audit(const LieAlgebra& l);

}  // namespace liebider
