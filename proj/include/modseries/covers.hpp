#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "modseries/rational_function.hpp"
#include "modseries/report.hpp"

namespace modseries::covers {

/// Points in a fiber: a rational point, the point at infinity, or the roots
/// of an irreducible-over-the-rational-roots factor (each root counted once).
struct FiberPoints {
  std::variant<Rat, Polynomial> where;  // Polynomial == the roots of this factor
  bool at_infinity = false;
  long multiplicity = 1;
  long count = 1;  // number of geometric points described

  std::string describe() const;
};

struct RamificationProfile {
  ProjectivePoint fiber_point = ProjectivePoint(0L);
  std::vector<FiberPoints> points;

  long total() const;
  /// Sum of (e - 1) over the fiber.
  long ramification() const;
  /// Multiplicities with repetition, sorted descending (e.g. {3, 1}).
  std::vector<long> multiplicities() const;
};

enum class GroupKind { full, gamma0, gamma1 };

struct CongruenceInvariants {
  GroupKind kind;
  long level;
  long index;  // in PSL2(Z)
  long cusps;
  long nu2;
  long nu3;
  long genus;
};

class MissingBranchPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x -> (x+27)(x+243)^3 / x^3, the map X0(3) -> X(1) in Hauptmodul coordinates.
RationalFunction branch_map();

/// Fiber of f over y0 with multiplicities from square-free decomposition.
RamificationProfile ramification_profile(const RationalFunction& f, const ProjectivePoint& y0);

/// x -> -x/27, sending the cusps and elliptic point of X0(3) to inf, 0, 1.
ProjectivePoint scaling_map(const ProjectivePoint& x);

CongruenceInvariants congruence_invariants(GroupKind kind, long level);

/// Degree of X(3^n) -> X0(3) -> P^1 as an index ratio.
long cover_degree(long n);

/// Finite critical values of f: roots of Res_x(N'D - ND', N - yD) in y, as a
/// monic polynomial in y.
Polynomial critical_value_polynomial(const RationalFunction& f);

struct RiemannHurwitzResult {
  long degree;
  long total_ramification;
  long genus;
  VerificationReport report;
};

/// Checks 2g - 2 = -2 deg + sum (e - 1) over the given branch points with g = 0
/// (the source is P^1). Throws MissingBranchPoint when a critical value is
/// absent from `branch_points`.
RiemannHurwitzResult riemann_hurwitz_check(const RationalFunction& f,
                                           const std::vector<ProjectivePoint>& branch_points);

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& text);

}  // namespace modseries::covers
