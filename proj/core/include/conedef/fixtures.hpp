#pragma once

#include "conedef/cone.hpp"

namespace conedef {

/// Small named algebras used across tests, the self-test and the CLI demos.

/// sl2 tensored with Q[theta]/(theta^2), deg theta = 1: basis h,e,f in
/// degree 0 and h.th,e.th,f.th in degree 1; [x, y.th] = [x,y].th,
/// [x.th, y.th] = 0, d = 0.
Dgla sl2_theta();

/// Three-dimensional graded algebra a(0), x(1), z(2) with [a,x] = x,
/// [a,z] = 2z, [x,x] = 2z, d = 0.  The smallest fixture with a nonzero
/// self-bracket in odd degree.
Dgla grading_triple();

/// Heisenberg algebra p,q,z in degree 0: [p,q] = z central, d = 0.
/// Two-step nilpotent: all double brackets vanish.
Dgla heisenberg();

/// Hom*(V,V) of the two-term complex u(0) -> w(1), via matrix units.
Dgla end_two_term();

/// The inclusion sl2 -> sl2_theta as a graded map (degree-0 part).
GradedMap sl2_theta_inclusion();

struct ConeFixture {
  std::string name;
  Cone cone;
};

/// Five fixed morphism cones exercised by the bracket-identity checks:
/// identity on sl2, identity on grading_triple, the sl2 -> sl2_theta
/// inclusion, the zero morphism from a two-term abelian complex to
/// grading_triple, and the identity on end_two_term.
std::vector<ConeFixture> standard_cones();

} // namespace conedef
