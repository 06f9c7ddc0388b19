#include "invcs/cli/figures.hpp"

#include "invcs/errors.hpp"

namespace invcs::cli {

namespace {

// 201 points along a real axis, 101 x 101 over complex windows.
const RealGrid kUnitInterval{0.0, 1.0, 0.005};
const ComplexGrid kUnitSquare{{-1.0, 1.0, 0.02}, {-1.0, 1.0, 0.02}};
const ComplexGrid kDualViewport{{-3.0, 3.0, 0.06}, {-3.0, 3.0, 0.06}};
const ComplexGrid kSliceAt08{{0.8, 0.8, 1.0}, {-0.6, 0.6, 0.006}};

FamilyTemplate hydrogen_family(FamilyKind kind) {
  FamilyTemplate t;
  t.kind = kind;
  t.f_name = "hydrogen";
  t.series = kind == FamilyKind::inverse_state ? "inverse" : "dual";
  return t;
}

FamilyTemplate su11_family(FamilyKind kind, double kappa) {
  FamilyTemplate t;
  t.kind = kind;
  t.kappa = kappa;
  if (kind == FamilyKind::dual_inverse_state) t.f_name = "su11";
  t.series = "kappa=" + format_double(kappa);
  return t;
}

}  // namespace

std::string figure_caption(int id) {
  switch (id) {
    case 1: return "hydrogen-like inverse states: var_x, var_p vs real z";
    case 2: return "hydrogen-like dual states: var_x, var_p vs real z";
    case 3: return "hydrogen-like inverse states: Mandel Q over complex z, |z| < 1";
    case 4: return "hydrogen-like dual states: Mandel Q over complex z, |z| < 1";
    case 5: return "SU(1,1) inverse states: var_x, var_p vs real z, kappa = 0.5, 1, 1.5";
    case 6: return "SU(1,1) dual states: var_x, var_p vs real z, kappa = 0.5, 1, 1.5";
    case 7: return "SU(1,1) inverse states, kappa = 1/2: Mandel Q over complex z";
    case 8: return "SU(1,1) inverse states, kappa = 1/2: Mandel Q vs Im z at Re z = 0.8";
    case 9: return "SU(1,1) dual states, kappa = 1: Mandel Q over complex z";
    case 10: return "SU(1,1) dual states, kappa = 3: Mandel Q over complex z";
    default: throw InvalidParameter("figure id must be 1..10, got " + std::to_string(id));
  }
}

SweepSpec figure_spec(int id, const std::optional<Grid>& grid) {
  SweepSpec spec;
  const std::set<Observable> variances{Observable::var_x, Observable::var_p};
  const std::set<Observable> q_only{Observable::q};
  switch (id) {
    case 1:
    case 2:
      spec.families = {hydrogen_family(id == 1 ? FamilyKind::inverse_state
                                               : FamilyKind::dual_inverse_state)};
      spec.grid = kUnitInterval;
      spec.observables = variances;
      break;
    case 3:
    case 4:
      spec.families = {hydrogen_family(id == 3 ? FamilyKind::inverse_state
                                               : FamilyKind::dual_inverse_state)};
      spec.grid = kUnitSquare;
      spec.observables = q_only;
      break;
    case 5:
    case 6: {
      const auto kind = id == 5 ? FamilyKind::su11_inverse : FamilyKind::dual_inverse_state;
      for (double kappa : {0.5, 1.0, 1.5}) spec.families.push_back(su11_family(kind, kappa));
      spec.grid = kUnitInterval;
      spec.observables = variances;
      break;
    }
    case 7:
      spec.families = {su11_family(FamilyKind::su11_inverse, 0.5)};
      spec.grid = kUnitSquare;
      spec.observables = q_only;
      break;
    case 8:
      spec.families = {su11_family(FamilyKind::su11_inverse, 0.5)};
      spec.grid = kSliceAt08;
      spec.observables = q_only;
      break;
    case 9:
    case 10:
      spec.families = {su11_family(FamilyKind::dual_inverse_state, id == 9 ? 1.0 : 3.0)};
      spec.grid = kDualViewport;
      spec.observables = q_only;
      break;
    default:
      throw InvalidParameter("figure id must be 1..10, got " + std::to_string(id));
  }
  if (grid) spec.grid = *grid;
  return spec;
}

}  // namespace invcs::cli
