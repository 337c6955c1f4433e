#pragma once

#include <string>
#include <vector>

#include "homlie/structures.hpp"

namespace homlie::fixtures {

/// Jackson sl2, basis (e,h,f): [h,e]=2e, [e,f]=((1+q)/2)h, [h,f]=-2qf,
/// α = diag(q,q,q²). Multiplicative only at q=1.
inline RawHomStructure jackson_sl2(const Scalar& q) {
  auto space = make_space(Mat::diagonal({q, q, q * q}), {"e", "h", "f"});
  const Scalar half_1q = (1 + q) / 2;
  return RawHomStructure(space, bracket_from_entries(space, {
                                                                {0, 1, Vec{-2, 0, 0}},
                                                                {0, 2, Vec{0, half_1q, 0}},
                                                                {1, 2, Vec{0, 0, -2 * q}},
                                                            }));
}

/// [e1,e2]=a e1+b e3, [e1,e3]=c e2, [e2,e3]=d e1+2a e3, α = diag(1,2,2).
inline RawHomStructure threedim(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  auto space = make_space(Mat::diagonal({1, 2, 2}));
  return RawHomStructure(space, bracket_from_entries(space, {
                                                                {0, 1, Vec{a, 0, b}},
                                                                {0, 2, Vec{0, c, 0}},
                                                                {1, 2, Vec{d, 0, 2 * a}},
                                                            }));
}

/// The multiplicative member a=d=0, b=c=1.
inline HomLieAlgebra fixture_b() { return HomLieAlgebra(threedim(0, 1, 1, 0)); }

inline HomLieAlgebra abelian(std::size_t dim, const Mat& twist) {
  if (twist.rows() != dim) throw UsageError("abelian: twist has the wrong size");
  auto space = make_space(twist);
  return HomLieAlgebra(space, SkewCochain(space, space, 2));
}

inline HomLieAlgebra abelian(std::size_t dim) { return abelian(dim, Mat::identity(dim)); }

/// Classical sl2 in basis (e,h,f), identity twist.
inline HomLieAlgebra sl2() {
  auto space = make_space(Mat::identity(3), {"e", "h", "f"});
  return HomLieAlgebra(space, bracket_from_entries(space, {
                                                              {0, 1, Vec{-2, 0, 0}},
                                                              {0, 2, Vec{0, 1, 0}},
                                                              {1, 2, Vec{0, 0, -2}},
                                                          }));
}

/// sl2 twisted by the automorphism e↦2e, h↦h, f↦f/2.
inline HomLieAlgebra yau_sl2() {
  return yau_twist(sl2().mu(), Mat::diagonal({2, 1, Scalar(1, 2)}), {"e", "h", "f"});
}

/// Heisenberg [e1,e2]=e3 twisted by the unipotent automorphism e2↦e1+e2.
inline HomLieAlgebra yau_heisenberg() {
  auto space = make_space(Mat::identity(3));
  auto lie = bracket_from_entries(space, {{0, 1, Vec{0, 0, 1}}});
  return yau_twist(lie, Mat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
}

/// gl2 on (E11,E12,E21,E22) twisted by conjugation with diag(1,2).
inline HomLieAlgebra yau_gl2() {
  const std::vector<std::string> names{"E11", "E12", "E21", "E22"};
  auto space = make_space(Mat::identity(4), names);
  // [E11,E12]=E12, [E11,E21]=-E21, [E12,E21]=E11-E22, [E12,E22]=E12, [E21,E22]=-E21
  auto lie = bracket_from_entries(space, {
                                             {0, 1, Vec{0, 1, 0, 0}},
                                             {0, 2, Vec{0, 0, -1, 0}},
                                             {1, 2, Vec{1, 0, 0, -1}},
                                             {1, 3, Vec{0, 1, 0, 0}},
                                             {2, 3, Vec{0, 0, -1, 0}},
                                         });
  return yau_twist(lie, Mat::diagonal({1, Scalar(1, 2), 2, 1}), names);
}

}  // namespace homlie::fixtures
