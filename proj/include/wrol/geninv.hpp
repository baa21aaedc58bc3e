#pragma once

// Moore-Penrose and group inverses.
//
// Both are computed from the rank factorization A = F G:
//   A†   = G* (G G*)^-1 (F* F)^-1 F*
//   A^#  = F (G F)^-2 G
// Over Q(i) the Moore-Penrose inverse always exists (x x* = 0 forces x = 0).
// Over F_p it may not; existence is exactly invertibility of F*F and GG*,
// i.e. rank(A) = rank(A*A) = rank(AA*).

#include <optional>

#include "wrol/matrix.hpp"

namespace wrol {

/// Flags for the four Penrose equations of a candidate B for A:
/// (1) A = ABA, (2) B = BAB, (3) (AB)* = AB, (4) (BA)* = BA.
struct PenroseReport {
  bool eq1_holds = false;
  bool eq2_holds = false;
  bool eq3_holds = false;
  bool eq4_holds = false;

  bool all() const { return eq1_holds && eq2_holds && eq3_holds && eq4_holds; }
  bool holds(int equation) const;
};

bool mp_exists(const Matrix& a);
/// Throws NoMPInverse when the inverse does not exist.
Matrix mp_inverse(const Matrix& a);
/// Returns a† if it exists. Cheaper than mp_exists followed by mp_inverse.
std::optional<Matrix> try_mp_inverse(const Matrix& a);

/// Throws NotGroupInvertible when rank(A^2) < rank(A), DimensionMismatch for non-square A.
Matrix group_inverse(const Matrix& a);
bool group_invertible(const Matrix& a);

/// (A*A)^# A*, an independent route to A†.
Matrix mp_via_star_group(const Matrix& a);

/// Throws DimensionMismatch unless B has the shape of A transposed.
PenroseReport penrose_residuals(const Matrix& a, const Matrix& b);

/// A = A A* B* and B* = A B B*; true exactly when B = A†.
bool prop21_check(const Matrix& a, const Matrix& b);

/// CA = AC and C A* = A* C.
bool commutes_with_pair(const Matrix& c, const Matrix& a);

}  // namespace wrol
