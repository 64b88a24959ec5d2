#pragma once

#include "apnlab/bipoly.hpp"

namespace apnlab {

/// The three polynomial families attached to an odd exponent t, in the
/// affine chart z = 1:
///   f = x^t + y^t + 1 + (x+y+1)^t
///   w = (x+1)(y+1)(x+y),  g = f / w  (the division is exact)
///   h = ((x+1)^t + x^t + (y+1)^t + y^t) / ((x+y)(x+y+1))
struct CurveFamily {
  long long t = 0;
  BiPoly f, g, w, h;
};

/// Throws on even or out-of-range t; a failed division is an internal error
/// because the three linear factors always divide f.
CurveFamily build_curves(long long t);

/// Checks the chart identity linking h-style and g-style polynomials:
/// (x+1)^t + x^t + (y+1)^t + y^t == y^t * f(X, Y) with X=(x+1)/y, Y=x/y,
/// after clearing denominators symbolically.
bool transform_identity(long long t);

/// Zeros of g over GF(2^n)^2. distinct_only keeps a != b, a != 1, b != 1,
/// the affine trace of "distinct coordinates" once the third projective
/// coordinate is normalized to 1.
long long count_points(const CurveFamily& fam, int n, bool distinct_only,
                       unsigned workers = 1, int max_n = 16);
long long count_points(long long t, int n, bool distinct_only,
                       unsigned workers = 1, int max_n = 16);

/// True iff the homogenization of g has no singular projective point on the
/// line z = 0. Decided from the top two homogeneous components of g.
bool infinity_check(long long t);
bool infinity_check(const CurveFamily& fam);

}  // namespace apnlab
