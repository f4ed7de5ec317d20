#pragma once

#include "ldb/algebra.hpp"

namespace ldb::catalog {

/// Two-dimensional algebra whose associated Leibniz product vanishes:
/// e1>e1 = e1, e1<e1 = -e1, e1>e2 = e2, e2>e1 = e2, e1<e2 = -e2, e2<e1 = -e2.
DendAlgebra abelian_circ_2d();

/// Two-dimensional algebra with e1>e1 = e1, e1<e1 = -e1, e1>e2 = e2, e2<e1 = -e2.
/// Its associated product is e1 o e2 = e2, e2 o e1 = -e2.
DendAlgebra affine_2d();

/// One-dimensional algebra e>e = p e, e<e = q e.
DendAlgebra scalar_1d(const Scalar& p, const Scalar& q);

DendAlgebra zero(std::size_t n);

}  // namespace ldb::catalog
