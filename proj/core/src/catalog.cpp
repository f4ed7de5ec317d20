#include "ldb/catalog.hpp"

namespace ldb::catalog {

DendAlgebra abelian_circ_2d() {
    DendAlgebra a(2);
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.succ(1, 0, 1) = 1;
    a.prec(0, 1, 1) = -1;
    a.prec(1, 0, 1) = -1;
    return a;
}

DendAlgebra affine_2d() {
    DendAlgebra a(2);
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.prec(1, 0, 1) = -1;
    return a;
}

DendAlgebra scalar_1d(const Scalar& p, const Scalar& q) {
    DendAlgebra a(1);
    a.succ(0, 0, 0) = p;
    a.prec(0, 0, 0) = q;
    return a;
}

DendAlgebra zero(std::size_t n) { return DendAlgebra(n); }

}  // namespace ldb::catalog
