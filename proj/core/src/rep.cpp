#include "ldb/rep.hpp"

#include <array>
#include <functional>
#include <string>

namespace ldb {

Matrix dual_map(const Matrix& f) { return -f.transpose(); }

std::vector<Matrix> dual_maps(const std::vector<Matrix>& fs) {
    std::vector<Matrix> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(dual_map(f));
    return out;
}

std::vector<Matrix> sum_maps(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    if (a.size() != b.size()) throw ShapeError("action family sizes differ");
    std::vector<Matrix> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<Matrix> scale_maps(const Scalar& s, const std::vector<Matrix>& a) {
    std::vector<Matrix> out;
    out.reserve(a.size());
    for (const auto& m : a) out.push_back(s * m);
    return out;
}

namespace {

std::vector<Matrix> zero_family(std::size_t n, std::size_t m) { return std::vector<Matrix>(n, Matrix(m, m)); }

void check_family(const std::vector<Matrix>& f, std::size_t n, std::size_t m, const char* name) {
    if (f.size() != n) throw ShapeError(std::string(name) + ": expected one matrix per algebra basis element");
    for (const auto& x : f)
        if (x.rows() != m || x.cols() != m) throw ShapeError(std::string(name) + ": action matrix has wrong shape");
}

}  // namespace

LeibnizRep::LeibnizRep(LeibnizAlgebra a, std::size_t m)
    : alg(std::move(a)), mdim(m), l(zero_family(alg.dim(), m)), r(zero_family(alg.dim(), m)) {}

void LeibnizRep::validate_shape() const {
    check_family(l, alg.dim(), mdim, "l");
    check_family(r, alg.dim(), mdim, "r");
}

DendRep::DendRep(DendAlgebra a, std::size_t m)
    : alg(std::move(a)),
      mdim(m),
      lsucc(zero_family(alg.dim(), m)),
      rsucc(zero_family(alg.dim(), m)),
      lprec(zero_family(alg.dim(), m)),
      rprec(zero_family(alg.dim(), m)) {}

void DendRep::validate_shape() const {
    check_family(lsucc, alg.dim(), mdim, "lsucc");
    check_family(rsucc, alg.dim(), mdim, "rsucc");
    check_family(lprec, alg.dim(), mdim, "lprec");
    check_family(rprec, alg.dim(), mdim, "rprec");
}

DendRep regular_rep(const DendAlgebra& a) {
    DendRep rep;
    rep.alg = a;
    rep.mdim = a.dim();
    MulTable s(a.succ), p(a.prec);
    rep.lsucc = s.L;
    rep.rsucc = s.R;
    rep.lprec = p.L;
    rep.rprec = p.R;
    return rep;
}

Report check_leibniz_rep(const LeibnizRep& rep) {
    rep.validate_shape();
    const auto& circ = rep.alg.circ;
    const std::size_t n = rep.alg.dim();
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix& lx = rep.l[i];
            const Matrix& ly = rep.l[j];
            const Matrix& rx = rep.r[i];
            const Matrix& ry = rep.r[j];
            Vec xy = circ.basis_product(i, j);
            out.add_matrix("Lr1", {i, j}, combine(rep.l, xy) - (lx * ly - ly * lx));
            out.add_matrix("Lr2", {i, j}, lx * ry - ry * lx - combine(rep.r, xy));
            out.add_matrix("Lr3", {i, j}, ry * rx + ry * lx);
        }
    return out;
}

Report check_dend_rep(const DendRep& rep) {
    rep.validate_shape();
    const DendAlgebra& a = rep.alg;
    const std::size_t n = a.dim();
    const BilinearOp circ = a.circ();
    const auto lc = rep.lcirc();
    const auto rc = rep.rcirc();
    const auto& ls = rep.lsucc;
    const auto& rs = rep.rsucc;
    const auto& lp = rep.lprec;
    const auto& rp = rep.rprec;
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Variables renamed so that the first basis index is always x and the second y.
            Vec xcy = circ.basis_product(i, j);
            Vec xsy = a.succ.basis_product(i, j);
            Vec xpy = a.prec.basis_product(i, j);
            out.add_matrix("R1", {i, j}, combine(ls, xcy) - (ls[i] * ls[j] - ls[j] * ls[i]));
            out.add_matrix("R2", {i, j}, combine(rs, xsy) - ls[i] * rs[j] - rs[j] * rc[i]);
            out.add_matrix("R3", {i, j}, ls[i] * rs[j] - combine(rs, xsy) - rs[j] * lc[i]);
            out.add_matrix("R4", {i, j}, ls[i] * lp[j] - combine(lp, xsy) - lp[j] * lc[i]);
            out.add_matrix("R5", {i, j}, combine(rs, xpy) - rp[j] * rs[i] - lp[i] * rc[j]);
            out.add_matrix("R6", {i, j}, ls[i] * rp[j] - rp[j] * ls[i] - combine(rp, xcy));
            out.add_matrix("R7", {i, j}, lp[i] * lc[j] - combine(lp, xpy) - ls[j] * lp[i]);
            out.add_matrix("R8", {i, j}, combine(rp, xcy) - rp[j] * rp[i] - ls[i] * rp[j]);
            out.add_matrix("R9", {i, j}, lp[i] * rc[j] - rp[j] * lp[i] - combine(rs, xpy));
        }
    return out;
}

Report check_dend_rep_consequences(const DendRep& rep) {
    rep.validate_shape();
    const DendAlgebra& a = rep.alg;
    const std::size_t n = a.dim();
    const BilinearOp odot = a.odot();
    const auto rc = rep.rcirc();
    const auto lo = rep.lodot();
    const auto ro = rep.rodot();
    const auto lst = rep.lstar();
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xoy = odot.basis_product(i, j);
            out.add_matrix("R10", {i, j}, combine(rep.rsucc, xoy) - lo[i] * rep.rsucc[j] - ro[j] * rc[i]);
            out.add_matrix("R11a", {i, j}, combine(rep.lprec, xoy));
            out.add_matrix("R11b", {i, j}, rep.rprec[i] * lo[j]);
            if (i <= j) out.add_matrix("R11c", {i, j}, rep.rprec[i] * lst[j] + rep.rprec[j] * lst[i]);
        }
    return out;
}

DendRep dual_rep(const DendRep& rep) {
    if (!check_dend_rep(rep).ok()) throw ContractError("dual_rep: input is not a valid representation");
    DendRep d;
    d.alg = rep.alg;
    d.mdim = rep.mdim;
    d.lsucc = dual_maps(rep.lcirc());
    d.rsucc = dual_maps(rep.rodot());
    d.lprec = scale_maps(-1, dual_maps(rep.lprec));
    d.rprec = scale_maps(-1, dual_maps(rep.lstar()));
    return d;
}

std::vector<LeibnizRep> leibniz_rep_variants(const DendRep& rep) {
    if (!check_dend_rep(rep).ok()) throw ContractError("leibniz_rep_variants: input is not a valid representation");
    LeibnizAlgebra la = associated(rep.alg);
    auto make = [&](std::vector<Matrix> l, std::vector<Matrix> r) {
        LeibnizRep out;
        out.alg = la;
        out.mdim = rep.mdim;
        out.l = std::move(l);
        out.r = std::move(r);
        return out;
    };
    const auto lc = rep.lcirc();
    const auto rc = rep.rcirc();
    std::vector<LeibnizRep> out;
    out.push_back(make(rep.lsucc, rep.rprec));
    out.push_back(make(lc, rc));
    out.push_back(make(dual_maps(lc), scale_maps(-1, sum_maps(dual_maps(rc), dual_maps(lc)))));
    out.push_back(make(dual_maps(rep.lsucc), scale_maps(-1, dual_maps(rep.lodot()))));
    return out;
}

void MatchedPairLD::validate_shape() const {
    rep12.validate_shape();
    rep21.validate_shape();
    if (rep12.mdim != rep21.alg.dim() || rep21.mdim != rep12.alg.dim())
        throw ShapeError("matched pair: action modules must be the opposite algebras");
}

void MatchedPairLeib::validate_shape() const {
    rep12.validate_shape();
    rep21.validate_shape();
    if (rep12.mdim != rep21.alg.dim() || rep21.mdim != rep12.alg.dim())
        throw ShapeError("matched pair: action modules must be the opposite algebras");
}

namespace {

// One product on A1 (+) A2 from its four ingredients.
BilinearOp sum_op(const BilinearOp& op1, const BilinearOp& op2, const std::vector<Matrix>& l1,
                  const std::vector<Matrix>& r1, const std::vector<Matrix>& l2, const std::vector<Matrix>& r2) {
    const std::size_t n1 = op1.dim(), n2 = op2.dim();
    BilinearOp out(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) out(i, j, k) = op1(i, j, k);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) out(n1 + i, n1 + j, n1 + k) = op2(i, j, k);
    // x in A1, b in A2: x.b = r2(b)x + l1(x)b ; b.x = l2(b)x + r1(x)b
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t b = 0; b < n2; ++b) {
            for (std::size_t k = 0; k < n1; ++k) {
                out(x, n1 + b, k) += r2[b](k, x);
                out(n1 + b, x, k) += l2[b](k, x);
            }
            for (std::size_t k = 0; k < n2; ++k) {
                out(x, n1 + b, n1 + k) += l1[x](k, b);
                out(n1 + b, x, n1 + k) += r1[x](k, b);
            }
        }
    return out;
}

// Evaluation helpers for the listed compatibility conditions.
struct Side {
    const DendAlgebra& alg;  // the algebra x, y live in
    const DendRep& on;       // how this algebra acts on the other one
    BilinearOp circ;
    std::vector<Matrix> lc, rc;
    Side(const DendAlgebra& a, const DendRep& r) : alg(a), on(r), circ(a.circ()), lc(r.lcirc()), rc(r.rcirc()) {}
};

Matrix act(const std::vector<Matrix>& f, const Vec& v) { return combine(f, v); }

// The nine conditions with x, y in X and a in Y, written for (X, Y) = (A1, A2).
std::array<Vec, 9> ldmp_xya(const Side& X, const Side& Y, const Vec& x, const Vec& y, const Vec& a) {
    const auto& s1 = X.alg.succ;
    const auto& p1 = X.alg.prec;
    const auto& c1 = X.circ;
    const auto& ls1 = X.on.lsucc;
    const auto& rs1 = X.on.rsucc;
    const auto& lp1 = X.on.lprec;
    const auto& rp1 = X.on.rprec;
    const auto& lc1 = X.lc;
    const auto& rc1 = X.rc;
    const auto& ls2 = Y.on.lsucc;
    const auto& rs2 = Y.on.rsucc;
    const auto& lp2 = Y.on.lprec;
    const auto& rp2 = Y.on.rprec;
    const auto& lc2 = Y.lc;
    const auto& rc2 = Y.rc;
    std::array<Vec, 9> out;
    out[0] = act(rs2, a) * c1.apply(x, y) -
             (s1.apply(x, act(rs2, a) * y) - s1.apply(y, act(rs2, a) * x) + act(rs2, act(ls1, y) * a) * x -
              act(rs2, act(ls1, x) * a) * y);
    out[1] = s1.apply(act(rc2, a) * x, y) + act(ls2, act(lc1, x) * a) * y -
             (s1.apply(x, act(ls2, a) * y) + act(rs2, act(rs1, y) * a) * x - act(ls2, a) * s1.apply(x, y));
    out[2] = act(ls2, a) * s1.apply(x, y) - s1.apply(x, act(ls2, a) * y) - act(rs2, act(rs1, y) * a) * x -
             (s1.apply(act(lc2, a) * x, y) + act(ls2, act(rc1, x) * a) * y);
    out[3] = s1.apply(x, act(rp2, a) * y) + act(rs2, act(lp1, y) * a) * x - act(rp2, a) * s1.apply(x, y) -
             (p1.apply(y, act(rc2, a) * x) + act(rp2, act(lc1, x) * a) * y);
    out[4] = s1.apply(x, act(lp2, a) * y) + act(rs2, act(rp1, y) * a) * x - p1.apply(act(rs2, a) * x, y) -
             act(lp2, act(ls1, x) * a) * y - act(lp2, a) * c1.apply(x, y);
    out[5] = act(ls2, a) * p1.apply(x, y) - p1.apply(act(ls2, a) * x, y) - act(lp2, act(rs1, x) * a) * y -
             (p1.apply(x, act(lc2, a) * y) + act(rp2, act(rc1, y) * a) * x);
    out[6] = p1.apply(x, act(rc2, a) * y) + act(rp2, act(lc1, y) * a) * x -
             (act(rp2, a) * p1.apply(x, y) + s1.apply(y, act(rp2, a) * x) + act(rs2, act(lp1, x) * a) * y);
    out[7] = p1.apply(x, act(lc2, a) * y) + act(rp2, act(rc1, y) * a) * x -
             (p1.apply(act(rp2, a) * x, y) + act(lp2, act(lp1, x) * a) * y + act(ls2, a) * p1.apply(x, y));
    out[8] = p1.apply(act(lp2, a) * x, y) + act(lp2, act(rp1, x) * a) * y + s1.apply(x, act(lp2, a) * y) +
             act(rs2, act(rp1, y) * a) * x - act(lp2, a) * c1.apply(x, y);
    return out;
}

void ldmp_conditions(Report& rep, const Side& X, const Side& Y, const std::array<int, 9>& labels, bool swapped) {
    const std::size_t nx = X.alg.dim(), ny = Y.alg.dim();
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            for (std::size_t k = 0; k < ny; ++k) {
                auto res = ldmp_xya(X, Y, basis_vec(nx, i), basis_vec(nx, j), basis_vec(ny, k));
                // Indices are reported in the A1 (+) A2 numbering.
                std::vector<std::size_t> idx = swapped ? std::vector<std::size_t>{ny + i, ny + j, k}
                                                       : std::vector<std::size_t>{i, j, nx + k};
                for (int c = 0; c < 9; ++c) rep.add("LDMP" + std::to_string(labels[c]), idx, res[c]);
            }
}

void prefix_into(Report& dst, const Report& src, const std::string& prefix) {
    for (const auto& v : src.violations()) dst.add(prefix + v.identity, v.indices, v.residual);
}

}  // namespace

DendAlgebra ld_sum(const MatchedPairLD& mp) {
    mp.validate_shape();
    const auto& r1 = mp.rep12;
    const auto& r2 = mp.rep21;
    return {sum_op(mp.a1().succ, mp.a2().succ, r1.lsucc, r1.rsucc, r2.lsucc, r2.rsucc),
            sum_op(mp.a1().prec, mp.a2().prec, r1.lprec, r1.rprec, r2.lprec, r2.rprec)};
}

LeibnizAlgebra leibniz_sum(const MatchedPairLeib& mp) {
    mp.validate_shape();
    return LeibnizAlgebra(sum_op(mp.a().circ, mp.b().circ, mp.rep12.l, mp.rep12.r, mp.rep21.l, mp.rep21.r));
}

MatchedPairLDResult matched_pair_sum_ld(const MatchedPairLD& mp) {
    MatchedPairLDResult out;
    out.sum = ld_sum(mp);
    out.axioms = check_ld(out.sum);
    prefix_into(out.reps, check_dend_rep(mp.rep12), "rep12:");
    prefix_into(out.reps, check_dend_rep(mp.rep21), "rep21:");
    Side s1(mp.a1(), mp.rep12), s2(mp.a2(), mp.rep21);
    ldmp_conditions(out.conditions, s1, s2, {1, 2, 3, 7, 8, 9, 13, 14, 15}, false);
    ldmp_conditions(out.conditions, s2, s1, {4, 5, 6, 10, 11, 12, 16, 17, 18}, true);
    return out;
}

MatchedPairLeibResult matched_pair_sum_leibniz(const MatchedPairLeib& mp) {
    MatchedPairLeibResult out;
    out.sum = leibniz_sum(mp);
    out.axioms = check_leibniz(out.sum);
    prefix_into(out.reps, check_leibniz_rep(mp.rep12), "rep12:");
    prefix_into(out.reps, check_leibniz_rep(mp.rep21), "rep21:");
    // Slot patterns with A = first summand, B = second: (x,y,a) (x,a,y) (a,x,y) (a,b,x) (a,x,b) (x,a,b).
    const std::size_t n = mp.a().dim();
    for (const auto& v : out.axioms.violations()) {
        const bool x_b = v.indices[0] >= n, y_b = v.indices[1] >= n, z_b = v.indices[2] >= n;
        int pattern = 0;
        if (!x_b && !y_b && z_b) pattern = 1;
        else if (!x_b && y_b && !z_b) pattern = 2;
        else if (x_b && !y_b && !z_b) pattern = 3;
        else if (x_b && y_b && !z_b) pattern = 4;
        else if (x_b && !y_b && z_b) pattern = 5;
        else if (!x_b && y_b && z_b) pattern = 6;
        if (pattern) out.conditions.add("LeibMP" + std::to_string(pattern), v.indices, v.residual);
    }
    return out;
}

MatchedPairLeib collapse(const MatchedPairLD& mp) {
    mp.validate_shape();
    auto make = [](const DendRep& r) {
        LeibnizRep out;
        out.alg = associated(r.alg);
        out.mdim = r.mdim;
        out.l = r.lcirc();
        out.r = r.rcirc();
        return out;
    };
    return {make(mp.rep12), make(mp.rep21)};
}

DendAlgebra semidirect(const DendAlgebra& a, const DendRep& rep) {
    if (!(rep.alg == a)) throw ContractError("semidirect: representation is over a different algebra");
    return semidirect(rep, DendAlgebra(rep.mdim));
}

DendAlgebra semidirect(const DendRep& rep, const DendAlgebra& v) {
    if (v.dim() != rep.mdim) throw ShapeError("semidirect: module dimension mismatch");
    MatchedPairLD mp{rep, DendRep(v, rep.alg.dim())};
    return ld_sum(mp);
}

bool is_a_ld_algebra(const DendRep& rep, const DendAlgebra& v) {
    return check_dend_rep(rep).ok() && check_ld(v).ok() && check_ld(semidirect(rep, v)).ok();
}

Report a_ld_conditions(const DendRep& rep, const DendAlgebra& v) {
    rep.validate_shape();
    if (v.dim() != rep.mdim) throw ShapeError("a_ld_conditions: module dimension mismatch");
    const std::size_t n = rep.alg.dim(), m = v.dim();
    const auto lc = rep.lcirc();
    const auto rc = rep.rcirc();
    const BilinearOp vc = v.circ();
    const auto& s2 = v.succ;
    const auto& p2 = v.prec;
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Vec a = basis_vec(m, j), b = basis_vec(m, k);
                const Matrix& ls = rep.lsucc[i];
                const Matrix& rs = rep.rsucc[i];
                const Matrix& lp = rep.lprec[i];
                const Matrix& rp = rep.rprec[i];
                std::vector<std::size_t> idx{i, n + j, n + k};
                Vec t1 = s2.apply(rc[i] * a, b);
                Vec t2 = s2.apply(a, ls * b) - ls * s2.apply(a, b);
                Vec t3 = -s2.apply(lc[i] * a, b);
                out.add("ALD1", idx, t1 - t2);
                out.add("ALD2", idx, t2 - t3);
                out.add("ALD3", idx, rs * vc.apply(a, b) - (s2.apply(a, rs * b) - s2.apply(b, rs * a)));
                out.add("ALD4", idx, s2.apply(a, rp * b) - rp * s2.apply(a, b) - p2.apply(b, rc[i] * a));
                out.add("ALD5", idx, s2.apply(a, lp * b) - p2.apply(rs * a, b) - lp * vc.apply(a, b));
                out.add("ALD6", idx, ls * p2.apply(a, b) - p2.apply(ls * a, b) - p2.apply(a, lc[i] * b));
                out.add("ALD7", idx, p2.apply(a, rc[i] * b) - (rp * p2.apply(a, b) + s2.apply(b, rp * a)));
                out.add("ALD8", idx, p2.apply(a, lc[i] * b) - (p2.apply(rp * a, b) + ls * p2.apply(a, b)));
                out.add("ALD9", idx, p2.apply(lp * a, b) + s2.apply(a, lp * b) - lp * vc.apply(a, b));
            }
    return out;
}

}  // namespace ldb
