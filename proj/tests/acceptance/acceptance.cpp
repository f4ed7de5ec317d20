// One pass/fail line per acceptance criterion, exit status 1 if any fails.

#include "generators.hpp"
#include "oracle.hpp"

#include "ldb/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace ldb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && problems_.size() < 4) problems_.push_back(what);
        if (!cond) ++failures_;
    }
    void note(const std::string& s) { notes_.push_back(s); }
    Outcome done() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
        if (failures_) {
            os << (notes_.empty() ? "" : "; ") << failures_ << " mismatch" << (failures_ > 1 ? "es" : "") << ": ";
            for (std::size_t i = 0; i < problems_.size(); ++i) os << (i ? " | " : "") << problems_[i];
        }
        return {failures_ == 0, os.str()};
    }

private:
    int failures_ = 0;
    std::vector<std::string> problems_;
    std::vector<std::string> notes_;
};

std::string mat_str(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

DendAlgebra semidirect_dual(const DendAlgebra& a) { return semidirect(a, dual_rep(regular_rep(a))); }

bool oracle_ld(const DendAlgebra& a) { return oracle::ld_holds(oracle::from(a.succ), oracle::from(a.prec)); }

bool oracle_s_zero(const DendAlgebra& a, const Tensor2& r) {
    return oracle::is_zero(oracle::s_tensor(oracle::from(a.succ), oracle::from(a.prec), oracle::from(r.coeff())));
}

Matrix block_span(std::size_t n, bool second) {
    Matrix s(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) s(second ? n + i : i, i) = 1;
    return s;
}

// Bialgebras found valid while evaluating the earlier criteria, reused by the double chain.
std::vector<Bialgebra>& valid_bialgebras() {
    static std::vector<Bialgebra> v;
    return v;
}

Outcome ac1() {
    Checker c;
    const DendAlgebra a24 = testgen::typed_abelian_circ_2d(), a25 = testgen::typed_affine_2d();
    c.expect(check_ld(a24).ok(), "abelian-circ example fails the identities");
    c.expect(check_ld(a25).ok(), "affine example fails the identities");
    c.expect(oracle_ld(a24) && oracle_ld(a25), "oracle rejects a worked example");
    c.expect(a24.circ().is_zero(), "associated product of the abelian-circ example is nonzero");
    BilinearOp want(2);
    want(0, 1, 1) = 1;
    want(1, 0, 1) = -1;
    c.expect(a25.circ() == want, "affine associated product differs from e1 o e2 = e2, e2 o e1 = -e2");
    return c.done();
}

Outcome ac2() {
    Checker c;
    int valid = 0;
    for (int p = -2; p <= 2; ++p)
        for (int q = -2; q <= 2; ++q) {
            const DendAlgebra a = catalog::scalar_1d(p, q);
            const bool ok = check_ld(a).ok();
            valid += ok;
            c.expect(ok == (p == -q), "p=" + std::to_string(p) + " q=" + std::to_string(q));
            c.expect(ok == oracle_ld(a), "oracle disagrees at p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    c.note("25 cases, " + std::to_string(valid) + " valid");
    return c.done();
}

Outcome ac3() {
    Checker c;
    const DendRep reg = regular_rep(testgen::typed_affine_2d());
    int accepted = 0, extra = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int cc = -2; cc <= 2; ++cc)
                for (int d = -2; d <= 2; ++d) {
                    const Matrix t{{a, b}, {cc, d}};
                    const bool ok = check_o_operator({t, reg, 0, {}});
                    const bool oracle_ok =
                        oracle::o_operator_holds(oracle::from(reg.alg.succ), oracle::from(reg.alg.prec),
                                                 oracle::from(t), 2, oracle::from(reg.lsucc), oracle::from(reg.rsucc),
                                                 oracle::from(reg.lprec), oracle::from(reg.rprec));
                    c.expect(ok == oracle_ok, "oracle disagrees at T=" + mat_str(t));
                    accepted += ok;
                    const bool rule = a == 0 && d == 0 && b * cc == 0;
                    if (ok != rule) ++extra;
                    c.expect(ok == rule, (ok ? "accepted, outside a=d=0,bc=0: T=" : "rejected: T=") + mat_str(t));
                }
    c.note("625 cases, " + std::to_string(accepted) + " O-operators, " + std::to_string(extra) +
           " outside the rule a=d=0, bc=0 (all satisfy T^2 = 0)");
    return c.done();
}

Outcome ac4() {
    Checker c;
    const DendAlgebra s = semidirect_dual(testgen::typed_affine_2d());
    constexpr std::size_t E1 = 0, E2 = 1, E1S = 2, E2S = 3;
    for (int t : {1, 2, -3}) {
        const std::string at = " at t=" + std::to_string(t);
        const Tensor2 r = testgen::affine_skew_solution(t);
        c.expect(r.is_skew(), "r not skew" + at);
        c.expect(check_ldybe(s, r) && oracle_s_zero(s, r), "S(r) != 0" + at);
        const CoProduct d = cobound(s, r);
        c.expect(d.dsucc[E1] == Tensor2::elementary(4, E1S, E2, -t), "D>(e1) != -t e1*(x)e2" + at);
        c.expect(d.dsucc[E2S] == Tensor2::elementary(4, E1S, E1S, -2 * t),
                 "D>(e2*) = " + d.dsucc[E2S](E1S, E1S).str() + " e1*(x)e1*, expected " + std::to_string(-2 * t) + at);
        c.expect(d.dprec[E2S] == Tensor2::elementary(4, E1S, E1S, 2 * t),
                 "D<(e2*) = " + d.dprec[E2S](E1S, E1S).str() + " e1*(x)e1*, expected " + std::to_string(2 * t) + at);
        c.expect(d.dprec[E1].is_zero() && d.dsucc[E2].is_zero() && d.dprec[E2].is_zero() && d.dsucc[E1S].is_zero() &&
                     d.dprec[E1S].is_zero(),
                 "a listed zero coproduct value is nonzero" + at);
        const Bialgebra b{s, d};
        if (bialgebra_full_report(b).ok()) valid_bialgebras().push_back(b);
    }
    return c.done();
}

Outcome ac5() {
    Checker c;
    testgen::Rng rng(5005);
    int solutions = 0, total = 0;
    auto sample = [&](const DendAlgebra& a) {
        const Tensor2 r = rng.skew(a.dim(), 2);
        const Bialgebra b{a, cobound(a, r)};
        const bool bialg = bialgebra_full_report(b).ok();
        const bool sol = check_ldybe(a, r);
        c.expect(sol == oracle_s_zero(a, r), "oracle disagrees on S(r)");
        c.expect(bialg == sol, std::string("bialgebra ") + (bialg ? "without" : "with") + " S(r) = 0");
        const Report br = check_bialgebra(b);
        c.expect(!br.has("B4") && !br.has("B5") && !br.has("B6"), "B4..B6 fail for a skew r");
        if (bialg) valid_bialgebras().push_back(b);
        solutions += sol;
        ++total;
    };
    for (int i = 0; i < 100; ++i) sample(i % 2 ? testgen::typed_abelian_circ_2d() : testgen::typed_affine_2d());
    for (int i = 0; i < 100; ++i) sample(rng.valid_algebra(3));
    c.note(std::to_string(total) + " skew r, " + std::to_string(solutions) + " solutions");
    return c.done();
}

Outcome ac6() {
    Checker c;
    const Bialgebra b{testgen::typed_affine_2d(), CoProduct(2)};
    const CanonicalR cr = canonical_r(b);
    valid_bialgebras().push_back(b);
    c.expect(cr.cls.tag == RClassTag::Factorizable, "classified " + std::string(to_string(cr.cls.tag)));
    c.expect(ldybe_tensor(cr.d, cr.r).is_zero() && oracle_s_zero(cr.d, cr.r), "S(r) != 0");
    c.expect(inverse(t_map(cr.r + cr.r.tau())).has_value(), "T_{r+tau(r)} singular");
    const PhiIso p = phi_iso(cr.d, cr.r);
    c.expect(p.bijective, "phi not bijective");
    c.expect(p.hom.ok() && check_hom(p.phi, p.source, p.target).ok(), "phi not a homomorphism");
    c.expect(p.target == direct_sum(cr.d, cr.d), "target is not the direct-sum algebra");
    return c.done();
}

Outcome ac7() {
    Checker c;
    testgen::Rng rng(7007);
    int instances = 0, solutions = 0;
    auto equivalences = [&](const DendAlgebra& a, const Tensor2& r, const std::string& what) {
        if (!check_invariant(a, r + r.tau())) {
            c.expect(false, what + ": r + tau(r) not invariant");
            return;
        }
        const STensors s = s_tensors(a, r);
        const bool z = s.S.is_zero();
        c.expect(s.S1.is_zero() == z && s.S3.is_zero() == z && s.S4.is_zero() == z &&
                     ldybe_tensor(a, r.tau()).is_zero() == z,
                 what + ": S, S1, S3, S4, S(tau r) do not vanish together");
        ++instances;
        solutions += z;
    };
    for (const DendAlgebra& a : {testgen::typed_abelian_circ_2d(), testgen::typed_affine_2d()}) {
        const CanonicalR cr = canonical_r({a, CoProduct(2)});
        equivalences(cr.d, cr.r, "canonical double");
    }
    const DendAlgebra semi = testgen::affine_semidirect_4d();
    {
        const CanonicalR cr = canonical_r({semi, cobound(semi, testgen::affine_skew_solution(1))});
        equivalences(cr.d, cr.r, "coboundary double");
    }
    for (int t : {1, 2, -3}) equivalences(semi, testgen::affine_skew_solution(t), "skew solution");
    const std::vector<DendAlgebra> hosts = {semi, testgen::typed_affine_2d(), testgen::typed_abelian_circ_2d()};
    for (int i = 0; i < 50; ++i) {
        const DendAlgebra& a = hosts[static_cast<std::size_t>(i % 3)];
        Tensor2 r = rng.uniform(0, 1) && a.dim() == 4 ? Scalar(rng.uniform(-2, 2)) * testgen::affine_skew_solution(1)
                                                      : rng.skew(a.dim(), 1);
        for (const Tensor2& v : testgen::invariant_symmetric_space(a)) r += Scalar(rng.uniform(-1, 1)) * v;
        equivalences(a, r, "invariant-part construction " + std::to_string(i));
    }
    const DendAlgebra host = direct_sum(testgen::typed_affine_2d(), catalog::scalar_1d(1, -1));
    int y3 = 0;
    for (int i = 0; i < 200; ++i) {
        const STensors s = s_tensors(host, rng.skew(3, 2));
        const bool ok = s.S1 == s.S.sigma12() && s.S3 == -s.S.sigma13() && s.S4 == -s.S.sigma132() &&
                        s.S2 == s.S1 - s.S4 && s.S5 == s.S - s.S3;
        c.expect(ok, "skew relations fail on sample " + std::to_string(i));
        y3 += ok;
    }
    c.note(std::to_string(instances) + " invariant instances (" + std::to_string(solutions) + " solutions); " +
           std::to_string(y3) + "/200 skew samples satisfy the S-tensor relations");
    return c.done();
}

Outcome ac8() {
    Checker c;
    const CanonicalR cr = canonical_r({testgen::typed_affine_2d(), CoProduct(2)});
    for (int lambda : {1, 2, -1}) {
        const std::string at = " at lambda=" + std::to_string(lambda);
        const QuadraticRB q = rb_from_factorizable(cr.d, cr.r, lambda);
        c.expect(check_quadratic_rb(q), "quadratic Rota-Baxter check fails" + at);
        c.expect(cr.r + cr.r.tau() == Scalar(-lambda) * r_omega(q.omega), "r + tau(r) != -lambda r_omega" + at);
        c.expect(factorizable_from_rb(q) == cr.r, "inverse construction does not return r" + at);
        const QuadraticRB tilde{q.alg, Scalar(-lambda) * Matrix::identity(q.p.rows()) - q.p, q.omega, q.weight};
        c.expect(check_quadratic_rb(tilde), "-lambda I - P fails" + at);
        c.expect(factorizable_from_rb(tilde) == cr.r.tau(), "variant does not map to tau(r)" + at);
    }
    return c.done();
}

Outcome ac9() {
    Checker c;
    for (const DendAlgebra& a : {testgen::typed_abelian_circ_2d(), testgen::typed_affine_2d()}) {
        const DendRep reg = regular_rep(a);
        c.expect(check_dend_rep(reg).ok(), "regular module fails R1..R9");
        c.expect(check_dend_rep_consequences(reg).ok(), "regular module fails R10..R11");
        const DendRep dual = dual_rep(reg);
        c.expect(check_dend_rep(dual).ok(), "dual module fails R1..R9");
        c.expect(oracle::rep_holds(oracle::from(a.succ), oracle::from(a.prec), oracle::from(dual.lsucc),
                                   oracle::from(dual.rsucc), oracle::from(dual.lprec), oracle::from(dual.rprec)),
                 "oracle rejects the dual module");
        for (const DendRep& r : {reg, dual}) {
            const auto vs = leibniz_rep_variants(r);
            c.expect(vs.size() == 4, "expected four Leibniz variants");
            for (const LeibnizRep& l : vs) c.expect(check_leibniz_rep(l).ok(), "Leibniz variant fails Lr1..Lr3");
        }
    }
    return c.done();
}

Outcome ac10() {
    Checker c;
    testgen::Rng rng(1010);
    const std::vector<MatchedPairLD> base = {double_matched_pair({testgen::typed_affine_2d(), CoProduct(2)}),
                                             double_matched_pair({testgen::typed_abelian_circ_2d(), CoProduct(2)})};
    for (const MatchedPairLD& mp : base) {
        const MatchedPairLDResult res = matched_pair_sum_ld(mp);
        c.expect(res.valid(), "unperturbed instance rejected");
        c.expect(matched_pair_sum_leibniz(collapse(mp)).valid(), "collapse of a valid instance fails");
    }
    int survivors = 0;
    for (int i = 0; i < 50; ++i) {
        MatchedPairLD mp = base[static_cast<std::size_t>(i % 2)];
        // Add a random nonzero matrix with entries in [-2, 2] to one action of one side.
        DendRep& rep = rng.uniform(0, 1) ? mp.rep12 : mp.rep21;
        std::vector<Matrix>* fams[] = {&rep.lsucc, &rep.rsucc, &rep.lprec, &rep.rprec};
        std::vector<Matrix>& fam = *fams[rng.uniform(0, 3)];
        Matrix m = rng.matrix(rep.mdim, rep.mdim, 2);
        if (m.is_zero()) m(0, 0) = 1;
        fam[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(fam.size()) - 1))] += m;
        const MatchedPairLDResult res = matched_pair_sum_ld(mp);
        c.expect(res.valid() == oracle_ld(res.sum), "oracle disagrees on perturbation " + std::to_string(i));
        if (res.valid()) {
            ++survivors;
            c.expect(false, "perturbation " + std::to_string(i) + " still gives a valid sum");
            c.expect(matched_pair_sum_leibniz(collapse(mp)).valid(), "collapse of a surviving perturbation fails");
        }
    }
    c.note("50 perturbations, " + std::to_string(survivors) + " still valid");
    return c.done();
}

BilinearOp kron(const BilinearOp& x, const BilinearOp& y) {
    const std::size_t n = x.dim(), m = y.dim();
    BilinearOp out(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b)
                        for (std::size_t cc = 0; cc < m; ++cc)
                            out(i * m + a, j * m + b, k * m + cc) = x(i, j, k) * y(a, b, cc);
    return out;
}

Outcome ac11() {
    Checker c;
    const DendAlgebra a = testgen::typed_affine_2d();
    const QuadriAlgebra q = quadri_tensor(a, a);
    const Report qr = check_quadri(q);
    std::string failing;
    for (const std::string& id : qr.failing()) failing += (failing.empty() ? "" : ",") + id;
    c.expect(qr.ok(), "tensor square fails " + failing);
    c.expect(qr.ok() == oracle::quadri_holds(oracle::from(q), false), "oracle disagrees on the tensor square");
    const DendAlgebra h = horizontal(q), v = vertical(q);
    const BilinearOp circ = a.circ();
    c.expect(h.succ == kron(a.succ, circ) && h.prec == kron(a.prec, circ), "horizontal products differ");
    c.expect(v.succ == kron(circ, a.succ) && v.prec == kron(circ, a.prec), "vertical products differ");
    c.expect(check_ld(h).ok(), "horizontal algebra fails the identities");
    c.expect(check_ld(v).ok(), "vertical algebra fails the identities");

    Matrix t(2, 2);
    t(1, 0) = 1;
    const QuadriAlgebra o = quadri_from_o_operator({t, regular_rep(a), 0, {}});
    QuadriAlgebra want(2);
    want.sw(0, 0, 1) = -1;
    want.ne(0, 0, 1) = 1;
    c.expect(o == want, "O-operator quadri entries differ from e1 sw e1 = -e2, e1 ne e1 = e2");
    c.expect(check_quadri(o).ok(), "O-operator quadri fails Lq1..Lq9");
    c.expect(check_hom(t, horizontal(o), a).ok(), "T is not a homomorphism from the horizontal algebra");
    return c.done();
}

Outcome ac12() {
    Checker c;
    int n_checked = 0;
    for (const Bialgebra& b : valid_bialgebras()) {
        const std::size_t n = b.alg.dim();
        const DendAlgebra d = double_of(b);
        const BilForm w = pairing_form(n);
        const bool ps = phase_space_check(d, w);
        const bool mt = manin_triple_check(d, w, block_span(n, false), block_span(n, true));
        const bool qd = check_quadratic_ld(d, w);
        c.expect(ps && mt && qd, "double of a dim-" + std::to_string(n) + " bialgebra: phase space " +
                                     (ps ? "ok" : "fails") + ", Manin " + (mt ? "ok" : "fails") + ", quadratic " +
                                     (qd ? "ok" : "fails"));
        ++n_checked;
    }
    c.expect(n_checked > 0, "no bialgebras collected");
    c.note(std::to_string(n_checked) + " doubles");
    return c.done();
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 worked examples", 1, ac1},
        {"AC2 one-dimensional sweep", 1, ac2},
        {"AC3 O-operator sweep", 5, ac3},
        {"AC4 skew solution coboundary", 1, ac4},
        {"AC5 coboundary bialgebras", 30, ac5},
        {"AC6 factorizable canonical r", 2, ac6},
        {"AC7 S-tensor equivalences", 30, ac7},
        {"AC8 Rota-Baxter round trip", 5, ac8},
        {"AC9 representations", 5, ac9},
        {"AC10 matched-pair perturbations", 30, ac10},
        {"AC11 quadri suite", 5, ac11},
        {"AC12 double chain", 10, ac12},
    };
    int failed = 0;
    for (const auto& [name, limit, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > limit) {
            o.pass = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
        }
        std::printf("%s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
