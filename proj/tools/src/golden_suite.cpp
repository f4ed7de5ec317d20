#include "golden_suite.hpp"

#include "ldb/bialgebra.hpp"
#include "ldb/catalog.hpp"
#include "ldb/quadri.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ldwb {

using namespace ldb;

namespace {

// Basis positions in A (+) A* for two-dimensional A.
constexpr std::size_t E1 = 0, E2 = 1, E1S = 2, E2S = 3;

class Expect {
public:
    void operator()(bool cond, std::string what) {
        if (!cond) problems_.push_back(std::move(what));
    }
    void report(const Report& r, const std::string& what) {
        if (r.ok()) return;
        std::ostringstream os;
        os << what << ": " << r.violations().front();
        if (r.violations().size() > 1) os << " (+" << r.violations().size() - 1 << " more)";
        problems_.push_back(os.str());
    }
    std::vector<std::string> take() { return std::move(problems_); }

private:
    std::vector<std::string> problems_;
};

std::string show(const Scalar& s) { return s.str(); }

BilinearOp kron(const BilinearOp& x, const BilinearOp& y) {
    const std::size_t n = x.dim(), m = y.dim();
    BilinearOp out(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (x(i, j, k).is_zero()) continue;
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b)
                        for (std::size_t c = 0; c < m; ++c)
                            out(i * m + a, j * m + b, k * m + c) = x(i, j, k) * y(a, b, c);
            }
    return out;
}

DendAlgebra semidirect_dual(const DendAlgebra& a) { return semidirect(a, dual_rep(regular_rep(a))); }

Tensor2 skew_solution(const Scalar& t) {
    Tensor2 r(4);
    r(E2, E1S) = t;
    r(E1S, E2) = -t;
    return r;
}

CanonicalR affine_canonical(const GoldenInputs& in) {
    return canonical_r({in.affine_2d, CoProduct(in.affine_2d.dim())});
}

std::vector<std::string> identities(const DendAlgebra& a) {
    Expect e;
    e.report(check_ld(a), "Ld");
    return e.take();
}

std::vector<GoldenCase> build_cases() {
    std::vector<GoldenCase> cs;

    cs.push_back({"abelian-circ-2d: identities hold", [](const GoldenInputs& in) { return identities(in.abelian_circ_2d); }});
    cs.push_back({"abelian-circ-2d: associated product vanishes", [](const GoldenInputs& in) {
                      Expect e;
                      e(in.abelian_circ_2d.circ().is_zero(), "associated product is nonzero");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: identities hold", [](const GoldenInputs& in) { return identities(in.affine_2d); }});
    cs.push_back({"affine-2d: associated product e1 o e2 = e2, e2 o e1 = -e2", [](const GoldenInputs& in) {
                      BilinearOp want(2);
                      want(0, 1, 1) = 1;
                      want(1, 0, 1) = -1;
                      Expect e;
                      e(in.affine_2d.circ() == want, "associated product differs");
                      return e.take();
                  }});
    cs.push_back({"scalar-1d: valid exactly when p = -q", [](const GoldenInputs&) {
                      Expect e;
                      for (int p = -2; p <= 2; ++p)
                          for (int q = -2; q <= 2; ++q) {
                              const bool valid = check_ld(catalog::scalar_1d(p, q)).ok();
                              e(valid == (p == -q), "p=" + std::to_string(p) + " q=" + std::to_string(q));
                          }
                      return e.take();
                  }});
    cs.push_back({"affine-2d: regular representation", [](const GoldenInputs& in) {
                      Expect e;
                      e.report(check_dend_rep(regular_rep(in.affine_2d)), "regular module");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: semidirect product with the dual regular module", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      Expect e;
                      e(s.prec(E1, E1S, E1S) == -1, "e1 < e1* != -e1*");
                      e(s.prec(E2, E2S, E1S) == -1, "e2 < e2* != -e1*");
                      e(s.succ(E1, E2S, E2S) == -1, "e1 > e2* != -e2*");
                      e.report(check_ld(s), "semidirect");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: double with zero coproduct matches the semidirect table", [](const GoldenInputs& in) {
                      const DendAlgebra d = double_of({in.affine_2d, CoProduct(2)});
                      Expect e;
                      e(d.prec(E2, E2S, E1S) == -1, "e2 < e2* != -e1*");
                      e(d == semidirect_dual(in.affine_2d), "double differs from the semidirect product");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: O-operators on the regular module are a=d=0, bc=0", [](const GoldenInputs& in) {
                      Expect e;
                      const DendRep reg = regular_rep(in.affine_2d);
                      for (int a = -2; a <= 2; ++a)
                          for (int b = -2; b <= 2; ++b)
                              for (int c = -2; c <= 2; ++c)
                                  for (int d = -2; d <= 2; ++d) {
                                      const Matrix t{{a, b}, {c, d}};
                                      const bool ok = check_o_operator({t, reg, 0, {}});
                                      if (ok != (a == 0 && d == 0 && b * c == 0))
                                          e(false, "T=[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                                                       std::to_string(c) + "," + std::to_string(d) + "]]");
                                  }
                      return e.take();
                  }});
    cs.push_back({"affine-2d: skew solution t(e2 (x) e1* - e1* (x) e2)", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      Expect e;
                      for (int t : {1, 2, -3}) {
                          const Tensor2 r = skew_solution(t);
                          e(r.is_skew(), "not skew at t=" + std::to_string(t));
                          e(check_ldybe(s, r), "S(r) != 0 at t=" + std::to_string(t));
                      }
                      return e.take();
                  }});
    cs.push_back({"affine-2d: O-operator e1 -> e2 gives the skew solution", [](const GoldenInputs& in) {
                      Matrix t(2, 2);
                      t(E2, E1) = 1;
                      const OSolution sol = solution_from_o_operator({t, regular_rep(in.affine_2d), 0, {}});
                      Expect e;
                      e(sol.r == skew_solution(1), "r != e2 (x) e1* - e1* (x) e2");
                      e(check_ldybe(sol.hat, sol.r), "S(r) != 0");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: coboundary values of the skew solution", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      Expect e;
                      for (int t : {1, 2, -3}) {
                          const CoProduct c = cobound(s, skew_solution(t));
                          const std::string at = " at t=" + std::to_string(t);
                          auto entry = [&](const Tensor2& v, std::size_t i, std::size_t j) { return show(v(i, j)); };
                          e(c.dsucc[E1] == Tensor2::elementary(4, E1S, E2, -t),
                            "D>(e1) != -t e1* (x) e2" + at + " (coefficient " + entry(c.dsucc[E1], E1S, E2) + ")");
                          e(c.dsucc[E2S] == Tensor2::elementary(4, E1S, E1S, -2 * t),
                            "D>(e2*) != -2t e1* (x) e1*" + at + " (coefficient " + entry(c.dsucc[E2S], E1S, E1S) + ")");
                          e(c.dprec[E2S] == Tensor2::elementary(4, E1S, E1S, 2 * t),
                            "D<(e2*) != 2t e1* (x) e1*" + at + " (coefficient " + entry(c.dprec[E2S], E1S, E1S) + ")");
                          e(c.dprec[E1].is_zero() && c.dsucc[E2].is_zero() && c.dprec[E2].is_zero() &&
                                c.dsucc[E1S].is_zero() && c.dprec[E1S].is_zero(),
                            "a listed zero value is nonzero" + at);
                      }
                      return e.take();
                  }});
    cs.push_back({"affine-2d: coboundary of the skew solution is a bialgebra", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      Expect e;
                      e.report(bialgebra_full_report({s, cobound(s, skew_solution(1))}), "bialgebra");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: skew solution is triangular", [](const GoldenInputs& in) {
                      Expect e;
                      const RClass c = classify_r(semidirect_dual(in.affine_2d), skew_solution(1));
                      e(c.tag == RClassTag::Triangular, "classified " + std::string(to_string(c.tag)));
                      return e.take();
                  }});
    cs.push_back({"affine-2d: T_r of the skew solution is an O-operator", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      const Tensor2 r = skew_solution(1);
                      Expect e;
                      e(check_o_operator({t_map(r), dual_rep(regular_rep(s)), 0, {}}), "weight 0 check fails");
                      e(check_relative_rb_from_r(s, r), "relative Rota-Baxter check fails");
                      return e.take();
                  }});
    cs.push_back({"random skew tensors: S-tensor relations", [](const GoldenInputs& in) {
                      const DendAlgebra host = direct_sum(in.affine_2d, catalog::scalar_1d(1, -1));
                      std::mt19937 gen(20240611);
                      std::uniform_int_distribution<int> pick(-2, 2);
                      Expect e;
                      for (int it = 0; it < 200; ++it) {
                          Tensor2 r(3);
                          for (std::size_t i = 0; i < 3; ++i)
                              for (std::size_t j = i + 1; j < 3; ++j) {
                                  r(i, j) = pick(gen);
                                  r(j, i) = -r(i, j);
                              }
                          const STensors s = s_tensors(host, r);
                          const std::string at = " (sample " + std::to_string(it) + ")";
                          e(s.S1 == s.S.sigma12(), "S1 != sigma12 S" + at);
                          e(s.S3 == -s.S.sigma13(), "S3 != -sigma13 S" + at);
                          e(s.S4 == -s.S.sigma132(), "S4 != -sigma132 S" + at);
                          e(s.S2 == s.S1 - s.S4, "S2 != S1 - S4" + at);
                          e(s.S5 == s.S - s.S3, "S5 != S - S3" + at);
                      }
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: canonical r three-term sum vanishes", [](const GoldenInputs& in) {
                      const CanonicalR cr = affine_canonical(in);
                      const DerivedOps d = derive_ops(cr.d);
                      const Tensor3 s = place_product(d.circ, cr.r, cr.r, {2, 3}, {1, 3}) -
                                        place_product(d.odot, cr.r, cr.r, {1, 2}, {2, 3}) -
                                        place_product(cr.d.succ, cr.r, cr.r, {1, 2}, {1, 3});
                      Expect e;
                      e(s == ldybe_tensor(cr.d, cr.r), "placed sum differs from S(r)");
                      e(s.is_zero(), "S(r) != 0");
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: canonical r is factorizable", [](const GoldenInputs& in) {
                      const CanonicalR cr = affine_canonical(in);
                      Expect e;
                      e(cr.cls.tag == RClassTag::Factorizable, "classified " + std::string(to_string(cr.cls.tag)));
                      e(check_invariant(cr.d, cr.r + cr.r.tau()), "r + tau(r) not invariant");
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: T_r(zeta, x) = zeta and T_tau(r) projects onto A", [](const GoldenInputs& in) {
                      const CanonicalR cr = affine_canonical(in);
                      const std::size_t n = in.affine_2d.dim();
                      Matrix want_r(2 * n, 2 * n), want_tau(2 * n, 2 * n);
                      for (std::size_t i = 0; i < n; ++i) {
                          want_r(n + i, i) = 1;
                          want_tau(i, n + i) = 1;
                      }
                      Expect e;
                      e(t_map(cr.r) == want_r, "T_r(zeta, x) != zeta");
                      // The sign of the A component depends on the pairing convention; both readings are accepted.
                      const Matrix tau = t_map(cr.r.tau());
                      e(tau == want_tau || tau == -want_tau, "T_tau(r)(zeta, x) != +-x");
                      e(inverse(t_map(cr.r + cr.r.tau())).has_value(), "T_{r + tau(r)} not invertible");
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: T_r and -T_tau(r) are homomorphisms", [](const GoldenInputs& in) {
                      Expect e;
                      const CanonicalR cr = affine_canonical(in);
                      const DendAlgebra dual = dual_mult_from_r(cr.d, cr.r);
                      e.report(check_hom(t_map(cr.r), dual, cr.d), "T_r");
                      e.report(check_hom(-t_map(cr.r.tau()), dual, cr.d), "-T_tau(r)");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: Rota-Baxter grid closed under -lambda I - P", [](const GoldenInputs& in) {
                      Expect e;
                      const DendAlgebra& a = in.affine_2d;
                      for (int lambda : {1, -1}) {
                          int found = 0;
                          for (int p00 = -1; p00 <= 1; ++p00)
                              for (int p01 = -1; p01 <= 1; ++p01)
                                  for (int p10 = -1; p10 <= 1; ++p10)
                                      for (int p11 = -1; p11 <= 1; ++p11) {
                                          const Matrix p{{p00, p01}, {p10, p11}};
                                          if (!check_rota_baxter(a, p, lambda)) continue;
                                          ++found;
                                          const Matrix tilde = Scalar(-lambda) * Matrix::identity(2) - p;
                                          e(check_rota_baxter(a, tilde, lambda), "tilde fails");
                                      }
                          e(found > 0, "no Rota-Baxter operator on the grid at weight " + std::to_string(lambda));
                      }
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: quadratic Rota-Baxter variant -lambda I - P", [](const GoldenInputs& in) {
                      Expect e;
                      const CanonicalR cr = affine_canonical(in);
                      for (int lambda : {1, 2, -1}) {
                          const std::string at = " at lambda=" + std::to_string(lambda);
                          const QuadraticRB q = rb_from_factorizable(cr.d, cr.r, lambda);
                          const QuadraticRB tilde{q.alg, Scalar(-lambda) * Matrix::identity(q.p.rows()) - q.p, q.omega,
                                                  q.weight};
                          e(check_quadratic_rb(q), "P fails" + at);
                          e(check_quadratic_rb(tilde), "-lambda I - P fails" + at);
                          e(factorizable_from_rb(tilde) == cr.r.tau(), "variant does not map to tau(r)" + at);
                      }
                      return e.take();
                  }});
    cs.push_back({"affine-2d double: r_omega symmetric and invariant", [](const GoldenInputs& in) {
                      Expect e;
                      const CanonicalR cr = affine_canonical(in);
                      const QuadraticRB q = rb_from_factorizable(cr.d, cr.r, 1);
                      const Tensor2 ro = r_omega(q.omega);
                      e(ro.is_symmetric(), "r_omega not symmetric");
                      e(check_invariant(cr.d, ro), "r_omega not invariant");
                      return e.take();
                  }});
    cs.push_back({"affine-2d tensor square: horizontal and vertical products", [](const GoldenInputs& in) {
                      const DendAlgebra& a = in.affine_2d;
                      const QuadriAlgebra q = quadri_tensor(a, a);
                      const BilinearOp circ = a.circ();
                      Expect e;
                      e(horizontal(q).prec == kron(a.prec, circ), "(x(x)a) < (y(x)b) != (x<y) (x) (a o b)");
                      e(horizontal(q).succ == kron(a.succ, circ), "(x(x)a) > (y(x)b) != (x>y) (x) (a o b)");
                      e(vertical(q).succ == kron(circ, a.succ), "vee != o (x) >");
                      e(vertical(q).prec == kron(circ, a.prec), "wedge != o (x) <");
                      return e.take();
                  }});
    cs.push_back({"affine-2d: invariant skew forms of the dual quadri are 2-cocycles", [](const GoldenInputs& in) {
                      const DendAlgebra s = semidirect_dual(in.affine_2d);
                      const Tensor2 r = skew_solution(1);
                      const QuadriAlgebra q = quadri_from_o_operator({t_map(r), dual_rep(regular_rep(s)), 0, {}});
                      const std::vector<BilForm> forms = quadri_form_space(q);
                      Expect e;
                      e(!forms.empty(), "no skew form satisfies the invariance conditions");
                      for (const BilForm& w : forms) e(check_2cocycle(horizontal(q), w), "form is not a 2-cocycle");
                      return e.take();
                  }});
    return cs;
}

}  // namespace

GoldenInputs golden_inputs() {
    GoldenInputs in{DendAlgebra(2), DendAlgebra(2)};
    DendAlgebra& b = in.abelian_circ_2d;
    b.succ(0, 0, 0) = 1;
    b.prec(0, 0, 0) = -1;
    b.succ(0, 1, 1) = 1;
    b.succ(1, 0, 1) = 1;
    b.prec(0, 1, 1) = -1;
    b.prec(1, 0, 1) = -1;
    DendAlgebra& a = in.affine_2d;
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.prec(1, 0, 1) = -1;
    return in;
}

void corrupt_input(GoldenInputs& in, const std::string& name) {
    if (name == "abelian-circ-2d")
        in.abelian_circ_2d.succ(1, 1, 0) = 1;
    else if (name == "affine-2d")
        in.affine_2d.succ(0, 0, 1) = 1;
    else
        throw std::invalid_argument("unknown input '" + name + "' (expected abelian-circ-2d or affine-2d)");
}

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = build_cases();
    return cases;
}

bool SuiteResult::ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

SuiteResult run_golden_suite(const SuiteOptions& opts) {
    GoldenInputs in = golden_inputs();
    if (!opts.corrupt.empty()) corrupt_input(in, opts.corrupt);
    SuiteResult out;
    for (const GoldenCase& c : golden_cases()) {
        if (!opts.only.empty() && std::none_of(opts.only.begin(), opts.only.end(), [&](const std::string& f) {
                return c.name.find(f) != std::string::npos;
            }))
            continue;
        CaseResult res{c.name, {}};
        try {
            res.problems = c.run(in);
        } catch (const std::exception& ex) {
            res.problems.push_back(std::string("exception: ") + ex.what());
        }
        out.cases.push_back(std::move(res));
    }
    return out;
}

int report_golden_suite(const SuiteResult& result, std::ostream& out, std::ostream& err) {
    if (result.cases.empty()) {
        err << "warning: no cases selected\n";
        return 0;
    }
    std::size_t failed = 0;
    for (const CaseResult& c : result.cases) {
        out << (c.ok() ? "PASS " : "FAIL ") << c.name << '\n';
        if (!c.ok()) ++failed;
        for (const std::string& p : c.problems) out << "    " << p << '\n';
    }
    out << result.cases.size() - failed << '/' << result.cases.size() << " cases passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace ldwb
