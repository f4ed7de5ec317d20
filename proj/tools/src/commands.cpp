#include "commands.hpp"

#include "golden_suite.hpp"

#include "ldb/bialgebra.hpp"
#include "ldb/catalog.hpp"
#include "ldb/io.hpp"
#include "ldb/quadri.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace ldwb {

using namespace ldb;

namespace {

/// Bad invocation or input that cannot be interpreted (exit 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction whose result failed re-verification (exit 1).
class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Finding {
    std::string identity;
    std::vector<std::string> at;
    std::vector<std::string> residual;
};

std::string label(const std::vector<std::string>& basis, std::size_t i) {
    return i < basis.size() ? basis[i] : "e" + std::to_string(i + 1);
}

std::vector<Finding> findings(const Report& r, const std::vector<std::string>& basis, const std::string& prefix = {}) {
    std::vector<Finding> out;
    for (const Violation& v : r.violations()) {
        Finding f{prefix + v.identity, {}, {}};
        for (std::size_t i : v.indices) f.at.push_back(label(basis, i));
        for (const Scalar& s : v.residual) f.residual.push_back(s.str());
        out.push_back(std::move(f));
    }
    return out;
}

void print_finding(std::ostream& os, const Finding& f) {
    os << "  " << f.identity;
    if (!f.at.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < f.at.size(); ++i) os << (i ? "," : "") << f.at[i];
        os << ')';
    }
    if (!f.residual.empty()) {
        os << " residual [";
        for (std::size_t i = 0; i < f.residual.size(); ++i) os << (i ? ", " : "") << f.residual[i];
        os << ']';
    }
    os << '\n';
}

StructureFile load(const std::string& path) {
    try {
        StructureFile f = read_structure(path);
        if (f.basis.empty()) f.basis = default_basis(f.dim());
        return f;
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    } catch (const ShapeError& e) {
        throw InputError(path + ": shape error: " + e.what());
    }
}

template <class T>
const T& as(const StructureFile& f, const std::string& path, std::string_view want) {
    if (const T* p = std::get_if<T>(&f.payload)) return *p;
    throw InputError(path + ": expected kind '" + std::string(want) + "', found '" + std::string(f.kind()) + "'");
}

void save(const std::string& path, const StructureFile& f) {
    try {
        save_structure(path, f);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

/// A module from a rep file, or the regular module of a dendriform file.
DendRep rep_of(const StructureFile& f, const std::string& path) {
    if (const auto* r = std::get_if<DendRep>(&f.payload)) return *r;
    return regular_rep(as<DendAlgebra>(f, path, "rep or dendriform"));
}

std::vector<std::string> with_duals(const std::vector<std::string>& basis) {
    std::vector<std::string> out = basis;
    for (const std::string& b : basis) out.push_back(b + "*");
    return out;
}

const DendAlgebra* dend_of(const StructureFile& f) {
    if (const auto* a = std::get_if<DendAlgebra>(&f.payload)) return a;
    if (const auto* b = std::get_if<Bialgebra>(&f.payload)) return &b->alg;
    if (const auto* q = std::get_if<QuadraticRB>(&f.payload)) return &q->alg;
    return nullptr;
}

/// The coproduct whose dual products are those of a.
CoProduct dual_coproduct(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    CoProduct c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                c.dsucc[k](i, j) = a.succ(i, j, k);
                c.dprec[k](i, j) = a.prec(i, j, k);
            }
    return c;
}

// ---- check ----

struct CheckResult {
    std::vector<Finding> findings;
    std::vector<std::string> notes;
    bool ok() const { return findings.empty(); }
};

void require_form(CheckResult& res, const BilForm& w, bool symmetric) {
    if (symmetric && !w.is_symmetric()) res.findings.push_back({"form-symmetric", {}, {}});
    if (!symmetric && !w.is_skew()) res.findings.push_back({"form-skew", {}, {}});
    if (symmetric && !w.is_nondegenerate()) res.findings.push_back({"form-nondegenerate", {}, {}});
}

void search_witness(CheckResult& res, const std::vector<BilForm>& space, const char* what) {
    const auto w = find_nondegenerate(space, 2);
    res.notes.push_back(std::string("no form given; ") + what + " space has dimension " + std::to_string(space.size()));
    if (w) {
        std::ostringstream os;
        os << "nondegenerate witness " << w->g;
        res.notes.push_back(os.str());
    } else {
        res.findings.push_back({std::string("no nondegenerate ") + what, {}, {}});
    }
}

CheckResult run_check(const StructureFile& f, const std::string& set, const std::optional<StructureFile>& form_file,
                      const std::string& form_path) {
    CheckResult res;
    const auto& basis = f.basis;
    auto add = [&](const Report& r, const std::string& prefix = {}) {
        auto more = findings(r, basis, prefix);
        res.findings.insert(res.findings.end(), more.begin(), more.end());
    };
    auto inapplicable = [&]() -> CheckResult {
        throw InputError("axiom set '" + set + "' does not apply to kind '" + std::string(f.kind()) + "'");
    };
    std::optional<BilForm> form;
    if (form_file) {
        form = as<BilForm>(*form_file, form_path, "form");
        if (form->dim() != f.dim())
            throw InputError(form_path + ": shape error: form dimension " + std::to_string(form->dim()) +
                             " does not match " + std::to_string(f.dim()));
    }
    const DendAlgebra* alg = dend_of(f);

    if (set == "ld") {
        if (const auto* q = std::get_if<QuadriAlgebra>(&f.payload)) {
            add(check_ld(horizontal(*q)), "horizontal:");
            add(check_ld(vertical(*q)), "vertical:");
        } else if (const auto* mp = std::get_if<MatchedPairLD>(&f.payload)) {
            add(matched_pair_sum_ld(*mp).axioms);
        } else if (alg) {
            add(check_ld(*alg));
        } else {
            return inapplicable();
        }
    } else if (set == "leibniz") {
        if (const auto* l = std::get_if<LeibnizAlgebra>(&f.payload))
            add(check_leibniz(*l));
        else if (alg)
            add(check_leibniz(associated(*alg)));
        else
            return inapplicable();
    } else if (set == "rep") {
        if (const auto* r = std::get_if<DendRep>(&f.payload)) {
            add(check_dend_rep(*r));
        } else if (const auto* mp = std::get_if<MatchedPairLD>(&f.payload)) {
            add(check_dend_rep(mp->rep12), "rep12:");
            add(check_dend_rep(mp->rep21), "rep21:");
        } else if (alg) {
            res.notes.push_back("checking the regular module");
            add(check_dend_rep(regular_rep(*alg)));
        } else {
            return inapplicable();
        }
    } else if (set == "quadri") {
        const auto* q = std::get_if<QuadriAlgebra>(&f.payload);
        if (!q) return inapplicable();
        add(check_quadri(*q));
    } else if (set == "coalgebra") {
        if (const auto* c = std::get_if<CoProduct>(&f.payload)) {
            add(check_coalgebra(*c));
        } else if (const auto* b = std::get_if<Bialgebra>(&f.payload)) {
            add(check_coalgebra(b->cop));
        } else if (alg) {
            res.notes.push_back("checking the coproduct dual to the products");
            add(check_coalgebra(dual_coproduct(*alg)));
        } else {
            return inapplicable();
        }
    } else if (set == "bialgebra") {
        if (const auto* b = std::get_if<Bialgebra>(&f.payload)) {
            add(bialgebra_full_report(*b));
        } else if (alg) {
            res.notes.push_back("checking with the zero coproduct");
            add(bialgebra_full_report({*alg, CoProduct(alg->dim())}));
        } else {
            return inapplicable();
        }
    } else if (set == "quadratic") {
        if (const auto* q = std::get_if<QuadraticRB>(&f.payload)) {
            const BilForm& w = form ? *form : q->omega;
            require_form(res, w, true);
            if (!res.ok()) return res;
            add(quadratic_report(q->alg, w));
            add(rota_baxter_report(q->alg, q->p, q->weight));
            add(compatibility_report(q->p, w, q->weight));
        } else if (alg) {
            if (!form) {
                search_witness(res, quadratic_form_space(*alg), "quadratic form");
                return res;
            }
            require_form(res, *form, true);
            if (res.ok()) add(quadratic_report(*alg, *form));
        } else {
            return inapplicable();
        }
    } else if (set == "symplectic") {
        LeibnizAlgebra l;
        if (const auto* p = std::get_if<LeibnizAlgebra>(&f.payload))
            l = *p;
        else if (alg)
            l = associated(*alg);
        else
            return inapplicable();
        if (!form) {
            search_witness(res, symplectic_form_space(l), "symplectic form");
            return res;
        }
        require_form(res, *form, true);
        if (res.ok()) add(symplectic_report(l, *form));
    } else if (set == "cocycle") {
        if (!alg) return inapplicable();
        if (!form) {
            search_witness(res, cocycle_form_space(*alg), "2-cocycle");
            return res;
        }
        require_form(res, *form, false);
        if (res.ok()) add(cocycle_report(*alg, *form));
    } else {
        throw InputError("unknown axiom set '" + set + "'");
    }
    return res;
}

int cmd_check(const std::string& path, const std::string& set, const std::string& form_path,
              const std::string& json_path, std::ostream& out) {
    const StructureFile f = load(path);
    std::optional<StructureFile> form;
    if (!form_path.empty()) form = load(form_path);
    const CheckResult res = run_check(f, set, form, form_path);

    out << (res.ok() ? "PASS" : "FAIL") << ' ' << set << ' ' << path;
    if (!res.ok()) out << " (" << res.findings.size() << " violation" << (res.findings.size() == 1 ? "" : "s") << ')';
    out << '\n';
    for (const std::string& n : res.notes) out << "  note: " << n << '\n';
    for (const Finding& fd : res.findings) print_finding(out, fd);

    if (!json_path.empty()) {
        nlohmann::json j;
        j["file"] = path;
        j["axiom_set"] = set;
        j["ok"] = res.ok();
        j["notes"] = res.notes;
        j["violations"] = nlohmann::json::array();
        for (const Finding& fd : res.findings)
            j["violations"].push_back({{"identity", fd.identity}, {"at", fd.at}, {"residual", fd.residual}});
        std::ofstream os(json_path);
        if (!os) throw InputError("cannot write '" + json_path + "'");
        os << j.dump(2) << '\n';
    }
    return res.ok() ? kPass : kViolation;
}

// ---- construct ----

struct ConstructArgs {
    std::string what;
    std::vector<std::string> inputs;
    std::string out;
    std::string lambda = "1";
    std::string algebra_out;
};

void need_inputs(const ConstructArgs& a, std::size_t lo, std::size_t hi) {
    if (a.inputs.size() < lo || a.inputs.size() > hi)
        throw InputError("construct " + a.what + ": expected " +
                         (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                         " input file(s), got " + std::to_string(a.inputs.size()));
}

void verify(const Report& r, const std::string& what, const std::vector<std::string>& basis) {
    if (r.ok()) return;
    std::ostringstream os;
    os << "verification of " << what << " failed:\n";
    for (const Finding& f : findings(r, basis)) print_finding(os, f);
    throw VerifyError(os.str());
}

/// A bialgebra from one bialgebra file, an algebra file alone (zero coproduct), or algebra + coproduct.
std::pair<Bialgebra, std::vector<std::string>> bialgebra_input(const ConstructArgs& a) {
    need_inputs(a, 1, 2);
    const StructureFile f = load(a.inputs[0]);
    if (const auto* b = std::get_if<Bialgebra>(&f.payload)) {
        if (a.inputs.size() != 1) throw InputError("construct " + a.what + ": a bialgebra file takes no coproduct");
        return {*b, f.basis};
    }
    const DendAlgebra& alg = as<DendAlgebra>(f, a.inputs[0], "dendriform");
    CoProduct cop(alg.dim());
    if (a.inputs.size() == 2) {
        const StructureFile c = load(a.inputs[1]);
        cop = as<CoProduct>(c, a.inputs[1], "coproduct");
        if (cop.dim() != alg.dim()) throw InputError(a.inputs[1] + ": shape error: coproduct dimension mismatch");
    }
    return {{alg, cop}, f.basis};
}

StructureFile construct(const ConstructArgs& a, std::ostream& out) {
    const std::string& w = a.what;
    if (w == "dual-rep") {
        need_inputs(a, 1, 1);
        const StructureFile f = load(a.inputs[0]);
        DendRep d = dual_rep(rep_of(f, a.inputs[0]));
        verify(check_dend_rep(d), "the dual module", f.basis);
        StructureFile o = make_structure(std::move(d), "dual of " + (f.name.empty() ? a.inputs[0] : f.name));
        o.basis = f.basis;
        return o;
    }
    if (w == "semidirect") {
        need_inputs(a, 1, 1);
        const StructureFile f = load(a.inputs[0]);
        DendAlgebra s;
        std::vector<std::string> basis;
        if (const auto* rep = std::get_if<DendRep>(&f.payload)) {
            s = semidirect(rep->alg, *rep);
            basis = f.basis;
            for (std::size_t i = 0; i < rep->mdim; ++i) basis.push_back("v" + std::to_string(i + 1));
        } else {
            const DendAlgebra& alg = as<DendAlgebra>(f, a.inputs[0], "dendriform or rep");
            out << "using the dual of the regular module\n";
            s = semidirect(alg, dual_rep(regular_rep(alg)));
            basis = with_duals(f.basis);
        }
        verify(check_ld(s), "the semidirect product", basis);
        StructureFile o = make_structure(std::move(s), "semidirect product");
        o.basis = basis;
        return o;
    }
    if (w == "double") {
        const auto [b, basis] = bialgebra_input(a);
        verify(bialgebra_full_report(b), "the input bialgebra", basis);
        DendAlgebra d = double_of(b);
        const auto labels = with_duals(basis);
        verify(check_ld(d), "the double", labels);
        StructureFile o = make_structure(std::move(d), "double");
        o.basis = labels;
        return o;
    }
    if (w == "cobound") {
        need_inputs(a, 2, 2);
        const StructureFile fa = load(a.inputs[0]);
        const StructureFile fr = load(a.inputs[1]);
        const DendAlgebra& alg = as<DendAlgebra>(fa, a.inputs[0], "dendriform");
        const Tensor2& r = as<Tensor2>(fr, a.inputs[1], "rtensor");
        if (r.dim() != alg.dim()) throw InputError(a.inputs[1] + ": shape error: tensor dimension mismatch");
        CoProduct c = cobound(alg, r);
        verify(bialgebra_full_report({alg, c}), "the coboundary bialgebra", fa.basis);
        StructureFile o = make_structure(std::move(c), "coboundary coproduct");
        o.basis = fa.basis;
        o.meta["classification"] = std::string(to_string(classify_r(alg, r).tag));
        return o;
    }
    if (w == "canonical-r") {
        const auto [b, basis] = bialgebra_input(a);
        verify(bialgebra_full_report(b), "the input bialgebra", basis);
        CanonicalR cr = canonical_r(b);
        const auto labels = with_duals(basis);
        if (cr.cls.tag != RClassTag::Factorizable)
            throw VerifyError("canonical r classified " + std::string(to_string(cr.cls.tag)));
        StructureFile o = make_structure(cr.r, "canonical r on the double");
        o.basis = labels;
        o.meta["classification"] = std::string(to_string(cr.cls.tag));
        if (!a.algebra_out.empty()) {
            StructureFile d = make_structure(cr.d, "double");
            d.basis = labels;
            save(a.algebra_out, d);
            out << "wrote " << a.algebra_out << '\n';
        }
        return o;
    }
    if (w == "solution-from-o-operator") {
        need_inputs(a, 2, 2);
        const StructureFile ft = load(a.inputs[0]);
        const StructureFile fr = load(a.inputs[1]);
        const Matrix& t = as<Matrix>(ft, a.inputs[0], "map");
        const DendRep rep = rep_of(fr, a.inputs[1]);
        OSolution sol = solution_from_o_operator({t, rep, 0, {}});
        std::vector<std::string> labels = fr.basis;
        for (std::size_t i = 0; i < rep.mdim; ++i) labels.push_back("v" + std::to_string(i + 1) + "*");
        if (!check_ldybe(sol.hat, sol.r)) throw VerifyError("the constructed tensor does not satisfy S(r) = 0");
        StructureFile o = make_structure(sol.r, "solution from an O-operator");
        o.basis = labels;
        o.meta["classification"] = std::string(to_string(classify_r(sol.hat, sol.r).tag));
        if (!a.algebra_out.empty()) {
            StructureFile h = make_structure(sol.hat, "host of the solution");
            h.basis = labels;
            save(a.algebra_out, h);
            out << "wrote " << a.algebra_out << '\n';
        }
        return o;
    }
    if (w == "quadri-from-o-operator") {
        need_inputs(a, 2, 2);
        const StructureFile ft = load(a.inputs[0]);
        const StructureFile fr = load(a.inputs[1]);
        const Matrix& t = as<Matrix>(ft, a.inputs[0], "map");
        const DendRep rep = rep_of(fr, a.inputs[1]);
        QuadriAlgebra q = quadri_from_o_operator({t, rep, 0, {}});
        const auto labels = default_basis(rep.mdim);
        verify(check_quadri(q), "the induced quadri-algebra", labels);
        return make_structure(std::move(q), "quadri-algebra from an O-operator");
    }
    if (w == "quadri-tensor") {
        need_inputs(a, 2, 2);
        const StructureFile f1 = load(a.inputs[0]);
        const StructureFile f2 = load(a.inputs[1]);
        const DendAlgebra& x = as<DendAlgebra>(f1, a.inputs[0], "dendriform");
        const DendAlgebra& y = as<DendAlgebra>(f2, a.inputs[1], "dendriform");
        QuadriAlgebra q = quadri_tensor(x, y);
        std::vector<std::string> labels;
        for (const auto& l1 : f1.basis)
            for (const auto& l2 : f2.basis) labels.push_back(l1 + "(x)" + l2);
        verify(check_quadri(q), "the tensor-product quadri-algebra", labels);
        StructureFile o = make_structure(std::move(q), "tensor product");
        o.basis = labels;
        return o;
    }
    if (w == "rb-from-factorizable") {
        need_inputs(a, 2, 2);
        const StructureFile fa = load(a.inputs[0]);
        const StructureFile fr = load(a.inputs[1]);
        const DendAlgebra& alg = as<DendAlgebra>(fa, a.inputs[0], "dendriform");
        const Tensor2& r = as<Tensor2>(fr, a.inputs[1], "rtensor");
        if (r.dim() != alg.dim()) throw InputError(a.inputs[1] + ": shape error: tensor dimension mismatch");
        QuadraticRB q = rb_from_factorizable(alg, r, Scalar::parse(a.lambda));
        if (!check_quadratic_rb(q)) throw VerifyError("the constructed operator is not a quadratic Rota-Baxter operator");
        StructureFile o = make_structure(std::move(q), "quadratic Rota-Baxter operator");
        o.basis = fa.basis;
        return o;
    }
    if (w == "factorizable-from-rb") {
        need_inputs(a, 1, 1);
        const StructureFile f = load(a.inputs[0]);
        const QuadraticRB& q = as<QuadraticRB>(f, a.inputs[0], "quadratic_rb");
        Tensor2 r = factorizable_from_rb(q);
        const RClass cls = classify_r(q.alg, r);
        if (cls.tag != RClassTag::Factorizable)
            throw VerifyError("the recovered tensor classified " + std::string(to_string(cls.tag)));
        StructureFile o = make_structure(std::move(r), "factorizable solution");
        o.basis = f.basis;
        o.meta["classification"] = std::string(to_string(cls.tag));
        return o;
    }
    if (w == "dendriform-from-symplectic") {
        need_inputs(a, 2, 2);
        const StructureFile fl = load(a.inputs[0]);
        const StructureFile fw = load(a.inputs[1]);
        const LeibnizAlgebra& l = as<LeibnizAlgebra>(fl, a.inputs[0], "leibniz");
        const BilForm& omega = as<BilForm>(fw, a.inputs[1], "form");
        DendAlgebra d = dendriform_from_symplectic(l, omega);
        verify(check_ld(d), "the induced dendriform algebra", fl.basis);
        if (!(associated(d) == l)) throw VerifyError("the induced products do not sum to the Leibniz product");
        StructureFile o = make_structure(std::move(d), "dendriform algebra from a symplectic form");
        o.basis = fl.basis;
        return o;
    }
    throw InputError("unknown construction '" + w + "'");
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const StructureFile o = construct(a, out);
    save(a.out, o);
    out << "wrote " << a.out << " (" << o.kind() << ", dim " << o.dim() << ")\n";
    for (const auto& [k, v] : o.meta) out << "  " << k << ": " << v << '\n';
    return kPass;
}

// ---- classify ----

int cmd_classify(const std::string& alg_path, const std::string& r_path, std::ostream& out) {
    const StructureFile fa = load(alg_path);
    const StructureFile fr = load(r_path);
    const DendAlgebra& alg = as<DendAlgebra>(fa, alg_path, "dendriform");
    const Tensor2& r = as<Tensor2>(fr, r_path, "rtensor");
    if (r.dim() != alg.dim()) throw InputError(r_path + ": shape error: tensor dimension mismatch");
    const RClass c = classify_r(alg, r);
    const auto& b = fa.basis;
    out << "classification: " << to_string(c.tag) << '\n';
    if (c.tag == RClassTag::NotSolution) {
        out << "S(r) nonzero coefficients:\n";
        const std::size_t n = alg.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!c.s_residual(i, j, k).is_zero())
                        out << "  " << label(b, i) << "(x)" << label(b, j) << "(x)" << label(b, k) << ": "
                            << c.s_residual(i, j, k) << '\n';
        return kPass;
    }
    out << "skew: " << (r.is_skew() ? "yes" : "no") << '\n';
    out << "r + tau(r) invariant: " << (c.invariance.ok() ? "yes" : "no") << '\n';
    for (const Finding& f : findings(c.invariance, b)) print_finding(out, f);
    out << "kernel of T_{r+tau(r)}: dimension " << c.kernel.size() << '\n';
    for (const Vec& v : c.kernel) {
        out << "  [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
        out << "]\n";
    }
    return kPass;
}

// ---- search ----

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

int search_dim1(int bound, std::ostream& out) {
    std::size_t cases = 0, mismatches = 0;
    for (int p = -bound; p <= bound; ++p)
        for (int q = -bound; q <= bound; ++q) {
            ++cases;
            const bool valid = check_ld(catalog::scalar_1d(p, q)).ok();
            if (valid) out << "valid: p=" << p << " q=" << q << '\n';
            if (valid != (p == -q)) {
                ++mismatches;
                out << "rule p = -q fails at p=" << p << " q=" << q << '\n';
            }
        }
    out << cases << " cases, " << mismatches << " disagreeing with p = -q\n";
    return mismatches == 0 ? kPass : kViolation;
}

int search_o_operator(const std::string& path, int bound, std::ostream& out) {
    const StructureFile f = load(path);
    const DendRep rep = rep_of(f, path);
    const std::size_t rows = rep.alg.dim(), cols = rep.mdim, cells = rows * cols;
    double total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= 2 * bound + 1;
    if (total > 5e6) throw InputError("grid too large: " + std::to_string(static_cast<long long>(total)) + " cases");
    std::vector<int> c(cells, -bound);
    std::size_t found = 0, cases = 0;
    while (true) {
        Matrix t(rows, cols);
        for (std::size_t i = 0; i < cells; ++i) t(i / cols, i % cols) = c[i];
        ++cases;
        if (check_o_operator({t, rep, 0, {}})) {
            ++found;
            out << "O-operator: " << matrix_text(t) << '\n';
        }
        std::size_t pos = 0;
        while (pos < cells && c[pos] == bound) c[pos++] = -bound;
        if (pos == cells) break;
        ++c[pos];
    }
    out << found << " of " << cases << " grid points are O-operators of weight 0\n";
    return kPass;
}

int search_forms(const std::string& path, const std::string& kind, int bound, std::ostream& out) {
    const StructureFile f = load(path);
    std::vector<BilForm> space;
    if (kind == "symplectic") {
        if (const auto* l = std::get_if<LeibnizAlgebra>(&f.payload))
            space = symplectic_form_space(*l);
        else
            space = symplectic_form_space(associated(as<DendAlgebra>(f, path, "leibniz or dendriform")));
    } else if (kind == "quadratic") {
        space = quadratic_form_space(as<DendAlgebra>(f, path, "dendriform"));
    } else if (kind == "cocycle") {
        space = cocycle_form_space(as<DendAlgebra>(f, path, "dendriform"));
    } else if (kind == "quadri-invariant") {
        space = quadri_form_space(as<QuadriAlgebra>(f, path, "quadri"));
    } else {
        throw InputError("unknown form kind '" + kind + "'");
    }
    out << kind << " forms: solution space of dimension " << space.size() << '\n';
    for (const BilForm& w : space) out << "  basis " << matrix_text(w.g) << '\n';
    const auto w = find_nondegenerate(space, bound);
    if (!w) {
        out << "no nondegenerate combination with coefficients in [" << -bound << ", " << bound << "]\n";
        return kViolation;
    }
    out << "nondegenerate: " << matrix_text(w->g) << '\n';
    return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for Leibniz-dendriform structures", "ldwb"};
    app.require_subcommand(1);

    std::string check_file, axiom_set, form_path, json_path;
    auto* check = app.add_subcommand("check", "Check a structure file against an axiom set");
    check->add_option("file", check_file, "Structure file")->required();
    check->add_option("--axiom-set", axiom_set, "Axiom set")
        ->required()
        ->check(CLI::IsMember(
            {"ld", "leibniz", "rep", "quadri", "coalgebra", "bialgebra", "quadratic", "symplectic", "cocycle"}));
    check->add_option("--form", form_path, "Form file for quadratic, symplectic and cocycle checks");
    check->add_option("--json-report", json_path, "Also write the report as JSON");

    ConstructArgs cargs;
    auto* cons = app.add_subcommand("construct", "Build a structure from input files and re-verify it");
    cons->add_option("what", cargs.what, "Construction")
        ->required()
        ->check(CLI::IsMember({"dual-rep", "semidirect", "double", "cobound", "canonical-r",
                               "solution-from-o-operator", "quadri-from-o-operator", "quadri-tensor",
                               "rb-from-factorizable", "factorizable-from-rb", "dendriform-from-symplectic"}));
    cons->add_option("inputs", cargs.inputs, "Input files")->required();
    cons->add_option("--out", cargs.out, "Output file")->required();
    cons->add_option("--lambda", cargs.lambda, "Weight for rb-from-factorizable")->capture_default_str();
    cons->add_option("--algebra-out", cargs.algebra_out, "Also write the host algebra (canonical-r, solution-from-o-operator)");

    std::string cls_alg, cls_r;
    auto* classify = app.add_subcommand("classify", "Classify a tensor r in an algebra");
    classify->add_option("algebra", cls_alg, "Dendriform algebra file")->required();
    classify->add_option("rtensor", cls_r, "Tensor file")->required();

    SuiteOptions suite;
    auto* paper = app.add_subcommand("paper-suite", "Run the built-in worked-example regression suite");
    paper->add_option("--only", suite.only, "Run only cases whose name contains one of these strings");
    paper->add_option("--corrupt", suite.corrupt, "Perturb one input algebra (abelian-circ-2d or affine-2d)");
    paper->add_flag("--list", "List case names and exit");

    std::string search_what, search_file, form_kind = "cocycle";
    int grid_bound = 2;
    auto* search = app.add_subcommand("search", "Grid sweeps and form searches");
    search->add_option("what", search_what, "dim1, o-operator or forms")
        ->required()
        ->check(CLI::IsMember({"dim1", "o-operator", "forms"}));
    search->add_option("file", search_file, "Input file (o-operator, forms)");
    search->add_option("--grid-bound", grid_bound, "Entries range over [-b, b]")->capture_default_str();
    search->add_option("--kind", form_kind, "quadratic, symplectic, cocycle or quadri-invariant")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, axiom_set, form_path, json_path, out);
        if (cons->parsed()) return cmd_construct(cargs, out);
        if (classify->parsed()) return cmd_classify(cls_alg, cls_r, out);
        if (paper->parsed()) {
            if (paper->count("--list") > 0) {
                for (const GoldenCase& c : golden_cases()) out << c.name << '\n';
                return kPass;
            }
            try {
                return report_golden_suite(run_golden_suite(suite), out, err);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
        if (search->parsed()) {
            if (search_what == "dim1") return search_dim1(grid_bound, out);
            if (search_file.empty()) throw InputError("search " + search_what + " needs an input file");
            if (search_what == "o-operator") return search_o_operator(search_file, grid_bound, out);
            return search_forms(search_file, form_kind, grid_bound, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const VerifyError& e) {
        err << e.what();
        return kViolation;
    } catch (const ContractError& e) {
        err << "rejected: " << e.what() << '\n';
        return kViolation;
    }
    return kInputError;
}

}  // namespace ldwb
