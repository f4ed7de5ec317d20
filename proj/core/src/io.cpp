#include "ldb/io.hpp"

#include "ldb/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ldb {

using nlohmann::json;

namespace {

template <class... F>
struct Overload : F... {
    using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

// ---- writing ----

json write_scalar(const Scalar& s) { return s.str(); }

json write_matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json write_op(const BilinearOp& op) {
    const std::size_t n = op.dim();
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json a = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json b = json::array();
            for (std::size_t k = 0; k < n; ++k) b.push_back(write_scalar(op(i, j, k)));
            a.push_back(std::move(b));
        }
        out.push_back(std::move(a));
    }
    return out;
}

json write_matrices(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(write_matrix(m));
    return out;
}

json write_tensors(const std::vector<Tensor2>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(write_matrix(t.coeff()));
    return out;
}

json body(const DendAlgebra& a) { return {{"dim", a.dim()}, {"succ", write_op(a.succ)}, {"prec", write_op(a.prec)}}; }

json body(const DendRep& r) {
    return {{"algebra", body(r.alg)},      {"mdim", r.mdim},
            {"lsucc", write_matrices(r.lsucc)}, {"rsucc", write_matrices(r.rsucc)},
            {"lprec", write_matrices(r.lprec)}, {"rprec", write_matrices(r.rprec)}};
}

json body(const CoProduct& c) {
    return {{"dim", c.dim()}, {"dsucc", write_tensors(c.dsucc)}, {"dprec", write_tensors(c.dprec)}};
}

json write_payload(const StructureFile::Payload& p) {
    return std::visit(
        Overload{
            [](const LeibnizAlgebra& l) -> json { return {{"dim", l.dim()}, {"circ", write_op(l.circ)}}; },
            [](const DendAlgebra& a) -> json { return body(a); },
            [](const QuadriAlgebra& q) -> json {
                return {{"dim", q.dim()}, {"se", write_op(q.se)}, {"ne", write_op(q.ne)}, {"sw", write_op(q.sw)},
                        {"nw", write_op(q.nw)}};
            },
            [](const DendRep& r) -> json { return body(r); },
            [](const Tensor2& t) -> json { return {{"dim", t.dim()}, {"coeff", write_matrix(t.coeff())}}; },
            [](const CoProduct& c) -> json { return body(c); },
            [](const BilForm& f) -> json { return {{"dim", f.dim()}, {"matrix", write_matrix(f.g)}}; },
            [](const Matrix& m) -> json {
                return {{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", write_matrix(m)}};
            },
            [](const Bialgebra& b) -> json { return {{"algebra", body(b.alg)}, {"coproduct", body(b.cop)}}; },
            [](const MatchedPairLD& mp) -> json { return {{"rep12", body(mp.rep12)}, {"rep21", body(mp.rep21)}}; },
            [](const QuadraticRB& q) -> json {
                return {{"algebra", body(q.alg)},
                        {"p", write_matrix(q.p)},
                        {"form", write_matrix(q.omega.g)},
                        {"weight", write_scalar(q.weight)}};
            },
        },
        p);
}

// ---- reading ----

class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError((path_.empty() ? std::string("/") : path_) + ": " + what);
    }

    Reader at(const std::string& key) const {
        if (!j_.is_object()) fail("expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) fail("missing key '" + key + "'");
        return {*it, path_ + "/" + key};
    }
    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    Reader at(std::size_t i) const { return {j_.at(i), path_ + "/" + std::to_string(i)}; }

    std::size_t array_size(std::size_t expected) const {
        if (!j_.is_array()) fail("expected an array");
        if (j_.size() != expected)
            throw ShapeError(path_ + ": expected " + std::to_string(expected) + " entries, found " +
                             std::to_string(j_.size()));
        return expected;
    }

    std::size_t count() const {
        if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0))
            fail("expected a non-negative integer");
        return j_.get<std::size_t>();
    }

    std::string text() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    Scalar scalar() const {
        if (j_.is_number_integer()) return Scalar(j_.get<long long>());
        if (!j_.is_string()) fail("expected a scalar string \"p/q\"");
        try {
            return Scalar::parse(j_.get<std::string>());
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    Matrix matrix(std::size_t rows, std::size_t cols) const {
        array_size(rows);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            Reader row = at(i);
            row.array_size(cols);
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = row.at(k).scalar();
        }
        return m;
    }

    BilinearOp op(std::size_t n) const {
        array_size(n);
        BilinearOp out(n);
        for (std::size_t i = 0; i < n; ++i) {
            Reader a = at(i);
            a.array_size(n);
            for (std::size_t j = 0; j < n; ++j) {
                Reader b = a.at(j);
                b.array_size(n);
                for (std::size_t k = 0; k < n; ++k) out(i, j, k) = b.at(k).scalar();
            }
        }
        return out;
    }

    std::vector<Matrix> matrices(std::size_t count, std::size_t m) const {
        array_size(count);
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(at(i).matrix(m, m));
        return out;
    }

    std::vector<Tensor2> tensors(std::size_t n) const {
        array_size(n);
        std::vector<Tensor2> out;
        for (std::size_t i = 0; i < n; ++i) out.emplace_back(at(i).matrix(n, n));
        return out;
    }

    DendAlgebra dend() const {
        const std::size_t n = at("dim").count();
        return {at("succ").op(n), at("prec").op(n)};
    }

    DendRep rep() const {
        DendRep r(at("algebra").dend(), at("mdim").count());
        const std::size_t n = r.alg.dim();
        r.lsucc = at("lsucc").matrices(n, r.mdim);
        r.rsucc = at("rsucc").matrices(n, r.mdim);
        r.lprec = at("lprec").matrices(n, r.mdim);
        r.rprec = at("rprec").matrices(n, r.mdim);
        return r;
    }

    CoProduct coproduct() const {
        const std::size_t n = at("dim").count();
        CoProduct c(n);
        c.dsucc = at("dsucc").tensors(n);
        c.dprec = at("dprec").tensors(n);
        return c;
    }

private:
    const json& j_;
    std::string path_;
};

StructureFile::Payload read_payload(const std::string& kind, const Reader& r) {
    if (kind == "leibniz") {
        const std::size_t n = r.at("dim").count();
        return LeibnizAlgebra(r.at("circ").op(n));
    }
    if (kind == "dendriform") return r.dend();
    if (kind == "quadri") {
        const std::size_t n = r.at("dim").count();
        return QuadriAlgebra(r.at("se").op(n), r.at("ne").op(n), r.at("sw").op(n), r.at("nw").op(n));
    }
    if (kind == "rep") return r.rep();
    if (kind == "rtensor") {
        const std::size_t n = r.at("dim").count();
        return Tensor2(r.at("coeff").matrix(n, n));
    }
    if (kind == "coproduct") return r.coproduct();
    if (kind == "form") {
        const std::size_t n = r.at("dim").count();
        return BilForm(r.at("matrix").matrix(n, n));
    }
    if (kind == "map") return r.at("matrix").matrix(r.at("rows").count(), r.at("cols").count());
    if (kind == "bialgebra") {
        Bialgebra b{r.at("algebra").dend(), r.at("coproduct").coproduct()};
        if (b.cop.dim() != b.alg.dim()) throw ShapeError("bialgebra: coproduct and algebra dimensions differ");
        return b;
    }
    if (kind == "matched_pair") {
        MatchedPairLD mp{r.at("rep12").rep(), r.at("rep21").rep()};
        mp.validate_shape();
        return mp;
    }
    if (kind == "quadratic_rb") {
        DendAlgebra a = r.at("algebra").dend();
        const std::size_t n = a.dim();
        Matrix p = r.at("p").matrix(n, n);
        BilForm w(r.at("form").matrix(n, n));
        return QuadraticRB{std::move(a), std::move(p), std::move(w), r.at("weight").scalar()};
    }
    r.at("kind").fail("unknown kind '" + kind + "'");
}

}  // namespace

std::string_view StructureFile::kind() const {
    static constexpr std::string_view names[] = {"leibniz", "dendriform", "quadri",     "rep",
                                                 "rtensor", "coproduct",  "form",       "map",
                                                 "bialgebra", "matched_pair", "quadratic_rb"};
    return names[payload.index()];
}

std::size_t StructureFile::dim() const {
    return std::visit(Overload{
                          [](const DendRep& r) { return r.alg.dim(); },
                          [](const Matrix& m) { return m.rows(); },
                          [](const Bialgebra& b) { return b.alg.dim(); },
                          [](const MatchedPairLD& mp) { return mp.a1().dim() + mp.a2().dim(); },
                          [](const QuadraticRB& q) { return q.alg.dim(); },
                          [](const auto& x) { return x.dim(); },
                      },
                      payload);
}

std::vector<std::string> default_basis(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

StructureFile make_structure(StructureFile::Payload payload, std::string name) {
    StructureFile f{std::move(name), {}, {}, std::move(payload), {}};
    f.basis = default_basis(f.dim());
    return f;
}

StructureFile parse_structure(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    const Reader root(j, "");
    const std::string kind = root.at("kind").text();
    StructureFile f;
    f.payload = read_payload(kind, root);
    if (root.has("name")) f.name = root.at("name").text();
    if (root.has("source")) f.source = root.at("source").text();
    if (root.has("meta")) {
        const Reader m = root.at("meta");
        if (!j.at("meta").is_object()) m.fail("expected an object");
        for (const auto& [key, value] : j.at("meta").items()) f.meta[key] = m.at(key).text();
    }
    if (root.has("basis")) {
        const Reader b = root.at("basis");
        b.array_size(f.dim());
        for (std::size_t i = 0; i < f.dim(); ++i) f.basis.push_back(b.at(i).text());
    } else {
        f.basis = default_basis(f.dim());
    }
    return f;
}

StructureFile read_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_structure(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string write_structure(const StructureFile& f) {
    json j = write_payload(f.payload);
    j["kind"] = std::string(f.kind());
    j["basis"] = f.basis.empty() ? default_basis(f.dim()) : f.basis;
    if (!f.name.empty()) j["name"] = f.name;
    if (!f.source.empty()) j["source"] = f.source;
    if (!f.meta.empty()) j["meta"] = f.meta;
    return j.dump(2) + "\n";
}

void save_structure(const std::string& path, const StructureFile& f) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << write_structure(f);
}

}  // namespace ldb
