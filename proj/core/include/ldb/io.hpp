#pragma once

#include "ldb/bialgebra.hpp"
#include "ldb/quadri.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ldb {

/// One structure per document. Products are stored as c[i][j][k] with e_i . e_j = sum_k c[i][j][k] e_k,
/// matrices as arrays of rows, scalars as "p/q" strings.
struct StructureFile {
    using Payload = std::variant<LeibnizAlgebra, DendAlgebra, QuadriAlgebra, DendRep, Tensor2, CoProduct, BilForm,
                                 Matrix, Bialgebra, MatchedPairLD, QuadraticRB>;

    std::string name;
    std::string source;
    /// Labels of the basis; defaults to e1..en when absent.
    std::vector<std::string> basis;
    Payload payload;
    /// Free-form annotations written by constructions (e.g. a classification verdict).
    std::map<std::string, std::string> meta;

    /// One of leibniz, dendriform, quadri, rep, rtensor, coproduct, form, map, bialgebra, matched_pair, quadratic_rb.
    std::string_view kind() const;
    std::size_t dim() const;
};

/// Throws ParseError (with the JSON path of the offending entry) or ShapeError.
StructureFile parse_structure(std::string_view text);
StructureFile read_structure(const std::string& path);

/// Deterministic text: keys sorted, two-space indent, trailing newline.
std::string write_structure(const StructureFile& f);
void save_structure(const std::string& path, const StructureFile& f);

/// Wraps a payload with default labels e1..en.
StructureFile make_structure(StructureFile::Payload payload, std::string name = {});

std::vector<std::string> default_basis(std::size_t n);

}  // namespace ldb
