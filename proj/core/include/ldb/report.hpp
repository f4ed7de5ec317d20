#pragma once

#include "ldb/linalg.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ldb {

/// One failed instance of a named identity. Indices are 0-based basis positions;
/// the residual is the left side minus the right side, flattened row-major when it is a matrix.
struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    Vec residual;
};

/// Collected violations of a family of identities. Empty means every identity holds.
class Report {
public:
    bool ok() const { return violations_.empty(); }
    explicit operator bool() const { return ok(); }

    const std::vector<Violation>& violations() const { return violations_; }
    std::size_t count(std::string_view identity) const;
    bool has(std::string_view identity) const { return count(identity) > 0; }
    /// Distinct failing labels in first-seen order.
    std::vector<std::string> failing() const;

    /// Records the residual when it is nonzero.
    void add(std::string identity, std::vector<std::size_t> indices, Vec residual);
    /// Records each nonzero column k of a residual matrix as a violation at (indices..., k).
    void add_columns(const std::string& identity, const std::vector<std::size_t>& indices, const Matrix& residual);
    /// Records a nonzero residual matrix as one violation at indices.
    void add_matrix(const std::string& identity, std::vector<std::size_t> indices, const Matrix& residual);
    void merge(const Report& other);

private:
    std::vector<Violation> violations_;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);
std::ostream& operator<<(std::ostream& os, const Report& r);

}  // namespace ldb
