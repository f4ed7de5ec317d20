#include "ldb/report.hpp"

#include <algorithm>

namespace ldb {

std::size_t Report::count(std::string_view identity) const {
    return static_cast<std::size_t>(std::count_if(violations_.begin(), violations_.end(),
                                                  [&](const Violation& v) { return v.identity == identity; }));
}

std::vector<std::string> Report::failing() const {
    std::vector<std::string> out;
    for (const auto& v : violations_)
        if (std::find(out.begin(), out.end(), v.identity) == out.end()) out.push_back(v.identity);
    return out;
}

void Report::add(std::string identity, std::vector<std::size_t> indices, Vec residual) {
    if (is_zero(residual)) return;
    violations_.push_back({std::move(identity), std::move(indices), std::move(residual)});
}

void Report::add_columns(const std::string& identity, const std::vector<std::size_t>& indices, const Matrix& residual) {
    for (std::size_t k = 0; k < residual.cols(); ++k) {
        Vec col = residual.column(k);
        if (is_zero(col)) continue;
        auto idx = indices;
        idx.push_back(k);
        violations_.push_back({identity, std::move(idx), std::move(col)});
    }
}

void Report::add_matrix(const std::string& identity, std::vector<std::size_t> indices, const Matrix& residual) {
    if (residual.is_zero()) return;
    violations_.push_back({identity, std::move(indices), residual.data()});
}

void Report::merge(const Report& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

std::ostream& operator<<(std::ostream& os, const Violation& v) {
    os << v.identity << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << 'e' << v.indices[i] + 1;
    os << ") residual [";
    for (std::size_t i = 0; i < v.residual.size(); ++i) os << (i ? ", " : "") << v.residual[i];
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Report& r) {
    if (r.ok()) return os << "ok";
    for (const auto& v : r.violations()) os << v << '\n';
    return os;
}

}  // namespace ldb
