#pragma once

#include "ldb/algebra.hpp"

#include <cstddef>
#include <vector>

namespace ldb {

/// Negated transpose: the action on the dual module, <f*(x)u*, v> = -<u*, f(x)v>.
Matrix dual_map(const Matrix& f);
std::vector<Matrix> dual_maps(const std::vector<Matrix>& fs);
std::vector<Matrix> sum_maps(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
std::vector<Matrix> scale_maps(const Scalar& s, const std::vector<Matrix>& a);

/// Module over a Leibniz algebra: l(e_i), r(e_i) act on an m-dimensional space.
struct LeibnizRep {
    LeibnizAlgebra alg;
    std::size_t mdim = 0;
    std::vector<Matrix> l, r;

    LeibnizRep() = default;
    LeibnizRep(LeibnizAlgebra a, std::size_t m);
    void validate_shape() const;
};

/// Module over a dendriform algebra given by four action families on an m-dimensional space.
struct DendRep {
    DendAlgebra alg;
    std::size_t mdim = 0;
    std::vector<Matrix> lsucc, rsucc, lprec, rprec;

    DendRep() = default;
    /// Zero actions.
    DendRep(DendAlgebra a, std::size_t m);
    void validate_shape() const;

    std::vector<Matrix> lcirc() const { return sum_maps(lsucc, lprec); }
    std::vector<Matrix> rcirc() const { return sum_maps(rsucc, rprec); }
    std::vector<Matrix> lstar() const { return sum_maps(lcirc(), rcirc()); }
    std::vector<Matrix> lodot() const { return sum_maps(lsucc, rprec); }
    std::vector<Matrix> rodot() const { return sum_maps(rsucc, lprec); }

    friend bool operator==(const DendRep& a, const DendRep& b) = default;
};

/// Left and right multiplications of the algebra on itself.
DendRep regular_rep(const DendAlgebra& a);

/// Lr1 l(x o y) = [l(x), l(y)], Lr2 [l(x), r(y)] = r(x o y), Lr3 r(y)r(x) = -r(y)l(x).
Report check_leibniz_rep(const LeibnizRep& rep);

/// The nine representation identities R1..R9 on all basis pairs (indices (x, y)).
Report check_dend_rep(const DendRep& rep);

/// Consequences R10, R11a (l<(x.y) = 0), R11b (r<(x)l.(y) = 0) and R11c, the polarized
/// form of r<(x)l*(x) = 0.
Report check_dend_rep_consequences(const DendRep& rep);

/// (lcirc*, rodot*, -lprec*, -lstar*) on the dual module. Throws ContractError for an invalid rep.
DendRep dual_rep(const DendRep& rep);

/// The four Leibniz modules (l>, r<), (lo, ro), (lo*, -ro* - lo*), (l>*, -l.*).
std::vector<LeibnizRep> leibniz_rep_variants(const DendRep& rep);

/// Two dendriform algebras acting on each other. rep12 is A1 acting on A2, rep21 is A2 on A1.
struct MatchedPairLD {
    DendRep rep12;
    DendRep rep21;

    const DendAlgebra& a1() const { return rep12.alg; }
    const DendAlgebra& a2() const { return rep21.alg; }
    void validate_shape() const;

    friend bool operator==(const MatchedPairLD& a, const MatchedPairLD& b) = default;
};

struct MatchedPairLeib {
    LeibnizRep rep12;
    LeibnizRep rep21;

    const LeibnizAlgebra& a() const { return rep12.alg; }
    const LeibnizAlgebra& b() const { return rep21.alg; }
    void validate_shape() const;
};

/// Products on A1 (+) A2 (A1 basis first). No validity check.
DendAlgebra ld_sum(const MatchedPairLD& mp);
LeibnizAlgebra leibniz_sum(const MatchedPairLeib& mp);

struct MatchedPairLDResult {
    DendAlgebra sum;
    /// check_ld of the sum; the authoritative verdict.
    Report axioms;
    /// R1..R9 of both action quadruples, prefixed "rep12:" and "rep21:".
    Report reps;
    /// The eighteen compatibility conditions LDMP1..LDMP18 as listed.
    Report conditions;
    bool valid() const { return axioms.ok(); }
};

struct MatchedPairLeibResult {
    LeibnizAlgebra sum;
    Report axioms;
    Report reps;
    /// Leibniz identity of the sum restricted to the six mixed slot patterns, LeibMP1..LeibMP6.
    Report conditions;
    bool valid() const { return axioms.ok(); }
};

MatchedPairLDResult matched_pair_sum_ld(const MatchedPairLD& mp);
MatchedPairLeibResult matched_pair_sum_leibniz(const MatchedPairLeib& mp);

/// Sums the dendriform actions pairwise into Leibniz actions.
MatchedPairLeib collapse(const MatchedPairLD& mp);

/// Products on A (+) V with V a square-zero ideal.
DendAlgebra semidirect(const DendAlgebra& a, const DendRep& rep);

/// Products on A (+) V where V carries its own products (succ_v, prec_v) and A acts via rep.
DendAlgebra semidirect(const DendRep& rep, const DendAlgebra& v);

/// Conditions for V with products (succ_v, prec_v) and an A-action to form an
/// A-dendriform algebra: rep valid and the sum A (+) V satisfying the dendriform identities.
bool is_a_ld_algebra(const DendRep& rep, const DendAlgebra& v);
/// The list of compatibility identities ALD1..ALD9 for the same structure.
Report a_ld_conditions(const DendRep& rep, const DendAlgebra& v);

}  // namespace ldb
