#pragma once

// Exact linear algebra over Q(i): fraction-free elimination, kernels, spans.

#include "wmha/finvec.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace wmha {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// Row echelon data produced by elimination: rows are in reduced form with unit pivots.
struct Echelon {
    Matrix rows;                    // reduced rows, one per pivot
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
};

/// Bareiss fraction-free forward elimination followed by back-substitution into
/// reduced row echelon form. Input rows may be arbitrarily many; work is done in
/// blocks so that only rank-many rows are ever carried forward.
Echelon reduce_rows(const Matrix& input, std::size_t cols);

/// Adds rows to an existing echelon form.
void extend_echelon(Echelon& ech, const Matrix& more);

/// Kernel basis of the homogeneous system given by the echelon rows.
Matrix kernel_basis(const Echelon& ech);

/// Reduces v against the echelon rows; zero result means v is in their span.
Row reduce_against(const Echelon& ech, Row v);

template <class K>
struct LinearConstraint {
    FinVec<K> lhs;
    Scalar rhs;
};

template <class K>
struct SolveResult {
    bool consistent = true;             // false: affine system has no solution
    std::optional<FinVec<K>> particular;  // a solution of the affine system
    std::vector<FinVec<K>> basis;        // basis of the homogeneous solution space

    bool zero_space() const { return consistent && basis.empty(); }
};

/// Solves sum_k lhs[k] * x_k = rhs over the listed unknowns. Keys in a constraint
/// that are not unknowns are an error.
template <class K>
SolveResult<K> solve_linear(const std::vector<LinearConstraint<K>>& constraints,
                            const std::vector<K>& unknowns) {
    std::map<K, std::size_t> column;
    for (std::size_t j = 0; j < unknowns.size(); ++j) column.emplace(unknowns[j], j);
    const std::size_t n = unknowns.size();

    Matrix rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) {
        Row r(n + 1);
        for (const auto& [k, v] : c.lhs) {
            auto it = column.find(k);
            if (it == column.end()) throw std::invalid_argument("constraint mentions a non-unknown key");
            r[it->second] = v;
        }
        r[n] = c.rhs;
        rows.push_back(std::move(r));
    }
    Echelon ech = reduce_rows(rows, n + 1);

    SolveResult<K> out;
    for (std::size_t p : ech.pivots)
        if (p == n) out.consistent = false;
    if (!out.consistent) return out;

    FinVec<K> part;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) part.add(unknowns[ech.pivots[r]], ech.rows[r][n]);
    out.particular = std::move(part);

    // Homogeneous part: drop the right-hand column.
    Echelon hom = ech;
    hom.cols = n;
    for (auto& r : hom.rows) r.resize(n);
    for (const Row& k : kernel_basis(hom)) {
        FinVec<K> v;
        for (std::size_t j = 0; j < n; ++j) v.add(unknowns[j], k[j]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

/// Dense coordinates of a vector with respect to an ordered key list.
template <class K>
Row coordinates(const FinVec<K>& v, const std::vector<K>& keys) {
    std::map<K, std::size_t> pos;
    for (std::size_t j = 0; j < keys.size(); ++j) pos.emplace(keys[j], j);
    Row r(keys.size());
    for (const auto& [k, c] : v) {
        auto it = pos.find(k);
        if (it == pos.end()) throw std::invalid_argument("vector has support outside the key list");
        r[it->second] = c;
    }
    return r;
}

/// Collects the union of supports in key order.
template <class K>
std::vector<K> support_keys(const std::vector<FinVec<K>>& vs) {
    std::map<K, bool> seen;
    for (const auto& v : vs)
        for (const auto& [k, c] : v) seen.emplace(k, true);
    std::vector<K> keys;
    keys.reserve(seen.size());
    for (const auto& [k, b] : seen) keys.push_back(k);
    return keys;
}

template <class K>
std::size_t rank_of(const std::vector<FinVec<K>>& vs) {
    auto keys = support_keys(vs);
    Matrix m;
    m.reserve(vs.size());
    for (const auto& v : vs) m.push_back(coordinates(v, keys));
    return reduce_rows(m, keys.size()).rank();
}

/// Is v in the span of vs?
template <class K>
bool in_span(const FinVec<K>& v, const std::vector<FinVec<K>>& vs) {
    std::vector<FinVec<K>> all = vs;
    all.push_back(v);
    return rank_of(all) == rank_of(vs);
}

/// Do the two families span the same subspace?
template <class K>
bool same_span(const std::vector<FinVec<K>>& a, const std::vector<FinVec<K>>& b) {
    std::vector<FinVec<K>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t r = rank_of(all);
    return rank_of(a) == r && rank_of(b) == r;
}

/// A basis (subset-free: echelon rows) for the span of vs.
template <class K>
std::vector<FinVec<K>> span_basis(const std::vector<FinVec<K>>& vs) {
    auto keys = support_keys(vs);
    Matrix m;
    for (const auto& v : vs) m.push_back(coordinates(v, keys));
    Echelon ech = reduce_rows(m, keys.size());
    std::vector<FinVec<K>> out;
    for (const Row& r : ech.rows) {
        FinVec<K> v;
        for (std::size_t j = 0; j < keys.size(); ++j) v.add(keys[j], r[j]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Expresses v as a combination of vs; nullopt when v is outside their span.
template <class K>
std::optional<std::vector<Scalar>> combination_of(const FinVec<K>& v, const std::vector<FinVec<K>>& vs) {
    std::vector<FinVec<K>> all = vs;
    all.push_back(v);
    auto keys = support_keys(all);
    std::vector<LinearConstraint<std::size_t>> cons;
    for (const K& k : keys) {
        LinearConstraint<std::size_t> c;
        for (std::size_t i = 0; i < vs.size(); ++i) c.lhs.add(i, vs[i][k]);
        c.rhs = v[k];
        cons.push_back(std::move(c));
    }
    std::vector<std::size_t> unknowns(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) unknowns[i] = i;
    auto res = solve_linear(cons, unknowns);
    if (!res.consistent) return std::nullopt;
    std::vector<Scalar> coeffs(vs.size());
    for (const auto& [i, c] : *res.particular) coeffs[i] = c;
    return coeffs;
}

/// Dense square matrix inverse; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

}  // namespace wmha
