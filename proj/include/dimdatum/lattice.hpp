#pragma once

// Integer lattices: kernels of integer matrices by unimodular column
// elimination, and row Hermite normal form as the canonical basis.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "root_datum.hpp"

namespace dimdatum {

/// Row Hermite normal form: echelon rows, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        // Euclid on column c among rows >= pivot_row
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = pivot_row; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || std::abs(rows[i][c]) < std::abs(rows[best][c])))
                    best = i;
            if (best == rows.size())
                break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0)
                    continue;
                const std::int64_t q = rows[i][c] / rows[pivot_row][c];
                for (std::size_t k = 0; k < cols; ++k)
                    rows[i][k] -= q * rows[pivot_row][k];
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[pivot_row][c] == 0)
            continue;
        if (rows[pivot_row][c] < 0)
            for (auto &x : rows[pivot_row])
                x = -x;
        const std::int64_t p = rows[pivot_row][c];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            std::int64_t q = rows[i][c] / p;
            if (rows[i][c] - q * p < 0)
                --q;
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] -= q * rows[pivot_row][k];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

/// Basis (as rows) of { x in Z^cols : m x = 0 }.
inline IntMatrix integer_kernel(IntMatrix m, std::size_t cols) {
    IntMatrix u(cols, Weight(cols, 0)); // columns of u track the column operations
    for (std::size_t k = 0; k < cols; ++k)
        u[k][k] = 1;
    auto column_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (auto &row : m)
            row[dst] -= q * row[src];
        for (auto &row : u)
            row[dst] -= q * row[src];
    };
    auto column_swap = [&](std::size_t a, std::size_t b) {
        for (auto &row : m)
            std::swap(row[a], row[b]);
        for (auto &row : u)
            std::swap(row[a], row[b]);
    };
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < m.size() && pivot < cols; ++i) {
        if (m[i].size() != cols)
            throw InputError("matrix rows have inconsistent lengths");
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = pivot; j < cols; ++j)
                if (m[i][j] != 0 && (best == cols || std::abs(m[i][j]) < std::abs(m[i][best])))
                    best = j;
            if (best == cols)
                break;
            column_swap(pivot, best);
            bool done = true;
            for (std::size_t j = pivot + 1; j < cols; ++j) {
                if (m[i][j] == 0)
                    continue;
                column_axpy(j, pivot, m[i][j] / m[i][pivot]);
                if (m[i][j] != 0)
                    done = false;
            }
            if (done) {
                ++pivot;
                break;
            }
        }
    }
    IntMatrix basis;
    for (std::size_t j = pivot; j < cols; ++j) {
        Weight v(cols);
        for (std::size_t k = 0; k < cols; ++k)
            v[k] = u[k][j];
        basis.push_back(std::move(v));
    }
    return hermite_normal_form(std::move(basis), cols);
}

/// Rank of an integer matrix.
inline std::size_t integer_rank(const IntMatrix &m, std::size_t cols) {
    return hermite_normal_form(m, cols).size();
}

/// Sublattice of the character lattice given by an HNF basis.
class CharacterLattice {
public:
    CharacterLattice(IntMatrix basis, std::size_t ambient_rank)
        : basis_(hermite_normal_form(std::move(basis), ambient_rank)), ambient_rank_(ambient_rank) {}

    const IntMatrix &basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t ambient_rank() const { return ambient_rank_; }

    bool contains(Weight v) const {
        if (v.size() != ambient_rank_)
            return false;
        for (const auto &row : basis_) {
            std::size_t c = 0;
            while (row[c] == 0)
                ++c;
            if (v[c] % row[c] != 0)
                return false;
            const std::int64_t q = v[c] / row[c];
            for (std::size_t k = 0; k < ambient_rank_; ++k)
                v[k] -= q * row[k];
        }
        for (auto x : v)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const CharacterLattice &, const CharacterLattice &) = default;

private:
    IntMatrix basis_;
    std::size_t ambient_rank_;
};

} // namespace dimdatum
