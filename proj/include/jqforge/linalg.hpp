/*
 * Copyright 2026 The jqforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "jqforge/scalar.hpp"

namespace jqforge {

using QVector = std::vector<DyadicScalar>;
/* Row-major dense matrix. */
using QMatrix = std::vector<QVector>;

struct Rref {
    QMatrix rows;                    // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Rref rref(QMatrix m, std::size_t ncols);
std::size_t rank(const QMatrix& m, std::size_t ncols);

/*
 * Nullspace basis in reduced row-echelon order: one vector per free column f,
 * with 1 at f and zeros at the other free columns.
 */
std::vector<QVector> nullspace(const QMatrix& m, std::size_t ncols);

/* A solution of m x = b with all free variables zero, or nullopt. */
std::optional<QVector> solve(const QMatrix& m, std::size_t ncols, const QVector& b);

/* Scales v to a primitive integer vector whose first nonzero entry is positive. */
QVector primitiveIntegerVector(const QVector& v);

QVector matVec(const QMatrix& m, const QVector& v);

/*
 * Incremental span of integer row vectors over Q. Rows are kept in reduced
 * echelon form scaled by a common denominator so that membership tests run
 * in integer arithmetic.
 */
class RowBasis {
public:
    explicit RowBasis(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }

    bool contains(const std::vector<mpz_class>& row) const;
    /* Adds the row; true when it was independent of the current span. */
    bool insert(const std::vector<mpz_class>& row);

    /* Reduced echelon rows over Q. */
    QMatrix rows() const;

private:
    void rebuild(QMatrix r);

    std::size_t ncols_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<mpz_class>> num_;  // rows = num_ / den_
    mpz_class den_ = 1;
};

/*
 * Z_(2)-span of finitely many rational vectors (a lattice over the dyadic
 * integers). Echelonized by pivoting on minimal 2-adic valuation; every step
 * is unimodular over Z_(2), so membership and coefficients are exact.
 */
class Lattice2 {
public:
    Lattice2(const std::vector<QVector>& generators, std::size_t dim);

    std::size_t rank() const { return basis_.size(); }
    std::size_t generatorCount() const { return ngen_; }

    /* Coefficients over the original generators, all in Z_(2), or nullopt. */
    std::optional<QVector> represent(const QVector& target) const;
    bool contains(const QVector& target) const { return represent(target).has_value(); }

    /* Echelon basis vectors and their combinations over the generators. */
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<QVector>& combinations() const { return combo_; }

private:
    std::size_t dim_;
    std::size_t ngen_;
    std::vector<std::size_t> pivotRow_;
    std::vector<QVector> basis_;
    std::vector<QVector> combo_;
};

/* Linear algebra over F_2 on 0/1 vectors. */
std::vector<std::vector<int>> nullspaceF2(const std::vector<std::vector<int>>& m, std::size_t ncols);
std::optional<std::vector<int>> solveF2(const std::vector<std::vector<int>>& m, std::size_t ncols,
                                        const std::vector<int>& b);

}  // namespace jqforge
