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
#include "jqforge/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "jqforge/error.hpp"

namespace jqforge {

Rref rref(QMatrix m, std::size_t ncols)
{
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].isZero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        DyadicScalar inv = DyadicScalar(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].isZero())
                continue;
            DyadicScalar f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (!m[row][j].isZero())
                    m[i][j] -= f * m[row][j];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m, std::size_t ncols)
{
    return rref(m, ncols).pivots.size();
}

std::vector<QVector> nullspace(const QMatrix& m, std::size_t ncols)
{
    Rref r = rref(m, ncols);
    std::vector<bool> isPivot(ncols, false);
    for (auto p : r.pivots)
        isPivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (isPivot[f])
            continue;
        QVector v(ncols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[r.pivots[i]] = -r.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& m, std::size_t ncols, const QVector& b)
{
    if (b.size() != m.size())
        throw DomainError("solve: right-hand side length mismatch");
    QMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols + 1);
        aug[i][ncols] = b[i];
    }
    Rref r = rref(std::move(aug), ncols + 1);
    QVector x(ncols);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == ncols)
            return std::nullopt;
        x[r.pivots[i]] = r.rows[i][ncols];
    }
    return x;
}

QVector primitiveIntegerVector(const QVector& v)
{
    mpz_class l = 1, g = 0;
    for (const auto& c : v)
        if (!c.isZero())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : v)
        if (!c.isZero()) {
            mpz_class n = c.num() * (l / c.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    if (g == 0)
        return v;
    int sign = 1;
    for (const auto& c : v)
        if (!c.isZero()) {
            sign = c.sign();
            break;
        }
    DyadicScalar f = DyadicScalar(l, g) * DyadicScalar(sign);
    QVector out;
    out.reserve(v.size());
    for (const auto& c : v)
        out.push_back(c * f);
    return out;
}

QVector matVec(const QMatrix& m, const QVector& v)
{
    QVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].isZero() && !m[i][j].isZero())
                out[i] += m[i][j] * v[j];
    return out;
}

/* ---- RowBasis ---- */

RowBasis::RowBasis(std::size_t ncols) : ncols_(ncols) {}

bool RowBasis::contains(const std::vector<mpz_class>& row) const
{
    if (row.size() != ncols_)
        throw DomainError("RowBasis: row length mismatch");
    std::vector<bool> isPivot(ncols_, false);
    for (auto p : pivots_)
        isPivot[p] = true;
    mpz_class lhs, rhs;
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (isPivot[j])
            continue;
        lhs = den_ * row[j];
        rhs = 0;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const mpz_class& a = row[pivots_[i]];
            if (sgn(a) != 0 && sgn(num_[i][j]) != 0)
                mpz_addmul(rhs.get_mpz_t(), a.get_mpz_t(), num_[i][j].get_mpz_t());
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool RowBasis::insert(const std::vector<mpz_class>& row)
{
    if (contains(row))
        return false;
    QMatrix r = rows();
    QVector q(row.begin(), row.end());
    r.push_back(std::move(q));
    rebuild(std::move(r));
    return true;
}

QMatrix RowBasis::rows() const
{
    QMatrix out;
    for (const auto& nr : num_) {
        QVector q;
        q.reserve(ncols_);
        for (const auto& a : nr)
            q.emplace_back(a, den_);
        out.push_back(std::move(q));
    }
    return out;
}

void RowBasis::rebuild(QMatrix m)
{
    Rref r = rref(std::move(m), ncols_);
    pivots_ = r.pivots;
    den_ = 1;
    for (const auto& row : r.rows)
        for (const auto& c : row)
            if (!c.isZero())
                mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.den().get_mpz_t());
    num_.assign(r.rows.size(), std::vector<mpz_class>(ncols_));
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t j = 0; j < ncols_; ++j)
            num_[i][j] = r.rows[i][j].num() * (den_ / r.rows[i][j].den());
}

/* ---- Lattice2 ---- */

Lattice2::Lattice2(const std::vector<QVector>& generators, std::size_t dim) : dim_(dim), ngen_(generators.size())
{
    std::vector<QVector> work = generators;
    std::vector<QVector> comb(ngen_, QVector(ngen_));
    for (std::size_t j = 0; j < ngen_; ++j) {
        if (work[j].size() != dim)
            throw DomainError("Lattice2: generator length mismatch");
        comb[j][j] = 1;
    }
    std::vector<std::size_t> active(ngen_);
    std::iota(active.begin(), active.end(), 0);
    for (std::size_t r = 0; r < dim && !active.empty(); ++r) {
        std::size_t best = active.size();
        long bestVal = kInfiniteValuation;
        for (std::size_t a = 0; a < active.size(); ++a) {
            long v = work[active[a]][r].valuation();
            if (v < bestVal) {
                bestVal = v;
                best = a;
            }
        }
        if (best == active.size())
            continue;
        std::size_t p = active[best];
        active.erase(active.begin() + static_cast<long>(best));
        for (std::size_t j : active) {
            if (work[j][r].isZero())
                continue;
            DyadicScalar q = work[j][r] / work[p][r];
            for (std::size_t i = r; i < dim; ++i)
                if (!work[p][i].isZero())
                    work[j][i] -= q * work[p][i];
            for (std::size_t i = 0; i < ngen_; ++i)
                if (!comb[p][i].isZero())
                    comb[j][i] -= q * comb[p][i];
        }
        pivotRow_.push_back(r);
        basis_.push_back(std::move(work[p]));
        combo_.push_back(std::move(comb[p]));
    }
}

std::optional<QVector> Lattice2::represent(const QVector& target) const
{
    if (target.size() != dim_)
        throw DomainError("Lattice2: target length mismatch");
    QVector t = target;
    QVector x(ngen_);
    std::size_t b = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
        while (b < pivotRow_.size() && pivotRow_[b] < r)
            ++b;
        if (t[r].isZero())
            continue;
        if (b == pivotRow_.size() || pivotRow_[b] != r)
            return std::nullopt;
        DyadicScalar c = t[r] / basis_[b][r];
        if (c.valuation() < 0)
            return std::nullopt;
        for (std::size_t i = r; i < dim_; ++i)
            if (!basis_[b][i].isZero())
                t[i] -= c * basis_[b][i];
        for (std::size_t i = 0; i < ngen_; ++i)
            if (!combo_[b][i].isZero())
                x[i] += c * combo_[b][i];
    }
    return x;
}

/* ---- F_2 ---- */

namespace {

struct F2Rref {
    std::vector<std::vector<int>> rows;
    std::vector<std::size_t> pivots;
};

F2Rref rrefF2(std::vector<std::vector<int>> m, std::size_t ncols)
{
    F2Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && !(m[piv][col] & 1))
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != row && (m[i][col] & 1))
                for (std::size_t j = col; j < ncols; ++j)
                    m[i][j] ^= m[row][j] & 1;
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

}  // namespace

std::vector<std::vector<int>> nullspaceF2(const std::vector<std::vector<int>>& m, std::size_t ncols)
{
    F2Rref r = rrefF2(m, ncols);
    std::vector<bool> isPivot(ncols, false);
    for (auto p : r.pivots)
        isPivot[p] = true;
    std::vector<std::vector<int>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (isPivot[f])
            continue;
        std::vector<int> v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[r.pivots[i]] = r.rows[i][f] & 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int>> solveF2(const std::vector<std::vector<int>>& m, std::size_t ncols,
                                        const std::vector<int>& b)
{
    std::vector<std::vector<int>> aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols + 1);
        aug[i][ncols] = b[i] & 1;
    }
    F2Rref r = rrefF2(std::move(aug), ncols + 1);
    std::vector<int> x(ncols, 0);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == ncols)
            return std::nullopt;
        x[r.pivots[i]] = r.rows[i][ncols] & 1;
    }
    return x;
}

}  // namespace jqforge
