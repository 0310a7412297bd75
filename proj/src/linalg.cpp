#include "qhs/linalg.hpp"

#include <stdexcept>

namespace qhs {

void sv_axpy(SparseVec& a, const SparseVec& b, const Rat& c) {
    if (c == 0) return;
    for (const auto& [k, v] : b) {
        Rat& slot = a[k];
        slot += v * c;
        if (slot == 0) a.erase(k);
    }
}

SparseVec Echelon::reduce(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) {
        auto p = pivot_.find(it->first);
        if (p == pivot_.end()) {
            ++it;
            continue;
        }
        Rat c = it->second;  // pivot rows are normalized to leading 1
        sv_axpy(v, rows_[p->second], -c);
        it = v.upper_bound(p->first);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int piv = v.begin()->first;
    Rat lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    // back-substitute into existing rows
    for (auto& row : rows_) {
        auto it = row.find(piv);
        if (it != row.end()) {
            Rat c = it->second;
            sv_axpy(row, v, -c);
        }
    }
    pivot_[piv] = (int)rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

Mat Mat::eye(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: size mismatch in product");
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Rat& w = o.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Mat Mat::scaled(const Rat& c) const {
    Mat out = *this;
    for (auto& v : out.a_) v *= c;
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

Rat Mat::trace() const {
    Rat t(0);
    for (int i = 0; i < r_ && i < c_; ++i) t += at(i, i);
    return t;
}

int Mat::rank() const {
    Mat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Rat lead = m.at(rank, col);
        for (int i = rank + 1; i < r_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / lead;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> Mat::kernel() const {
    // RREF, then read off free columns.
    Mat m = *this;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Rat lead = m.at(rank, col);
        for (int j = col; j < c_; ++j) m.at(rank, j) /= lead;
        for (int i = 0; i < r_; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(c_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(c_);
        v[free] = 1;
        for (int r = 0; r < (int)pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) return std::nullopt;
    Mat m = *this, inv = Mat::eye(r_);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        for (int j = 0; j < c_; ++j) {
            std::swap(m.at(piv, j), m.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        Rat lead = m.at(col, col);
        for (int j = 0; j < c_; ++j) {
            m.at(col, j) /= lead;
            inv.at(col, j) /= lead;
        }
        for (int i = 0; i < r_; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < c_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat mat_from_cols(const std::vector<std::vector<Rat>>& cols, int nrows) {
    Mat m(nrows, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j)
        for (int i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

std::vector<Rat> DenseSpan::reduce(std::vector<Rat> v) const {
    for (const auto& [col, row] : pivot_) {
        if (v[col] == 0) continue;
        Rat f = v[col];
        const auto& r = rows_[row];
        for (int j = 0; j < dim_; ++j)
            if (r[j] != 0) v[j] -= f * r[j];
    }
    return v;
}

bool DenseSpan::insert(std::vector<Rat> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) { piv = j; break; }
    if (piv < 0) return false;
    Rat lead = v[piv];
    for (auto& c : v) c /= lead;
    for (auto& row : rows_) {
        if (row[piv] == 0) continue;
        Rat f = row[piv];
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) row[j] -= f * v[j];
    }
    pivot_[piv] = (int)rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

bool DenseSpan::contains(const std::vector<Rat>& v) const {
    auto r = reduce(v);
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

std::vector<int> DenseSpan::free_columns() const {
    std::vector<int> out;
    for (int j = 0; j < dim_; ++j)
        if (!pivot_.count(j)) out.push_back(j);
    return out;
}

std::optional<std::vector<Rat>> DenseSpan::coordinates(const std::vector<Rat>& v) const {
    std::vector<Rat> coords(rows_.size(), Rat(0));
    std::vector<Rat> w = v;
    for (const auto& [col, row] : pivot_) {
        if (w[col] == 0) continue;
        Rat f = w[col];
        coords[row] = f;
        const auto& r = rows_[row];
        for (int j = 0; j < dim_; ++j)
            if (r[j] != 0) w[j] -= f * r[j];
    }
    for (const auto& c : w)
        if (c != 0) return std::nullopt;
    return coords;
}

} // namespace qhs
