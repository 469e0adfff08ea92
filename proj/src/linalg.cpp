#include "fpalg/linalg.hpp"

#include "fpalg/error.hpp"

#include <algorithm>
#include <map>

namespace fpalg {

void QMatrix::append_row(const std::vector<Rat>& row) {
    if (int(row.size()) != cols_)
        throw AlgebraError(Errc::invalid_input, "row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rat inv = at(r, c);
        for (int j = c; j < cols_; ++j) at(r, j) /= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Rat f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix m(*this);
    return int(m.rref().size());
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
    QMatrix m(*this);
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(int(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix QMatrix::stacked(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols())
        throw AlgebraError(Errc::invalid_input, "stack width mismatch");
    QMatrix m(0, a.cols());
    m.rows_ = a.rows_ + b.rows_;
    m.a_ = a.a_;
    m.a_.insert(m.a_.end(), b.a_.begin(), b.a_.end());
    return m;
}

std::optional<std::vector<Rat>> solve_linear(QMatrix A, std::vector<Rat> b) {
    if (int(b.size()) != A.rows())
        throw AlgebraError(Errc::invalid_input, "rhs size mismatch");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == A.cols()) return std::nullopt; // pivot in rhs column
    std::vector<Rat> x(A.cols(), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), A.cols());
    return x;
}

bool same_row_span(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) return false;
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return QMatrix::stacked(a, b).rank() == ra;
}

void SparseIntMat::add_row(std::vector<std::pair<int, Rat>> entries) {
    Int lcm = 1;
    for (auto& [c, v] : entries) lcm = ::lcm(lcm, Int(v.get_den()));
    std::vector<std::pair<int, Int>> row;
    row.reserve(entries.size());
    for (auto& [c, v] : entries) {
        Int num = Int(v.get_num()) * (lcm / Int(v.get_den()));
        if (num != 0) row.emplace_back(c, std::move(num));
    }
    add_int_row(std::move(row));
}

void SparseIntMat::add_int_row(std::vector<std::pair<int, Int>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!entries.empty()) rows_.push_back(std::move(entries));
}

namespace {

void make_primitive(std::vector<std::pair<int, Int>>& row) {
    Int g = 0;
    for (auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& [c, v] : row) v /= g;
}

// r2 -= (r2[pc]/r1[pc]) * r1, fraction-free: r2 <- (p1/g)*r2 - (p2/g)*r1.
std::vector<std::pair<int, Int>> eliminate(const std::vector<std::pair<int, Int>>& r1,
                                           const std::vector<std::pair<int, Int>>& r2,
                                           int pc, const Int& p1, const Int& p2) {
    Int g = gcd(p1, p2);
    Int m2 = p1 / g, m1 = p2 / g;
    std::vector<std::pair<int, Int>> out;
    out.reserve(r1.size() + r2.size());
    size_t i = 0, j = 0;
    while (i < r1.size() || j < r2.size()) {
        if (j == r2.size() || (i < r1.size() && r1[i].first < r2[j].first)) {
            out.emplace_back(r1[i].first, -m1 * r1[i].second);
            ++i;
        } else if (i == r1.size() || r2[j].first < r1[i].first) {
            out.emplace_back(r2[j].first, m2 * r2[j].second);
            ++j;
        } else {
            Int v = m2 * r2[j].second - m1 * r1[i].second;
            if (v != 0) out.emplace_back(r1[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    (void)pc;
    return out;
}

} // namespace

long SparseIntMat::rank() {
    // Bucket active rows by their leading column; repeatedly take a bucket,
    // keep its sparsest row as pivot, eliminate the rest.
    std::map<int, std::vector<std::vector<std::pair<int, Int>>>> buckets;
    for (auto& r : rows_) {
        make_primitive(r);
        buckets[r.front().first].push_back(std::move(r));
    }
    rows_.clear();
    long rank = 0;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        int col = it->first;
        auto rows = std::move(it->second);
        buckets.erase(it);
        size_t best = 0;
        for (size_t k = 1; k < rows.size(); ++k)
            if (rows[k].size() < rows[best].size()) best = k;
        std::swap(rows[0], rows[best]);
        const auto& pivot = rows[0];
        ++rank;
        for (size_t k = 1; k < rows.size(); ++k) {
            auto next = eliminate(pivot, rows[k], col, pivot.front().second,
                                  rows[k].front().second);
            if (next.empty()) continue;
            make_primitive(next);
            int lead = next.front().first;
            buckets[lead].push_back(std::move(next));
        }
    }
    return rank;
}

} // namespace fpalg
