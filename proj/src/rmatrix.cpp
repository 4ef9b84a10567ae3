#include "knotqm/rmatrix.hpp"

#include <stdexcept>

namespace knotqm {

LaurentMatrix::LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.resize(static_cast<size_t>(rows) * cols);
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const LaurentPoly& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& c) const {
    LaurentMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

LaurentMatrix LaurentMatrix::tensor(const LaurentMatrix& o) const {
    LaurentMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::dagger() const {
    LaurentMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).mirror();
    return r;
}

LaurentPoly LaurentMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    LaurentPoly t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<std::complex<double>> LaurentMatrix::eval(const NumericParams& p) const {
    std::vector<std::complex<double>> out(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].eval(p);
    return out;
}

nlohmann::json LaurentMatrix::to_json() const {
    nlohmann::json grid = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).to_json());
        grid.push_back(row);
    }
    return {{"rows", rows_}, {"cols", cols_}, {"entries", grid}};
}

LaurentMatrix u_matrix() {
    LaurentMatrix u(4, 4);
    u.at(1, 1) = LaurentPoly::monomial(2, Int(-1));
    u.at(1, 2) = LaurentPoly(1);
    u.at(2, 1) = LaurentPoly(1);
    u.at(2, 2) = LaurentPoly::monomial(-2, Int(-1));
    return u;
}

LaurentMatrix r_matrix(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("R-matrix sign must be +-1");
    const LaurentPoly A = LaurentPoly::monomial(sign);
    const LaurentPoly Ainv = LaurentPoly::monomial(-sign);
    return LaurentMatrix::identity(4).scaled(A) + u_matrix().scaled(Ainv);
}

LaurentMatrix sigma_matrix() {
    LaurentMatrix s(2, 2);
    s.at(0, 1) = LaurentPoly(1);
    s.at(1, 0) = LaurentPoly(1);
    return s;
}

LaurentMatrix embed_factor(const LaurentMatrix& m4, int strands, int i) {
    if (m4.rows() != 4 || m4.cols() != 4) throw std::invalid_argument("factor must be 4x4");
    if (i < 1 || i > strands - 1) throw std::invalid_argument("strand index out of range");
    LaurentMatrix m = LaurentMatrix::identity(1 << (i - 1));
    m = m.tensor(m4);
    if (strands - i - 1 > 0) m = m.tensor(LaurentMatrix::identity(1 << (strands - i - 1)));
    return m;
}

LaurentMatrix braid_representation(const BraidWord& w, int strand_budget) {
    w.validate();
    if (w.strands > strand_budget)
        throw std::invalid_argument("strand count exceeds the matrix size budget");
    LaurentMatrix m = LaurentMatrix::identity(1 << w.strands);
    for (int g : w.letters)
        m = m * embed_factor(r_matrix(g > 0 ? 1 : -1), w.strands, std::abs(g));
    return m;
}

LaurentPoly markov_trace(const LaurentMatrix& m, int strands) {
    const int dim = 1 << strands;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("matrix size does not match strand count");
    // rho = diag(-A^2, -A^-2) per strand
    LaurentPoly total;
    for (int x = 0; x < dim; ++x) {
        const LaurentPoly& diag = m.at(x, x);
        if (diag.is_zero()) continue;
        long exp = 0;
        for (int s = 0; s < strands; ++s) exp += ((x >> (strands - 1 - s)) & 1) ? -2 : 2;
        LaurentPoly weight = LaurentPoly::monomial(exp, (strands % 2 == 0) ? Int(1) : Int(-1));
        total += diag * weight;
    }
    return total;
}

FlatState flatten(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("flatten needs a square matrix");
    int half = 0;
    while ((1 << half) < m.rows()) ++half;
    if ((1 << half) != m.rows()) throw std::invalid_argument("dimension is not a power of two");
    FlatState v;
    v.strands = 2 * half;
    v.coords.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.coords.push_back(m.at(i, j));
    return v;
}

FlatState cap_state(int n_strands) {
    if (n_strands == 2) return flatten(LaurentMatrix::identity(2));
    if (n_strands < 4 || n_strands % 4 != 0)
        throw std::invalid_argument("cap state needs 2 or a multiple of 4 strands");
    const int m = n_strands / 2;
    LaurentMatrix op = LaurentMatrix::identity(1 << m);
    for (int i = 1; i <= m - 1; i += 2) op = op * embed_factor(u_matrix(), m, i);
    return flatten(op);
}

FlatState apply(const LaurentMatrix& m, const FlatState& v) {
    if (m.cols() != static_cast<int>(v.coords.size()))
        throw std::invalid_argument("dimension mismatch");
    FlatState r;
    r.strands = v.strands;
    r.coords.assign(m.rows(), LaurentPoly());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v.coords[j].is_zero())
                r.coords[i] += m.at(i, j) * v.coords[j];
    return r;
}

LaurentPoly state_overlap(const FlatState& bra, const FlatState& ket) {
    if (bra.coords.size() != ket.coords.size()) throw std::invalid_argument("dimension mismatch");
    LaurentPoly s;
    for (size_t i = 0; i < bra.coords.size(); ++i) s += bra.coords[i] * ket.coords[i];
    return s;
}

LaurentPoly matrix_element(const FlatState& bra, const LaurentMatrix& op, const FlatState& ket) {
    return state_overlap(bra, apply(op, ket));
}

bool check_pseudounitary(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    int n = 0;
    while ((1 << n) < m.rows()) ++n;
    if ((1 << n) != m.rows()) throw std::invalid_argument("dimension is not a power of two");
    LaurentMatrix sigma = LaurentMatrix::identity(1);
    for (int i = 0; i < n; ++i) sigma = sigma.tensor(sigma_matrix());
    return sigma * m.dagger() * sigma * m == LaurentMatrix::identity(m.rows());
}

}  // namespace knotqm
