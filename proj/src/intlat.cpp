#include "flat4/intlat.hpp"

#include "flat4/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace flat4 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    data_.reserve(std::size_t(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw Error("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<std::int64_t> IntMatrix::column(int c) const {
    std::vector<std::int64_t> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw Error("matrix dimension mismatch");
    IntMatrix p(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            auto a = x(i, k);
            if (a == 0) continue;
            for (int j = 0; j < y.cols_; ++j) p(i, j) += a * y(k, j);
        }
    return p;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix dimension mismatch");
    IntMatrix d = x;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= y.data_[i];
    return d;
}

bool IntMatrix::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

bool IntMatrix::is_orthogonal() const {
    return is_square() && (*this) * transpose() == identity(rows_);
}

std::int64_t IntMatrix::determinant() const {
    if (!is_square()) throw Error("determinant of non-square matrix");
    // Fraction-free Bareiss elimination.
    IntMatrix a = *this;
    const int n = rows_;
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (a(r, k) != 0) { swap = r; break; }
            if (swap < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return n == 0 ? 1 : sign * a(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw Error("matrix/vector dimension mismatch");
    IntVector out(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

RatVector operator*(const IntMatrix& m, const RatVector& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw Error("matrix/vector dimension mismatch");
    RatVector out(m.rows(), Rational(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) out[r] += Rational(m(r, c)) * v[c];
    return out;
}

Rational dot(const IntVector& u, const RatVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s += Rational(u[i]) * v[i];
    return s;
}

std::int64_t dot(const IntVector& u, const IntVector& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

namespace {

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// col[dst] -= q * col[src]
void axpy_col(IntMatrix& m, int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void axpy_row(IntMatrix& m, int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void negate_col(IntMatrix& m, int c) {
    for (int r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void negate_row(IntMatrix& m, int r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HermiteForm hf{m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& h = hf.H;
    IntMatrix& v = hf.V;
    int pivot_col = 0;
    for (int r = 0; r < h.rows() && pivot_col < h.cols(); ++r) {
        while (true) {
            int best = -1;
            for (int c = pivot_col; c < h.cols(); ++c)
                if (h(r, c) != 0 && (best < 0 || std::llabs(h(r, c)) < std::llabs(h(r, best)))) best = c;
            if (best < 0) break;
            swap_cols(h, pivot_col, best);
            swap_cols(v, pivot_col, best);
            bool done = true;
            for (int c = pivot_col + 1; c < h.cols(); ++c) {
                if (h(r, c) == 0) continue;
                std::int64_t q = h(r, c) / h(r, pivot_col);
                axpy_col(h, c, pivot_col, q);
                axpy_col(v, c, pivot_col, q);
                if (h(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, pivot_col) == 0) continue;
        if (h(r, pivot_col) < 0) {
            negate_col(h, pivot_col);
            negate_col(v, pivot_col);
        }
        for (int c = 0; c < pivot_col; ++c) {
            std::int64_t q = floor_div(h(r, c), h(r, pivot_col));
            axpy_col(h, c, pivot_col, q);
            axpy_col(v, c, pivot_col, q);
        }
        ++pivot_col;
    }
    hf.rank = pivot_col;
    return hf;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    HermiteForm hf = hermite_normal_form(m);
    std::vector<IntVector> basis;
    for (int c = hf.rank; c < m.cols(); ++c) basis.push_back(hf.V.column(c));
    return basis;
}

std::vector<std::int64_t> SmithForm::divisors() const {
    std::vector<std::int64_t> out;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm sf{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = sf.D;
    const int n = std::min(d.rows(), d.cols());
    for (int t = 0; t < n; ++t) {
        while (true) {
            int br = -1, bc = -1;
            for (int r = t; r < d.rows(); ++r)
                for (int c = t; c < d.cols(); ++c)
                    if (d(r, c) != 0 && (br < 0 || std::llabs(d(r, c)) < std::llabs(d(br, bc)))) {
                        br = r;
                        bc = c;
                    }
            if (br < 0) return sf;
            swap_rows(d, t, br);
            swap_rows(sf.U, t, br);
            swap_cols(d, t, bc);
            swap_cols(sf.V, t, bc);
            bool clean = true;
            for (int r = t + 1; r < d.rows(); ++r) {
                std::int64_t q = d(r, t) / d(t, t);
                axpy_row(d, r, t, q);
                axpy_row(sf.U, r, t, q);
                if (d(r, t) != 0) clean = false;
            }
            for (int c = t + 1; c < d.cols(); ++c) {
                std::int64_t q = d(t, c) / d(t, t);
                axpy_col(d, c, t, q);
                axpy_col(sf.V, c, t, q);
                if (d(t, c) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility chain: fold any offending row into the pivot row.
            int bad = -1;
            for (int r = t + 1; r < d.rows() && bad < 0; ++r)
                for (int c = t + 1; c < d.cols(); ++c)
                    if (d(r, c) % d(t, t) != 0) { bad = r; break; }
            if (bad < 0) break;
            axpy_row(d, t, bad, -1);
            axpy_row(sf.U, t, bad, -1);
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(sf.U, t);
        }
    }
    return sf;
}

std::vector<IntVector> fixed_lattice_basis(const IntMatrix& b) {
    if (!b.is_square()) throw Error("fixed lattice of non-square matrix");
    return integer_kernel(b - IntMatrix::identity(b.rows()));
}

FixedDecomposition decompose_fixed(const IntMatrix& b) {
    const int n = b.rows();
    const auto basis = fixed_lattice_basis(b);
    const std::size_t rank = basis.size();

    // Every {-1,0,1} fixed vector with positive leading entry, smallest supports first.
    std::vector<IntVector> candidates;
    IntVector v(n, -1);
    while (true) {
        int lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead < n && v[lead] == 1 && b * v == v) candidates.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[i] == 1) v[i--] = -1;
        if (i < 0) break;
        ++v[i];
    }
    auto support = [](const IntVector& w) {
        return static_cast<int>(std::count_if(w.begin(), w.end(), [](auto x) { return x != 0; }));
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const IntVector& x, const IntVector& y) { return support(x) < support(y); });

    FixedDecomposition dec;
    std::vector<bool> used(n, false);
    for (const auto& c : candidates) {
        if (dec.components.size() == rank) break;
        bool disjoint = true;
        for (int i = 0; i < n; ++i)
            if (c[i] != 0 && used[i]) disjoint = false;
        if (!disjoint) continue;
        for (int i = 0; i < n; ++i)
            if (c[i] != 0) used[i] = true;
        dec.components.push_back({c, support(c)});
    }
    if (dec.components.size() != rank)
        throw UnsupportedFixedLattice("unsupported fixed-lattice shape for B = " + b.str());
    // The components must generate the whole fixed lattice, not a sublattice.
    for (const auto& w : basis) {
        IntVector rebuilt(n, 0);
        for (const auto& comp : dec.components) {
            auto num = dot(comp.u, w);
            if (num % comp.d != 0)
                throw UnsupportedFixedLattice("unsupported fixed-lattice shape for B = " + b.str());
            for (int i = 0; i < n; ++i) rebuilt[i] += (num / comp.d) * comp.u[i];
        }
        if (rebuilt != w)
            throw UnsupportedFixedLattice("unsupported fixed-lattice shape for B = " + b.str());
    }
    std::sort(dec.components.begin(), dec.components.end(), [](const auto& x, const auto& y) {
        auto first = [](const IntVector& w) {
            return std::find_if(w.begin(), w.end(), [](auto e) { return e != 0; }) - w.begin();
        };
        return first(x.u) < first(y.u);
    });

    long long vol2 = 1;
    for (const auto& comp : dec.components) vol2 *= comp.d;
    dec.volume = sqrt_int(vol2);

    if (rank > 0) {
        IntMatrix rows(static_cast<int>(rank), n);
        for (std::size_t i = 0; i < rank; ++i)
            for (int j = 0; j < n; ++j) rows(static_cast<int>(i), j) = dec.components[i].u[j];
        dec.complement = integer_kernel(rows);
    } else {
        for (int i = 0; i < n; ++i) {
            IntVector e(n, 0);
            e[i] = 1;
            dec.complement.push_back(e);
        }
    }
    return dec;
}

Projection project_fixed(const RatVector& v, const FixedDecomposition& dec) {
    Projection out;
    out.projection.assign(v.size(), Rational(0));
    for (const auto& comp : dec.components) {
        Rational s = dot(comp.u, v);
        Rational coeff = s / Rational(comp.d);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (comp.u[i] != 0) out.projection[i] += coeff * Rational(comp.u[i]);
        out.offsets.push_back(fold_half(s));
    }
    return out;
}

RatVector reduce_mod_lattice(const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = frac(v[i]);
    return out;
}

std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace flat4
