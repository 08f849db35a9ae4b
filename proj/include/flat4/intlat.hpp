#pragma once

#include "flat4/qfield.hpp"
#include "flat4/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flat4 {

/// Dense integer matrix with explicit dimensions (row-major).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    IntMatrix transpose() const;
    std::vector<std::int64_t> column(int c) const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;
    friend auto operator<=>(const IntMatrix& x, const IntMatrix& y) = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_diagonal() const;
    /// Integral and B * B^t = Id.
    bool is_orthogonal() const;
    std::int64_t determinant() const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

using IntVector = std::vector<std::int64_t>;

/// Four (or n) exact rational coordinates.
using RatVector = std::vector<Rational>;

IntVector operator*(const IntMatrix& m, const IntVector& v);
RatVector operator*(const IntMatrix& m, const RatVector& v);
Rational dot(const IntVector& u, const RatVector& v);
std::int64_t dot(const IntVector& u, const IntVector& v);

/// One rank-1 piece of a fixed lattice: a primitive {-1,0,1} vector and its support size.
struct FixedComponent {
    IntVector u;
    int d = 0;
};

/// Disjoint-support Z-basis of Lambda^B = ker(B - Id) on Z^n plus a basis of the
/// complementary sublattice Z^n cap (fixed space)^perp.
struct FixedDecomposition {
    std::vector<FixedComponent> components;
    std::vector<IntVector> complement;
    QuadNumber volume;  // vol(Lambda^B) = prod sqrt(d_i)

    int rank() const { return static_cast<int>(components.size()); }
};

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V = D
    std::vector<std::int64_t> divisors() const;  // diagonal of D
};

/// Column-style Hermite reduction: returns (H, V) with M * V = H, V unimodular,
/// H lower-echelon with positive pivots and zero trailing columns.
struct HermiteForm {
    IntMatrix H, V;
    int rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Saturated Z-basis of the integer kernel { v in Z^n : M v = 0 }.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

SmithForm smith_normal_form(const IntMatrix& m);

/// Z-basis of ker(B - Id) cap Z^n.
std::vector<IntVector> fixed_lattice_basis(const IntMatrix& b);

/// Throws UnsupportedFixedLattice when no disjoint-support {-1,0,1} basis exists.
FixedDecomposition decompose_fixed(const IntMatrix& b);

struct Projection {
    RatVector projection;          // p_B(v)
    std::vector<Rational> offsets; // (v . u_i) mod 1, folded into [0, 1/2]
};

Projection project_fixed(const RatVector& v, const FixedDecomposition& dec);

/// Reduces coordinates into [0, 1).
RatVector reduce_mod_lattice(const RatVector& v);

std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);

}  // namespace flat4
