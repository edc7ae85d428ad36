#include "symfano/lattice.hpp"

#include "symfano/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace symfano {

LatticeVector::LatticeVector(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords) {
        coords_.emplace_back(c);
    }
}

bool LatticeVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other)
{
    if (other.size() != size()) {
        fail(Errc::DimensionMismatch, "vector addition of different lengths");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other)
{
    if (other.size() != size()) {
        fail(Errc::DimensionMismatch, "vector subtraction of different lengths");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& factor)
{
    for (auto& c : coords_) {
        c *= factor;
    }
    return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << v[i];
    }
    return os << ')';
}

std::string to_string(const LatticeVector& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b)
{
    if (a.size() != b.size()) {
        fail(Errc::DimensionMismatch, "dot product of different lengths");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

namespace {

void require_common_length(std::span<const LatticeVector> vectors, std::size_t n)
{
    for (const auto& v : vectors) {
        if (v.size() != n) {
            fail(Errc::DimensionMismatch, "vector " + to_string(v) + " has length "
                                              + std::to_string(v.size()) + ", expected "
                                              + std::to_string(n));
        }
    }
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Row echelon form over Z by unimodular row operations. Keeps zero rows at the
// bottom so that the caller can read off transforms carried in extra columns.
void hnf_in_place(std::vector<std::vector<Integer>>& a, std::size_t ncols)
{
    const std::size_t nrows = a.size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        while (true) {
            std::size_t best = nrows;
            for (std::size_t i = row; i < nrows; ++i) {
                if (a[i][col] != 0 && (best == nrows || abs(a[i][col]) < abs(a[best][col]))) {
                    best = i;
                }
            }
            if (best == nrows) {
                break;
            }
            std::swap(a[row], a[best]);
            bool done = true;
            for (std::size_t i = row + 1; i < nrows; ++i) {
                if (a[i][col] == 0) {
                    continue;
                }
                Integer q = floor_div(a[i][col], a[row][col]);
                for (std::size_t j = col; j < a[i].size(); ++j) {
                    a[i][j] -= q * a[row][j];
                }
                if (a[i][col] != 0) {
                    done = false;
                }
            }
            if (done) {
                break;
            }
        }
        if (a[row][col] == 0) {
            continue;
        }
        if (a[row][col] < 0) {
            for (auto& x : a[row]) {
                x = -x;
            }
        }
        for (std::size_t i = 0; i < row; ++i) {
            Integer q = floor_div(a[i][col], a[row][col]);
            if (q != 0) {
                for (std::size_t j = col; j < a[i].size(); ++j) {
                    a[i][j] -= q * a[row][j];
                }
            }
        }
        ++row;
    }
}

std::vector<std::vector<Integer>> to_rows(std::span<const LatticeVector> vectors)
{
    std::vector<std::vector<Integer>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        rows.push_back(v.coords());
    }
    return rows;
}

bool is_zero_row(const std::vector<Integer>& row, std::size_t from, std::size_t to)
{
    for (std::size_t j = from; j < to; ++j) {
        if (row[j] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Integer>> transpose(const std::vector<std::vector<Integer>>& a,
                                            std::size_t ncols)
{
    std::vector<std::vector<Integer>> t(ncols, std::vector<Integer>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
            t[j][i] = a[i][j];
        }
    }
    return t;
}

} // namespace

bool is_primitive(const LatticeVector& v)
{
    if (v.size() == 0) {
        fail(Errc::DimensionMismatch, "is_primitive on an empty vector");
    }
    Integer g = 0;
    for (const auto& c : v) {
        g = gcd(g, c);
    }
    return g == 1;
}

Integer determinant(std::span<const LatticeVector> rows)
{
    const std::size_t n = rows.size();
    require_common_length(rows, n);
    if (n == 0) {
        return 1;
    }
    auto a = to_rows(rows);
    Integer sign = 1;
    Integer prev = 1;
    // Bareiss fraction-free elimination.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_unimodular(std::span<const LatticeVector> vectors)
{
    const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
    require_common_length(vectors, n);
    if (vectors.size() != n) {
        fail(Errc::DimensionMismatch, std::to_string(vectors.size()) + " vectors in dimension "
                                          + std::to_string(n));
    }
    return abs(determinant(vectors)) == 1;
}

std::size_t rank(std::span<const LatticeVector> vectors)
{
    if (vectors.empty()) {
        return 0;
    }
    const std::size_t n = vectors.front().size();
    require_common_length(vectors, n);
    auto a = to_rows(vectors);
    hnf_in_place(a, n);
    return static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [n](const auto& r) { return !is_zero_row(r, 0, n); }));
}

std::vector<LatticeVector> hermite_normal_form(std::span<const LatticeVector> rows)
{
    if (rows.empty()) {
        return {};
    }
    const std::size_t n = rows.front().size();
    require_common_length(rows, n);
    auto a = to_rows(rows);
    hnf_in_place(a, n);
    std::vector<LatticeVector> out;
    for (auto& r : a) {
        if (!is_zero_row(r, 0, n)) {
            out.emplace_back(std::move(r));
        }
    }
    return out;
}

std::vector<Integer> invariant_factors(std::span<const LatticeVector> vectors)
{
    if (vectors.empty()) {
        return {};
    }
    const std::size_t n = vectors.front().size();
    require_common_length(vectors, n);
    auto a = to_rows(vectors);
    std::size_t cols = n;
    // Alternate row and column echelon forms until the matrix is diagonal.
    while (true) {
        hnf_in_place(a, cols);
        a.erase(std::remove_if(a.begin(), a.end(),
                               [cols](const auto& r) { return is_zero_row(r, 0, cols); }),
                a.end());
        bool diagonal = true;
        for (std::size_t i = 0; i < a.size() && diagonal; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (i != j && a[i][j] != 0) {
                    diagonal = false;
                    break;
                }
            }
        }
        if (diagonal) {
            break;
        }
        a = transpose(a, cols);
        cols = a.empty() ? 0 : a.front().size();
    }
    std::vector<Integer> d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d.push_back(abs(a[i][i]));
    }
    // Enforce the divisibility chain d_0 | d_1 | ...
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = lcm(d[i], d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    return d;
}

std::vector<LatticeVector> integer_relations(std::span<const LatticeVector> vectors,
                                             std::size_t ambient_dim)
{
    require_common_length(vectors, ambient_dim);
    const std::size_t k = vectors.size();
    std::vector<std::vector<Integer>> a(k, std::vector<Integer>(ambient_dim + k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            a[i][j] = vectors[i][j];
        }
        a[i][ambient_dim + i] = 1;
    }
    hnf_in_place(a, ambient_dim + k);
    std::vector<LatticeVector> out;
    for (const auto& r : a) {
        if (is_zero_row(r, 0, ambient_dim) && !is_zero_row(r, ambient_dim, ambient_dim + k)) {
            out.emplace_back(std::vector<Integer>(r.begin() + static_cast<long>(ambient_dim), r.end()));
        }
    }
    return out;
}

SublatticeBasis saturate(std::span<const LatticeVector> vectors)
{
    if (vectors.empty()) {
        fail(Errc::ZeroSpan, "saturate of an empty list");
    }
    const std::size_t n = vectors.front().size();
    require_common_length(vectors, n);
    if (std::all_of(vectors.begin(), vectors.end(), [](const auto& v) { return v.is_zero(); })) {
        fail(Errc::ZeroSpan, "all input vectors are zero");
    }
    // The saturation is the double orthogonal: first the integer annihilator
    // of the inputs, then the integer annihilator of that.
    std::vector<LatticeVector> columns(n, LatticeVector(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            columns[j][i] = vectors[i][j];
        }
    }
    auto annihilator = integer_relations(columns, vectors.size());
    SublatticeBasis out;
    out.ambient_dim = n;
    out.saturated = true;
    if (annihilator.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            LatticeVector e(n);
            e[i] = 1;
            out.vectors.push_back(std::move(e));
        }
        return out;
    }
    std::vector<LatticeVector> ann_columns(n, LatticeVector(annihilator.size()));
    for (std::size_t i = 0; i < annihilator.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ann_columns[j][i] = annihilator[i][j];
        }
    }
    out.vectors = hermite_normal_form(integer_relations(ann_columns, annihilator.size()));
    return out;
}

bool is_saturated(const SublatticeBasis& basis)
{
    if (basis.vectors.empty()) {
        return true;
    }
    if (rank(basis.vectors) != basis.vectors.size()) {
        return false;
    }
    auto d = invariant_factors(basis.vectors);
    return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

namespace {

// Complement of a saturated family via the inverse of a unimodular transform
// that brings the family to lower-triangular form.
std::vector<LatticeVector> transform_complement(const std::vector<LatticeVector>& rows, std::size_t n)
{
    const std::size_t k = rows.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(k + n, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[j][i] = rows[i][j];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        a[j][k + j] = 1;
    }
    hnf_in_place(a, k);
    // a = [T | U] with U * rows^T = T; U unimodular.
    std::vector<LatticeVector> u;
    for (const auto& r : a) {
        u.emplace_back(std::vector<Integer>(r.begin() + static_cast<long>(k), r.end()));
    }
    auto inv = inverse(u);
    if (!inv) {
        fail(Errc::InternalInconsistency, "singular transform in complement");
    }
    // rows^T = U^{-1} T, so columns of U^{-1} beyond k complete the family.
    std::vector<LatticeVector> out;
    for (std::size_t c = k; c < n; ++c) {
        LatticeVector v(n);
        for (std::size_t r = 0; r < n; ++r) {
            if ((*inv)[r][c].get_den() != 1) {
                fail(Errc::InternalInconsistency, "non-integral unimodular inverse");
            }
            v[r] = (*inv)[r][c].get_num();
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

SublatticeBasis complement(const SublatticeBasis& basis)
{
    const std::size_t n = basis.ambient_dim;
    require_common_length(basis.vectors, n);
    if (!basis.saturated || !is_saturated(basis)) {
        fail(Errc::NotSaturated, "complement requires a saturated basis");
    }
    std::vector<LatticeVector> current = basis.vectors;
    std::vector<LatticeVector> chosen;
    // Prefer coordinate vectors, scanning from the last coordinate.
    for (std::size_t idx = n; idx-- > 0 && current.size() < n;) {
        LatticeVector e(n);
        e[idx] = 1;
        current.push_back(e);
        SublatticeBasis trial{current, n, true};
        if (is_saturated(trial)) {
            chosen.push_back(std::move(e));
        } else {
            current.pop_back();
        }
    }
    if (current.size() < n) {
        for (auto& v : transform_complement(current, n)) {
            chosen.push_back(std::move(v));
        }
    }
    SublatticeBasis out;
    out.ambient_dim = n;
    out.saturated = true;
    out.vectors = hermite_normal_form(chosen);
    return out;
}

std::vector<Rational> coefficients_in(std::span<const LatticeVector> vectors, const LatticeVector& p)
{
    const std::size_t n = p.size();
    require_common_length(vectors, n);
    const std::size_t k = vectors.size();
    if (rank(vectors) != k) {
        fail(Errc::LinearlyDependent, "coefficients_in requires linearly independent vectors");
    }
    // Augmented system: n equations, k unknowns.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = vectors[j][i];
        }
        a[i][k] = p[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            continue;
        }
        std::swap(a[row], a[piv]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != row && a[i][col] != 0) {
                Rational f = a[i][col];
                for (std::size_t j = col; j <= k; ++j) {
                    a[i][j] -= f * a[row][j];
                }
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i) {
        if (a[i][k] != 0) {
            fail(Errc::NotInSpan, to_string(p) + " is not in the rational span");
        }
    }
    std::vector<Rational> c(k, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        c[pivot_col[i]] = a[i][k];
    }
    return c;
}

std::optional<RationalMatrix> inverse(std::span<const LatticeVector> rows)
{
    const std::size_t n = rows.size();
    require_common_length(rows, n);
    RationalMatrix a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = rows[i][j];
        }
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[col], a[piv]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && a[i][col] != 0) {
                Rational f = a[i][col];
                for (std::size_t j = col; j < 2 * n; ++j) {
                    a[i][j] -= f * a[col][j];
                }
            }
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = a[i][n + j];
        }
    }
    return out;
}

std::vector<Rational> solve_with_inverse(const RationalMatrix& inv, const LatticeVector& p)
{
    const std::size_t n = inv.size();
    if (p.size() != n) {
        fail(Errc::DimensionMismatch, "point length does not match the cone dimension");
    }
    std::vector<Rational> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            c[j] += p[i] * inv[i][j];
        }
    }
    return c;
}

bool in_rational_span(std::span<const LatticeVector> vectors, const LatticeVector& p)
{
    if (p.is_zero()) {
        return true;
    }
    std::vector<LatticeVector> ext(vectors.begin(), vectors.end());
    const std::size_t r = rank(ext);
    ext.push_back(p);
    return rank(ext) == r;
}

std::optional<std::vector<Integer>> as_integers(std::span<const Rational> coeffs)
{
    std::vector<Integer> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.get_den() != 1) {
            return std::nullopt;
        }
        out.push_back(c.get_num());
    }
    return out;
}

} // namespace symfano
