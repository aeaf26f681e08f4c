#include <emb4/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace emb4 {

namespace {

// locate entry of minimal nonzero |value| in A[t.., t..]; false if submatrix is zero
bool min_abs_pivot(const IntegerMatrix& A, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < A.rows(); ++i)
        for (std::size_t j = t; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            Int v = abs(A(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& A0) {
    IntegerMatrix A = A0;
    IntegerMatrix U = IntegerMatrix::identity(A.rows());
    IntegerMatrix V = IntegerMatrix::identity(A.cols());
    std::size_t n = std::min(A.rows(), A.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!min_abs_pivot(A, t, pi, pj)) break;
        for (;;) {
            if (pi != t) { A.swap_rows(t, pi); U.swap_rows(t, pi); }
            if (pj != t) { A.swap_cols(t, pj); V.swap_cols(t, pj); }

            bool clean = true;
            for (std::size_t i = t + 1; i < A.rows(); ++i) {
                if (A(i, t) == 0) continue;
                Int q = fdiv(A(i, t), A(t, t));
                A.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < A.cols(); ++j) {
                if (A(t, j) == 0) continue;
                Int q = fdiv(A(t, j), A(t, t));
                A.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (A(t, j) != 0) clean = false;
            }
            if (!clean) {
                min_abs_pivot(A, t, pi, pj);
                continue;
            }
            // pivot must divide the rest of the submatrix for the chain to hold
            bool divides = true;
            for (std::size_t i = t + 1; i < A.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < A.cols() && divides; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        A.add_row(t, i, 1);
                        U.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
            min_abs_pivot(A, t, pi, pj);
        }
        if (A(t, t) < 0) {
            A.scale_row(t, -1);
            U.scale_row(t, -1);
        }
    }
    return SmithDecomposition{A, U, V};
}

int exact_signature(const RationalMatrix& Q0) {
    if (!Q0.is_symmetric()) throw std::invalid_argument("exact_signature: matrix not symmetric");
    RationalMatrix Q = Q0;
    std::size_t n = Q.rows();
    int sig = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (Q(t, t) == 0) {
            // bring a nonzero diagonal entry forward, manufacturing one if needed
            std::size_t di = n;
            for (std::size_t i = t + 1; i < n; ++i)
                if (Q(i, i) != 0) { di = i; break; }
            if (di == n) {
                std::size_t oi = n, oj = n;
                for (std::size_t i = t; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (Q(i, j) != 0) { oi = i; oj = j; break; }
                if (oi == n) break; // zero block: degenerate rest contributes 0
                // diag is zero here, so after this Q(oi,oi) = 2*Q(oi,oj) != 0
                Q.add_row(oi, oj, 1);
                Q.add_col(oi, oj, 1);
                di = oi;
            }
            if (di != t) {
                Q.swap_rows(t, di);
                Q.swap_cols(t, di);
            }
        }
        Rat p = Q(t, t);
        sig += (p > 0) ? 1 : -1;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (Q(i, t) == 0) continue;
            Rat c = -Q(i, t) / p;
            Q.add_row(i, t, c);
            Q.add_col(i, t, c);
        }
    }
    return sig;
}

Mod2Solution solve_mod2(const IntegerMatrix& A, const std::vector<Int>& b) {
    std::size_t r = A.rows(), c = A.cols();
    if (b.size() != r) throw std::invalid_argument("solve_mod2: rhs length mismatch");
    std::vector<std::vector<std::uint8_t>> M(r, std::vector<std::uint8_t>(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) M[i][j] = static_cast<std::uint8_t>(mod_euclid(A(i, j), 2).convert_to<unsigned>());
        M[i][c] = static_cast<std::uint8_t>(mod_euclid(b[i], 2).convert_to<unsigned>());
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t sel = row;
        while (sel < r && M[sel][col] == 0) ++sel;
        if (sel == r) continue;
        std::swap(M[sel], M[row]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != row && M[i][col]) {
                for (std::size_t j = col; j <= c; ++j) M[i][j] ^= M[row][j];
            }
        pivot_col.push_back(col);
        ++row;
    }
    Mod2Solution out;
    for (std::size_t i = row; i < r; ++i)
        if (M[i][c]) return out; // inconsistent
    out.consistent = true;
    out.particular.assign(c, 0);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) out.particular[pivot_col[k]] = M[k][c];
    std::vector<std::uint8_t> is_pivot(c, 0);
    for (auto pc : pivot_col) is_pivot[pc] = 1;
    for (std::size_t fc = 0; fc < c; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint8_t> v(c, 0);
        v[fc] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = M[k][fc];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

RationalMatrix rational_inverse(const RationalMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = A.rows();
    RationalMatrix M = A, R = RationalMatrix::identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t sel = t;
        while (sel < n && M(sel, t) == 0) ++sel;
        if (sel == n) throw std::domain_error("singular");
        if (sel != t) { M.swap_rows(t, sel); R.swap_rows(t, sel); }
        Rat inv = Rat(1) / M(t, t);
        M.scale_row(t, inv);
        R.scale_row(t, inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t || M(i, t) == 0) continue;
            Rat c = -M(i, t);
            M.add_row(i, t, c);
            R.add_row(i, t, c);
        }
    }
    return R;
}

RationalMatrix rational_inverse(const IntegerMatrix& A) { return rational_inverse(to_rational(A)); }

Int determinant(const IntegerMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
    std::size_t n = A.rows();
    if (n == 0) return 1;
    IntegerMatrix M = A;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (M(t, t) == 0) {
            std::size_t sel = t + 1;
            while (sel < n && M(sel, t) == 0) ++sel;
            if (sel == n) return 0;
            M.swap_rows(t, sel);
            sgn = -sgn;
        }
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(t, t) - M(i, t) * M(t, j)) / prev; // Bareiss: exact
            M(i, t) = 0;
        }
        prev = M(t, t);
    }
    return sgn * M(n - 1, n - 1);
}

std::vector<std::vector<Rat>> rational_kernel(const RationalMatrix& A) {
    std::size_t r = A.rows(), c = A.cols();
    RationalMatrix M = A;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t sel = row;
        while (sel < r && M(sel, col) == 0) ++sel;
        if (sel == r) continue;
        if (sel != row) M.swap_rows(sel, row);
        Rat inv = Rat(1) / M(row, col);
        M.scale_row(row, inv);
        for (std::size_t i = 0; i < r; ++i)
            if (i != row && M(i, col) != 0) M.add_row(i, row, -M(i, col));
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::uint8_t> is_pivot(c, 0);
    for (auto pc : pivot_col) is_pivot[pc] = 1;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < c; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(c, Rat(0));
        v[fc] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -M(k, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> characteristic_polynomial(const RationalMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
    std::size_t n = A.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RationalMatrix M = RationalMatrix::identity(n); // M_0
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix AM = A * M;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rat(Int(k));
        M = AM;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k];
    }
    return c;
}

} // namespace emb4
