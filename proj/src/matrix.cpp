#include "qh/matrix.hpp"

#include <sstream>

namespace qh {

ScalMat::ScalMat(std::size_t n, std::vector<Coeff> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw std::invalid_argument("ScalMat: expected " + std::to_string(n * n) + " entries");
}

ScalMat ScalMat::identity(std::size_t n) {
    ScalMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ScalMat::is_zero() const {
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

ScalMat operator+(const ScalMat& a, const ScalMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    ScalMat r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

ScalMat operator-(const ScalMat& a, const ScalMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    ScalMat r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

ScalMat operator*(const ScalMat& a, const ScalMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    const auto n = a.n_;
    ScalMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

std::string ScalMat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j > 0) os << " , ";
            os << (*this)(i, j).str();
        }
        os << " ]\n";
    }
    return os.str();
}

ScalMat kron(const ScalMat& a, const ScalMat& b) {
    const auto na = a.dim();
    const auto nb = b.dim();
    ScalMat r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return r;
}

ScalMat scale_mat(const Coeff& c, const ScalMat& m) {
    ScalMat r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = c * m(i, j);
    return r;
}

ScalMat inverse(const ScalMat& m) {
    // Gauss-Jordan with unit pivots; for the unitriangular g and g (x) g this
    // is plain back substitution.
    const auto n = m.dim();
    ScalMat a = m;
    ScalMat inv = ScalMat::identity(n);
    auto swap_rows = [n](ScalMat& x, std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n; ++j) std::swap(x(r1, j), x(r2, j));
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<Coeff> pinv;
        std::size_t pr = c;
        for (; pr < n; ++pr) {
            if (a(pr, c).is_zero()) continue;
            if ((pinv = try_inv(a(pr, c)))) break;
        }
        if (!pinv) throw NotInvertible("no unit pivot in column " + std::to_string(c + 1));
        if (pr != c) {
            swap_rows(a, pr, c);
            swap_rows(inv, pr, c);
        }
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= *pinv;
            inv(c, j) *= *pinv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const Coeff f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

ScalMat similarity(const ScalMat& gg, const ScalMat& r) { return inverse(gg) * r * gg; }

ScalMat limit_mat(const ScalMat& m) {
    ScalMat r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            try {
                r(i, j) = Coeff(limit_q1(m(i, j)));
            } catch (const PoleAtQ1& e) {
                throw MatrixPoleAtQ1(i, j, e.what());
            }
        }
    return r;
}

namespace {

void require4(const ScalMat& r) {
    if (r.dim() != 4) throw std::invalid_argument("expected a 4x4 R-matrix");
}

}  // namespace

// Triple index (i,j,k) flattens to 4i + 2j + k.
ScalMat lift12(const ScalMat& r) {
    require4(r);
    ScalMat out(8);
    for (int i = 0; i < 2; ++i) for (int j = 0; j < 2; ++j) for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) for (int m = 0; m < 2; ++m) {
        out(4 * i + 2 * j + k, 4 * l + 2 * m + k) = r(2 * i + j, 2 * l + m);
    }
    return out;
}

ScalMat lift23(const ScalMat& r) {
    require4(r);
    ScalMat out(8);
    for (int i = 0; i < 2; ++i) for (int j = 0; j < 2; ++j) for (int k = 0; k < 2; ++k)
    for (int m = 0; m < 2; ++m) for (int n = 0; n < 2; ++n) {
        out(4 * i + 2 * j + k, 4 * i + 2 * m + n) = r(2 * j + k, 2 * m + n);
    }
    return out;
}

ScalMat lift13(const ScalMat& r) {
    require4(r);
    ScalMat out(8);
    for (int i = 0; i < 2; ++i) for (int j = 0; j < 2; ++j) for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) for (int n = 0; n < 2; ++n) {
        out(4 * i + 2 * j + k, 4 * l + 2 * j + n) = r(2 * i + k, 2 * l + n);
    }
    return out;
}

ScalMat qybe_residual(const ScalMat& r) {
    const ScalMat r12 = lift12(r);
    const ScalMat r13 = lift13(r);
    const ScalMat r23 = lift23(r);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

AlgMat4 embed1(const AlgMat2& a) {
    AlgMat4 out;
    for (std::size_t i = 0; i < 2; ++i) for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) for (std::size_t l = 0; l < 2; ++l)
        if (j == l) out(2 * i + j, 2 * k + l) = a(i, k);
    return out;
}

AlgMat4 embed2(const AlgMat2& a) {
    AlgMat4 out;
    for (std::size_t i = 0; i < 2; ++i) for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) for (std::size_t l = 0; l < 2; ++l)
        if (i == k) out(2 * i + j, 2 * k + l) = a(j, l);
    return out;
}

AlgMat4 rtt_residual(const ScalMat& r, const AlgMat2& a, const RuleSystem& rs, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("rtt sign must be +1 or -1");
    const AlgMat4 a1 = embed1(a);
    const AlgMat4 a2 = embed2(a);
    const AlgMat4 lhs = r * mat_mul(a1, a2);
    AlgMat4 rhs = mat_mul(a2, a1) * r;
    if (sign == -1) {
        return (lhs + rhs).normal_form(rs);
    }
    return (lhs - rhs).normal_form(rs);
}

AlgMat2 conjugate(const ScalMat& g, const AlgMat2& a) {
    if (g.dim() != 2) throw std::invalid_argument("conjugate: expected a 2x2 matrix");
    return g * a * inverse(g);
}

}  // namespace qh
