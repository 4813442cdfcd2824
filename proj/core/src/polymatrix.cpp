/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dtlsum/polymatrix.hpp"

#include <array>

namespace dtlsum {

namespace {

constexpr std::array<std::pair<MatrixKind, std::string_view>, 7> kKindNames{{
    {MatrixKind::E_STAIRCASE, "E_STAIRCASE"},
    {MatrixKind::EPS_DOUBLED, "EPS_DOUBLED"},
    {MatrixKind::V_MINUS, "V_MINUS"},
    {MatrixKind::W_PLUS, "W_PLUS"},
    {MatrixKind::MU, "MU"},
    {MatrixKind::NU_DIFF, "NU_DIFF"},
    {MatrixKind::LAMBDA_DIFF, "LAMBDA_DIFF"},
}};

PolyRing ring_of(const PolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("empty matrix carries no variable set");
    return PolyRing(m(0, 0).vars());
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "?";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

const std::vector<MatrixKind>& all_matrix_kinds() {
    static const std::vector<MatrixKind> kinds = [] {
        std::vector<MatrixKind> v;
        for (const auto& [k, n] : kKindNames) v.push_back(k);
        return v;
    }();
    return kinds;
}

std::size_t matrix_size(MatrixKind kind, int L) {
    if (L < 1) throw SizeRuleError(std::string(to_string(kind)) + " needs L >= 1 variables, got " + std::to_string(L));
    auto n = static_cast<std::size_t>(L);
    switch (kind) {
        case MatrixKind::E_STAIRCASE:
        case MatrixKind::V_MINUS:
        case MatrixKind::W_PLUS: return n - 1;             // (L-1) x (L-1)
        case MatrixKind::EPS_DOUBLED: return 2 * n - 2;    // (2L-2) x (2L-2)
        case MatrixKind::MU:
        case MatrixKind::NU_DIFF: return n / 2;            // L/2 even, (L-1)/2 odd
        case MatrixKind::LAMBDA_DIFF: return n % 2 ? (n - 1) / 2 : n / 2 - 1;
    }
    throw SizeRuleError("unknown matrix kind");
}

std::string_view to_string(DetAlgo algo) {
    switch (algo) {
        case DetAlgo::AUTO: return "AUTO";
        case DetAlgo::COFACTOR: return "COFACTOR";
        case DetAlgo::BAREISS: return "BAREISS";
        case DetAlgo::GAUSS: return "GAUSS";
    }
    return "?";
}

namespace detail {

namespace {

// a + b w with integer parts; w^2 = w - 1
struct ZOmega {
    mpz_class a, b;

    bool is_zero() const { return a == 0 && b == 0; }
};

ZOmega mul(const ZOmega& x, const ZOmega& y) {
    mpz_class bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a + bd};
}

ZOmega sub(const ZOmega& x, const ZOmega& y) { return {x.a - y.a, x.b - y.b}; }

// x / p, known to be exact: x * conj(p) / N(p) with conj(c + d w) = (c + d) - d w
ZOmega divexact(const ZOmega& x, const ZOmega& p) {
    ZOmega q = mul(x, {p.a + p.b, -p.b});
    mpz_class n = p.a * p.a + p.a * p.b + p.b * p.b;
    mpz_divexact(q.a.get_mpz_t(), q.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.b.get_mpz_t(), q.b.get_mpz_t(), n.get_mpz_t());
    return q;
}

}  // namespace

Cyclo det_cyclo_integral(const Matrix<Cyclo>& in) {
    const std::size_t n = in.rows();
    if (n == 0) return Cyclo(1);
    std::vector<std::vector<ZOmega>> m(n, std::vector<ZOmega>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> row;
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            for (const Rational* r : {&in(i, j).a(), &in(i, j).b()}) {
                row.push_back(r->to_mpq());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.back().get_den_mpz_t());
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j].a = row[2 * j].get_num() * (l / row[2 * j].get_den());
            m[i][j].b = row[2 * j + 1].get_num() * (l / row[2 * j + 1].get_den());
        }
        scale *= l;
    }
    bool negate = false;
    ZOmega prev{1, 0};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Cyclo(0);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
        }
        prev = m[k][k];
    }
    const ZOmega& d = m[n - 1][n - 1];
    Cyclo r(Rational(mpq_class(d.a, scale)), Rational(mpq_class(d.b, scale)));
    return negate ? -r : r;
}

}  // namespace detail

PolyMatrix build_matrix(MatrixKind kind, const VarSetPtr& vars) {
    PolyRing ring(vars);
    Families<PolyRing> f(ring, ring.generators());
    return build_matrix(f, kind);
}

LaurentPoly det(const PolyMatrix& m, DetAlgo algo) {
    if (m.rows() == 0 && m.cols() == 0) throw std::invalid_argument("use the ring overload for 0x0 matrices");
    return det(ring_of(m), m, algo);
}

CentroBlocks<LaurentPoly> centro_blocks(const PolyMatrix& m) { return centro_blocks(ring_of(m), m); }

ReducedMatrix<LaurentPoly> row_column_reduce(const PolyMatrix& m, std::string_view z) {
    PolyRing ring = ring_of(m);
    return row_column_reduce(ring, m, ring.gen(z));
}

PolyMatrix substitute(const PolyMatrix& m, std::string_view var, const SubstImage& image) {
    if (m.rows() == 0 || m.cols() == 0) return m;
    PolyMatrix out(m.rows(), m.cols(), LaurentPoly());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), var, image);
    }
    // zero entries would otherwise keep the old variable set
    auto vars = out(0, 0).vars();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!same_vars(out(i, j).vars(), vars)) out(i, j) = out(i, j).rebase(vars);
        }
    }
    return out;
}

}  // namespace dtlsum
