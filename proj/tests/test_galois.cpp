#include <catch2/catch_amalgamated.hpp>

#include "lrss/galois.hpp"
#include "lrss/matrix.hpp"
#include "lrss/rng.hpp"

using namespace lrss;

namespace {

// independent inverse oracle: scan every candidate
Fe inverse_by_search(const Field& f, Fe x) {
    for (Fe y = 0; y < f.order(); ++y)
        if (f.mul(x, y) == 1) return y;
    throw std::logic_error("no inverse found");
}

// independent rank oracle for tiny matrices: largest nonsingular square minor
Fe det3(const Field& f, const std::vector<std::vector<Fe>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return f.sub(f.mul(m[0][0], m[1][1]), f.mul(m[0][1], m[1][0]));
    Fe d = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<std::vector<Fe>> sub(2, std::vector<Fe>(2));
        for (std::size_t r = 1; r < 3; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < 3; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Fe term = f.mul(m[0][j], det3(f, sub));
        d = (j % 2 == 0) ? f.add(d, term) : f.sub(d, term);
    }
    return d;
}

int rank_by_minors(const Matrix& m) {
    const Field& f = m.field();
    int best = 0;
    int maxk = std::min(m.rows(), m.cols());
    REQUIRE(maxk <= 3);
    for (int k = 1; k <= maxk; ++k) {
        std::vector<int> ri(k), ci(k);
        std::function<bool(int, int)> pick_rows = [&](int pos, int start) -> bool {
            if (pos == k) {
                std::function<bool(int, int)> pick_cols = [&](int cpos, int cstart) -> bool {
                    if (cpos == k) {
                        std::vector<std::vector<Fe>> sub(k, std::vector<Fe>(k));
                        for (int a = 0; a < k; ++a)
                            for (int b = 0; b < k; ++b) sub[a][b] = m.at(ri[a], ci[b]);
                        return det3(f, sub) != 0;
                    }
                    for (int c = cstart; c < m.cols(); ++c) {
                        ci[cpos] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int r = start; r < m.rows(); ++r) {
                ri[pos] = r;
                if (pick_rows(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("deterministic modulus search") {
    Field f16 = Field::extension(2, 4);
    // first irreducible in index order over GF(2) is x^4 + x + 1
    CHECK(f16.spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(f16.order() == 16);

    Field f27 = Field::extension(3, 3);
    CHECK(f27.order() == 27);
    CHECK(f27.spec().modulus.size() == 4);

    // same (p, N) always lands on the same spec
    CHECK(Field::extension(2, 4).spec().modulus == f16.spec().modulus);
}

TEST_CASE("invalid field specs rejected") {
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::extension(2, 0), std::invalid_argument);
    // x^2 + 1 is reducible over GF(2)
    CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 0, 1}}), std::invalid_argument);
    // non-monic
    CHECK_THROWS_AS(Field(FieldSpec{3, 2, {1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("field axioms exhaustively on small fields") {
    for (Field f : {Field::extension(2, 4), Field::extension(3, 3), Field::prime(13)}) {
        const Fe n = f.order();
        for (Fe x = 0; x < n; ++x) {
            CHECK(f.mul(x, 1) == x);
            CHECK(f.add(x, f.neg(x)) == 0);
            if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
        }
        for (Fe x = 0; x < n; ++x)
            for (Fe y = 0; y < n; ++y) {
                REQUIRE(f.add(x, y) == f.add(y, x));
                REQUIRE(f.mul(x, y) == f.mul(y, x));
            }
        for (Fe x = 0; x < n; ++x)
            for (Fe y = 0; y < n; ++y)
                for (Fe z = 0; z < n; ++z) {
                    REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                    REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
    }
}

TEST_CASE("inverse matches brute-force search oracle in GF(16)") {
    Field f = Field::extension(2, 4);
    for (Fe x = 1; x < 16; ++x) CHECK(f.inv(x) == inverse_by_search(f, x));
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("frobenius is the identity at power 0 and after N steps") {
    Field f = Field::extension(2, 4);
    for (Fe x = 0; x < 16; ++x) {
        CHECK(f.frobenius(x, 0) == x);
        CHECK(f.frobenius(x, 4) == x);
    }
}

TEST_CASE("frobenius is additive and base-linear") {
    for (Field f : {Field::extension(2, 4), Field::extension(3, 3)}) {
        const std::uint64_t p = f.characteristic();
        for (int i = 1; i <= f.degree(); ++i)
            for (Fe x = 0; x < f.order(); ++x)
                for (Fe y = 0; y < f.order(); ++y) {
                    REQUIRE(f.frobenius(f.add(x, y), i) == f.add(f.frobenius(x, i), f.frobenius(y, i)));
                }
        // scalar linearity over the prime subfield
        for (std::uint64_t a = 0; a < p; ++a)
            for (Fe x = 0; x < f.order(); ++x)
                REQUIRE(f.frobenius(f.mul(f.embed(a), x), 1) == f.mul(f.embed(a), f.frobenius(x, 1)));
    }
}

TEST_CASE("linearized evaluation") {
    Field f = Field::extension(2, 4);
    SplitMix64 rng(11);
    LinearizedPoly poly{{rng.uniform(f), rng.uniform(f), rng.uniform(f)}};

    CHECK(linearized_eval(f, poly, 0) == 0);

    LinearizedPoly id{{1}};
    for (Fe y = 0; y < 16; ++y) CHECK(linearized_eval(f, id, y) == y);

    for (Fe y1 = 0; y1 < 16; ++y1)
        for (Fe y2 = 0; y2 < 16; ++y2)
            REQUIRE(linearized_eval(f, poly, f.add(y1, y2)) ==
                    f.add(linearized_eval(f, poly, y1), linearized_eval(f, poly, y2)));
}

TEST_CASE("linearized interpolation round trip over GF(16)") {
    Field f = Field::extension(2, 4);
    std::vector<Fe> alphas = {f.basis(0), f.basis(1)};
    for (Fe a0 = 0; a0 < 16; ++a0)
        for (Fe a1 = 0; a1 < 16; ++a1) {
            LinearizedPoly poly{{a0, a1}};
            std::vector<Fe> vals = {linearized_eval(f, poly, alphas[0]), linearized_eval(f, poly, alphas[1])};
            LinearizedPoly back = linearized_interpolate(f, alphas, vals);
            REQUIRE(back.coeffs == poly.coeffs);
        }
}

TEST_CASE("single-point interpolation and singular Moore") {
    Field f = Field::extension(2, 4);
    Fe alpha = 7, v = 9;
    LinearizedPoly p = linearized_interpolate(f, {alpha}, {v});
    CHECK(p.coeffs == std::vector<Fe>{f.mul(v, f.inv(alpha))});

    // 1 and 1+... dependent points: {3, 3} are trivially GF(2)-dependent
    CHECK_THROWS_AS(linearized_interpolate(f, {3, 3}, {1, 2}), std::domain_error);
}

TEST_CASE("rank basics") {
    Field f = Field::prime(5);
    CHECK(Matrix::identity(f, 4).rank() == 4);
    CHECK(Matrix(f, 3, 5).rank() == 0);
}

TEST_CASE("Vandermonde rank matches the minor-enumeration oracle") {
    Field f = Field::prime(5);
    Matrix v = vandermonde(f, {0, 1, 2, 3}, 2);
    CHECK(v.rank() == 2);
    CHECK(rank_by_minors(v) == 2);

    // any t distinct points give rank t
    Matrix v3 = vandermonde(f, {1, 2, 4}, 3);
    CHECK(v3.rank() == 3);
    CHECK(rank_by_minors(v3) == 3);
}

TEST_CASE("Moore matrix ranks") {
    Field f = Field::extension(2, 4);
    CHECK(moore(f, {5}, 1).rank() == 1);
    // 1, x, x^2 are GF(2)-linearly independent
    Matrix m = moore(f, {f.basis(0), f.basis(1), f.basis(2)}, 3);
    CHECK(m.rank() == 3);
    CHECK(rank_by_minors(m) == 3);
    // a dependent triple drops rank
    Matrix md = moore(f, {f.basis(0), f.basis(1), f.add(f.basis(0), f.basis(1))}, 3);
    CHECK(md.rank() == 2);
}

TEST_CASE("rank invariance properties") {
    Field f = Field::prime(7);
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 2 + int(rng.below(4)), c = 2 + int(rng.below(4));
        Matrix m(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rng.uniform(f);
        int base = m.rank();

        Matrix swapped = m;
        int i1 = int(rng.below(r)), i2 = int(rng.below(r));
        for (int j = 0; j < c; ++j) std::swap(swapped.at(i1, j), swapped.at(i2, j));
        REQUIRE(swapped.rank() == base);

        Matrix scaled = m;
        Fe s = rng.uniform_nonzero(f);
        int row = int(rng.below(r));
        for (int j = 0; j < c; ++j) scaled.at(row, j) = f.mul(scaled.at(row, j), s);
        REQUIRE(scaled.rank() == base);

        REQUIRE(m.transpose().rank() == base);
    }
}

TEST_CASE("solve and inverse") {
    Field f = Field::prime(11);
    Matrix a = Matrix::from_rows(f, {{2, 1}, {1, 3}, {3, 4}});
    std::vector<Fe> x = {5, 7};
    auto b = a.mul_vec(x);
    auto sol = solve(a, b);
    REQUIRE(sol.unique());
    CHECK(sol.x == x);

    // perturb one observation: inconsistent
    auto bad = b;
    bad[2] = f.add(bad[2], 1);
    CHECK(solve(a, bad).status == LinearSolution::Status::inconsistent);

    // drop to a single equation: underdetermined
    Matrix a1 = a.select_rows({0});
    CHECK(solve(a1, {b[0]}).status == LinearSolution::Status::underdetermined);

    Matrix sq = Matrix::from_rows(f, {{2, 1}, {1, 3}});
    auto inv = sq.inverse();
    REQUIRE(inv.has_value());
    CHECK(sq.mul(*inv) == Matrix::identity(f, 2));

    Matrix sing = Matrix::from_rows(f, {{2, 1}, {4, 2}});
    CHECK(!sing.inverse().has_value());
}

TEST_CASE("coefficient round trip and embedding") {
    Field f = Field::extension(3, 3);
    for (Fe x = 0; x < f.order(); ++x) REQUIRE(f.from_coeffs(f.coeffs(x)) == x);
    CHECK(f.embed(5) == 2);
    CHECK(f.basis(2) == 9);
}
