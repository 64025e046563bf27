#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include "qaw/hopf.hpp"

using R = boost::multiprecision::cpp_rational;
using El = qaw::hopf::Element<R>;

// fixed rational specialization; q = root^2 so half-integer powers of q stay
// inside the field
static qaw::hopf::Algebra<R> make_algebra() { return qaw::hopf::Algebra<R>(R(2, 3)); }

TEST_CASE("defining relations in normal form") {
    auto A = make_algebra();
    El E = A.gen(qaw::hopf::Gen::E), F = A.gen(qaw::hopf::Gen::F), K = A.gen(qaw::hopf::Gen::K);
    El K2 = El::monomial({0, 2, 0}, R(1));
    El Km2 = El::monomial({0, -2, 0}, R(1));
    CHECK(A.mul(K, E) == A.mul(E, K).scaled(A.q));
    CHECK(A.mul(K, F) == A.mul(F, K).scaled(R(1) / A.q));
    CHECK(A.mul(E, F) - A.mul(F, E) == (K2 - Km2).scaled(R(1) / (A.q - R(1) / A.q)));
    CHECK(A.mul(K, A.gen(qaw::hopf::Gen::Kinv)) == El::one());
}

TEST_CASE("multiplication is associative on mixed words") {
    auto A = make_algebra();
    El x = El::monomial({2, -1, 1}, R(3, 5));
    El y = El::monomial({1, 2, 2}, R(-1, 2));
    El z = El::monomial({0, -3, 1}, R(7));
    CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
    CHECK(A.normal_form_of(x) == x);
}

TEST_CASE("star is an involutive antihomomorphism") {
    auto A = make_algebra();
    El x = El::monomial({1, 1, 2}, R(2, 7)) + El::monomial({0, -2, 1}, R(5));
    El y = El::monomial({2, 0, 0}, R(-3, 4));
    CHECK(A.star(A.star(x)) == x);
    CHECK(A.star(A.mul(x, y)) == A.mul(A.star(y), A.star(x)));
}

TEST_CASE("coproduct is a coassociative homomorphism") {
    auto A = make_algebra();
    El x = El::monomial({1, 0, 1}, R(1)) + El::monomial({0, 2, 0}, R(1, 3));
    El y = El::monomial({0, -1, 2}, R(4));
    CHECK(A.coproduct_n(A.mul(x, y), 1) ==
          A.tensor_mul(A.coproduct_n(x, 1), A.coproduct_n(y, 1)));
    auto dx = A.coproduct_n(x, 1);
    CHECK(A.apply_delta_slot(dx, 0) == A.apply_delta_slot(dx, 1));
}

TEST_CASE("twisted elements have near-primitive coproducts") {
    auto A = make_algebra();
    R s(3, 2), u(5, 4), t(7, 3);
    El K2 = El::monomial({0, 2, 0}, R(1));
    El Km2 = El::monomial({0, -2, 0}, R(1));
    El Y = A.Y(s, u), Yt = A.Ytilde(t, u);
    auto tens2 = [&](const El& a, const El& b) {
        return A.tensor_mul(A.embed(A.as_tensor(a), 2, 0), A.embed(A.as_tensor(b), 2, 1));
    };
    CHECK(A.coproduct_n(Y, 1) == tens2(K2, Y) + tens2(Y, El::one()));
    CHECK(A.coproduct_n(Yt, 1) == tens2(Yt, Km2) + tens2(El::one(), Yt));
}

TEST_CASE("S and T rebuild the opposite twisted element") {
    auto A = make_algebra();
    R s(3, 2), u(5, 4), t(7, 3);
    using K = qaw::hopf::Algebra<R>::STKind;
    El S = A.build_ST(K::S, s), T = A.build_ST(K::T, s);
    // both are independent of the twisting parameter they were built from
    CHECK(S == A.build_ST(K::S, R(11, 6)));
    CHECK(T == A.build_ST(K::T, R(11, 6)));
    R qpq = A.q + R(1) / A.q;
    El K2 = El::monomial({0, 2, 0}, R(1));
    El Km2 = El::monomial({0, -2, 0}, R(1));
    El rec = (S.scaled(u + R(1) / u) + T.scaled(A.q * u - R(1) / (A.q * u))).scaled(R(1) / qpq) +
             (El::one() - Km2).scaled(A.mu(t));
    CHECK(rec == A.Ytilde(t, u));
    El St = A.build_ST(K::Stilde, t), Tt = A.build_ST(K::Ttilde, t);
    El rec2 = (St.scaled(u + R(1) / u) + Tt.scaled(u / A.q - A.q / u)).scaled(R(1) / qpq) -
              (El::one() - K2).scaled(A.mu(s));
    CHECK(rec2 == A.Y(s, u));
}

TEST_CASE("nested twisted families commute") {
    auto A = make_algebra();
    R s(3, 2), u(5, 4), t(7, 3);
    const int N = 3;
    std::vector<qaw::hopf::Tensor<R>> ys, yts;
    for (int j = 1; j <= N; ++j) {
        ys.push_back(A.Yj(s, u, j, N));
        yts.push_back(A.Ytildej(t, u, j, N));
    }
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            CHECK(A.tensor_mul(ys[a], ys[b]) == A.tensor_mul(ys[b], ys[a]));
            CHECK(A.tensor_mul(yts[a], yts[b]) == A.tensor_mul(yts[b], yts[a]));
        }
}
