#include <catch2/catch_amalgamated.hpp>

#include <dt/symfunc.hpp>

using namespace dt;

TEST_CASE("characters: small tables by hand") {
    // S_3
    CHECK(mn_character(Partition{3}, Partition{3}) == 1);
    CHECK(mn_character(Partition{3}, Partition{2, 1}) == 1);
    CHECK(mn_character(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{3}) == 1);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{1, 1, 1}) == 1);
    // S_4 spot checks
    CHECK(mn_character(Partition{2, 2}, Partition{1, 1, 1, 1}) == 2);
    CHECK(mn_character(Partition{2, 2}, Partition{2, 1, 1}) == 0);
    CHECK(mn_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(mn_character(Partition{2, 2}, Partition{3, 1}) == -1);
    CHECK(mn_character(Partition{2, 2}, Partition{4}) == 0);
    CHECK(mn_character(Partition{3, 1}, Partition{2, 1, 1}) == 1);
    CHECK(mn_character(Partition{3, 1}, Partition{4}) == -1);
    CHECK(mn_character(Partition{}, Partition{}) == 1);
    CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), error);
}

TEST_CASE("characters: column orthogonality") {
    for (int d = 1; d <= 6; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Integer acc(0);
                for (const auto& la : parts)
                    acc += mn_character(la, mu) * mn_character(la, nu);
                CHECK(acc == (mu == nu ? z_factor(mu) : Integer(0)));
            }
    }
}

TEST_CASE("characters: conjugation twists by sign") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& la : partitions_of(d))
            for (const auto& nu : partitions_of(d)) {
                Integer lhs = mn_character(la.conjugate(), nu);
                Integer rhs = mn_character(la, nu);
                if ((d - nu.length()) % 2 != 0) rhs = -rhs;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("dimension = d!/hooks") {
    for (int d = 1; d <= 6; ++d) {
        Integer fact(1);
        for (int i = 2; i <= d; ++i) fact *= i;
        for (const auto& la : partitions_of(d)) {
            Partition ones(std::vector<int>(d, 1));
            CHECK(mn_character(la, ones) * hook_product(la) == fact);
        }
    }
}

TEST_CASE("principal specialization: hook formula vs character sum") {
    long T = 12;
    for (int d = 1; d <= 5; ++d)
        for (const auto& la : partitions_of(d)) {
            // s_la(1,q,...) = sum_mu chi^la_mu / z_mu prod_i 1/(1-q^{mu_i})
            QSeries<Rational> viachar(T);
            for (const auto& mu : partitions_of(d)) {
                QSeries<Rational> p = QSeries<Rational>::one(T);
                for (int k : mu.parts())
                    p *= (QSeries<Rational>::one(T) - QSeries<Rational>::q_pow(k, T)).inv();
                viachar += p * Rational(mn_character(la, mu), z_factor(mu));
            }
            CHECK(agree(schur_principal(la, T), viachar));
        }
}

TEST_CASE("power sums at the sign-twisted point") {
    long T = 10;
    QSeries<Rational> p2 = powersum_neg_principal(2, T);
    // 1/(1-q^2)
    for (long n = 0; n <= T; ++n) CHECK(p2.coeff(n) == ((n % 2 == 0) ? 1 : 0));
    QSeries<Rational> p1 = powersum_neg_principal(1, T);
    // 1/(1+q)
    for (long n = 0; n <= T; ++n) CHECK(p1.coeff(n) == ((n % 2 == 0) ? 1 : -1));
    CHECK(agree(powersum_neg_principal(Partition{2, 1}, T), p2 * p1));
}

TEST_CASE("monomial / power-sum transitions") {
    // closed forms at d = 3
    auto C3 = monomial_in_powersums(3);
    CHECK(C3[Partition{3}][Partition{3}] == 1);
    CHECK(C3[Partition{2, 1}][Partition{2, 1}] == 1);
    CHECK(C3[Partition{2, 1}][Partition{3}] == -1);
    CHECK(C3[Partition{1, 1, 1}][Partition{1, 1, 1}] == Rational(1, 6));
    CHECK(C3[Partition{1, 1, 1}][Partition{2, 1}] == Rational(-1, 2));
    CHECK(C3[Partition{1, 1, 1}][Partition{3}] == Rational(1, 3));

    // p expansion closed forms at d = 2: p_11 = m_2 + 2 m_11, p_2 = m_2
    auto R2 = powersum_in_monomials(2);
    CHECK(R2[Partition{1, 1}][Partition{2}] == 1);
    CHECK(R2[Partition{1, 1}][Partition{1, 1}] == 2);
    CHECK(R2[Partition{2}][Partition{2}] == 1);
    CHECK(R2[Partition{2}].count(Partition{1, 1}) == 0);

    // round trip at d = 4,5: C * R must be the identity
    for (int d = 4; d <= 5; ++d) {
        auto R = powersum_in_monomials(d);
        auto C = monomial_in_powersums(d);
        for (const auto& la : partitions_of(d))
            for (const auto& nu : partitions_of(d)) {
                Rational acc(0);
                for (const auto& mu : partitions_of(d)) {
                    auto a = C[la].find(mu);
                    if (a == C[la].end()) continue;
                    auto b = R[mu].find(nu);
                    if (b == R[mu].end()) continue;
                    acc += a->second * b->second;
                }
                CHECK(acc == (la == nu ? 1 : 0));
            }
    }
}

TEST_CASE("exact linear algebra") {
    Matrix<Rational> A = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve_linear(A, std::vector<Rational>{Rational(5), Rational(10)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 3);
    // rectangular consistent system
    Matrix<Rational> B = {{Rational(1), Rational(0)},
                          {Rational(0), Rational(1)},
                          {Rational(1), Rational(1)}};
    auto y = solve_linear(B, std::vector<Rational>{Rational(2), Rational(3), Rational(5)});
    CHECK(y[0] == 2);
    CHECK(y[1] == 3);
    // inconsistent must throw
    CHECK_THROWS_AS(
        solve_linear(B, std::vector<Rational>{Rational(2), Rational(3), Rational(4)}), error);
    // singular must throw
    Matrix<Rational> S = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_linear(S, std::vector<Rational>{Rational(1), Rational(2)}), error);
    // inverse round trip over the function field
    RatFunc t1 = RatFunc::var(1), t2 = RatFunc::var(2);
    Matrix<RatFunc> M = {{t1, t2}, {t2, t1}};
    auto Minv = mat_inverse(M, RatFunc(Rational(1)));
    auto I = mat_mul(M, Minv);
    CHECK(I[0][0] == RatFunc(Rational(1)));
    CHECK(I[0][1].is_zero());
    CHECK(I[1][0].is_zero());
    CHECK(I[1][1] == RatFunc(Rational(1)));
}

TEST_CASE("Schur expansion in power sums") {
    // s_(1) = p_1
    auto s1 = schur_in_powersums(Partition{1});
    REQUIRE(s1.size() == 1);
    CHECK(s1.at(Partition{1}) == 1);
    // s_(2) = p_11/2 + p_2/2, s_(11) = p_11/2 - p_2/2
    auto s2 = schur_in_powersums(Partition{2});
    CHECK(s2.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(s2.at(Partition{2}) == Rational(1, 2));
    auto s11 = schur_in_powersums(Partition{1, 1});
    CHECK(s11.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(s11.at(Partition{2}) == Rational(-1, 2));

    // orthonormality under the standard Hall pairing <p_la, p_mu> = z delta
    for (int d = 1; d <= 6; ++d) {
        auto parts = partitions_of(d);
        std::map<Partition, std::map<Partition, Rational>> exp;
        for (const auto& mu : parts) exp[mu] = schur_in_powersums(mu);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Rational dot(0);
                for (const auto& la : parts) {
                    auto a = exp[mu].find(la);
                    auto b = exp[nu].find(la);
                    if (a != exp[mu].end() && b != exp[nu].end())
                        dot += a->second * b->second * Rational(z_factor(la));
                }
                CHECK(dot == (mu == nu ? Rational(1) : Rational(0)));
            }
    }
}

TEST_CASE("dimension identity: sum of squared hook quotients") {
    for (int d = 1; d <= 7; ++d) {
        Integer dfact(1);
        for (int i = 2; i <= d; ++i) dfact *= i;
        Rational total(0);
        for (const auto& la : partitions_of(d)) {
            Rational dim = Rational(dfact, hook_product(la));
            CHECK(is_integer(dim));
            total += dim * dim;
        }
        CHECK(total == Rational(dfact));
    }
}
