#include "doctest.h"
#include "netcert/encoding.hpp"

using namespace netcert;

TEST_CASE("transversal examples") {
    CHECK(generate_transversal(2, TransversalPolicy::lex_first_zero).strings ==
          std::vector<std::string>{"00", "01"});
    CHECK(generate_transversal(3, TransversalPolicy::lex_first_zero).strings ==
          std::vector<std::string>{"000", "001", "010", "011"});
    CHECK(generate_transversal(3, TransversalPolicy::minority_weight).strings ==
          std::vector<std::string>{"000", "001", "010", "100"});
    CHECK_THROWS_AS(generate_transversal(1, TransversalPolicy::lex_first_zero),
                    InvalidParameter);
    CHECK_THROWS_AS(generate_transversal(21, TransversalPolicy::lex_first_zero),
                    CapacityExceeded);
}

TEST_CASE("scheme invariants for m <= 8, both policies") {
    for (int m = 2; m <= 8; ++m) {
        for (const auto policy :
             {TransversalPolicy::lex_first_zero, TransversalPolicy::minority_weight}) {
            const EncodingScheme scheme = generate_transversal(m, policy);
            REQUIRE(scheme.strings.size() == std::size_t{1} << (m - 1));
            // distinct and pairwise non-complementary
            for (std::size_t a = 0; a < scheme.strings.size(); ++a)
                for (std::size_t b = a + 1; b < scheme.strings.size(); ++b) {
                    CHECK(scheme.strings[a] != scheme.strings[b]);
                    std::string comp = scheme.strings[b];
                    for (char& ch : comp) ch = ch == '0' ? '1' : '0';
                    CHECK(scheme.strings[a] != comp);
                }
            // row orthogonality
            const auto s = sign_matrix(scheme);
            for (int i = 0; i < m; ++i)
                for (int r = 0; r < m; ++r) {
                    int sum = 0;
                    for (std::size_t x = 0; x < scheme.strings.size(); ++x)
                        sum += s[i][x] * s[r][x];
                    CHECK(sum == (i == r ? int(scheme.strings.size()) : 0));
                }
        }
    }
}

TEST_CASE("sign matrix examples") {
    const auto s3 = sign_matrix(generate_transversal(3, TransversalPolicy::minority_weight));
    CHECK(s3[0] == std::vector<int>{1, 1, 1, -1});
    const auto s2 = sign_matrix(generate_transversal(2, TransversalPolicy::lex_first_zero));
    CHECK(s2[1] == std::vector<int>{1, -1});
}

TEST_CASE("pair statistics and the hamming identity") {
    const EncodingScheme scheme = generate_transversal(3, TransversalPolicy::lex_first_zero);
    const PairStats st = pair_statistics(scheme, 0, 1);
    CHECK(st.q == 1);
    CHECK(st.d == 0);
    CHECK(st.p == 1);
    CHECK(pair_statistics(scheme, 2, 2).p == 0);
    const PairStats st23 = pair_statistics(scheme, 1, 2);
    CHECK(st23.q == 2);
    CHECK(st23.d == 0);
    CHECK(st23.p == 2);

    for (int m = 2; m <= 8; ++m)
        for (const auto policy :
             {TransversalPolicy::lex_first_zero, TransversalPolicy::minority_weight}) {
            const EncodingScheme sc = generate_transversal(m, policy);
            for (std::size_t j = 0; j < sc.strings.size(); ++j)
                for (std::size_t j2 = 0; j2 < sc.strings.size(); ++j2) {
                    int ham = 0;
                    for (int k = 0; k < m; ++k)
                        ham += sc.strings[j][k] != sc.strings[j2][k];
                    CHECK(pair_statistics(sc, j, j2).p == ham);
                }
        }
}

TEST_CASE("predicted anticommutators") {
    const EncodingScheme lex3 = generate_transversal(3, TransversalPolicy::lex_first_zero);
    CHECK(predicted_anticommutator(lex3, 0, 1) == make_rational(2, 3));
    CHECK(predicted_anticommutator(lex3, 0, 0) == make_rational(2, 1));
    CHECK(predicted_anticommutator(lex3, 2, 3) == make_rational(2, 3));
    const EncodingScheme min3 = generate_transversal(3, TransversalPolicy::minority_weight);
    CHECK(predicted_anticommutator(min3, 2, 3) == make_rational(-2, 3));

    // symmetry and bounds
    for (int m = 2; m <= 6; ++m) {
        const EncodingScheme sc = generate_transversal(m, TransversalPolicy::lex_first_zero);
        for (std::size_t j = 0; j < sc.strings.size(); ++j)
            for (std::size_t j2 = j; j2 < sc.strings.size(); ++j2) {
                const Rational r = predicted_anticommutator(sc, j, j2);
                CHECK(r == predicted_anticommutator(sc, j2, j));
                CHECK(r.value() >= -2.0);
                CHECK(r.value() <= 2.0);
            }
    }
}

TEST_CASE("constraint strings") {
    CHECK(constraint_strings(3).elements == std::vector<std::string>{"111"});
    CHECK(constraint_strings(2).elements.empty());
    CHECK(constraint_strings(4).elements ==
          std::vector<std::string>{"0111", "1011", "1101", "1110"});
    for (int m = 2; m <= 10; ++m) {
        const ConstraintSet cs = constraint_strings(m);
        CHECK(cs.elements.size() == (std::size_t{1} << (m - 1)) - m);
        for (const std::string& s : cs.elements) {
            CHECK(hamming_weight(s) >= 3);
            CHECK(hamming_weight(s) % 2 == 1);
        }
    }
}

TEST_CASE("constraints are realizable for the lex-first-zero scheme") {
    // sum_x (-1)^{(s xor e_r) . y^x} = 0 for every constraint string s and unit e_r
    for (int m = 2; m <= 6; ++m) {
        const EncodingScheme sc = generate_transversal(m, TransversalPolicy::lex_first_zero);
        for (const std::string& s : constraint_strings(m).elements)
            for (int r = 0; r < m; ++r) {
                std::string mask = s;
                mask[r] = mask[r] == '0' ? '1' : '0';
                int sum = 0;
                for (const std::string& y : sc.strings)
                    sum += dot_mod2(mask, y) ? -1 : 1;
                CHECK(sum == 0);
            }
    }
}

TEST_CASE("policy names round trip") {
    CHECK(transversal_policy_from_string(to_string(TransversalPolicy::lex_first_zero)) ==
          TransversalPolicy::lex_first_zero);
    CHECK(transversal_policy_from_string(to_string(TransversalPolicy::minority_weight)) ==
          TransversalPolicy::minority_weight);
    CHECK_THROWS_AS(transversal_policy_from_string("bogus"), InvalidParameter);
}
