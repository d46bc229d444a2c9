#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcert/errors.hpp"

namespace netcert {

// Small exact rational, used for the predicted anticommutator values.
struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

Rational make_rational(long long num, long long den);

enum class TransversalPolicy { lex_first_zero, minority_weight };

const char* to_string(TransversalPolicy p);
TransversalPolicy transversal_policy_from_string(const std::string& s);

// One bit string per complementary pair of length-m strings. Strings are
// '0'/'1' characters; character 0 is the bit selecting the sign for the
// central input i=1. Indices are 0-based throughout the API.
struct EncodingScheme {
    int m = 0;
    std::vector<std::string> strings;  // 2^{m-1} entries
    TransversalPolicy policy = TransversalPolicy::lex_first_zero;
};

// The odd-weight->=3 strings that generate the certified linear operator
// constraints; 2^{m-1} - m of them.
struct ConstraintSet {
    int m = 0;
    std::vector<std::string> elements;
};

struct PairStats {
    int q = 0;  // total ones across the two strings
    int d = 0;  // positions where both strings hold 1
    int p = 0;  // q - 2d
};

EncodingScheme generate_transversal(int m, TransversalPolicy policy);

// S[i][x] = (-1)^{y^x_i}, m rows of 2^{m-1} signs.
std::vector<std::vector<int>> sign_matrix(const EncodingScheme& scheme);

PairStats pair_statistics(const EncodingScheme& scheme, std::size_t j, std::size_t j2);

// {A_j, A_j'} = 2 - 4p/m, exact.
Rational predicted_anticommutator(const EncodingScheme& scheme, std::size_t j, std::size_t j2);

ConstraintSet constraint_strings(int m);

int hamming_weight(const std::string& s);
int dot_mod2(const std::string& a, const std::string& b);

}  // namespace netcert
