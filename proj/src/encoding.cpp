#include "netcert/encoding.hpp"

#include <algorithm>
#include <numeric>

namespace netcert {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

const char* to_string(TransversalPolicy p) {
    return p == TransversalPolicy::lex_first_zero ? "lex-first-zero" : "minority-weight";
}

TransversalPolicy transversal_policy_from_string(const std::string& s) {
    if (s == "lex-first-zero") return TransversalPolicy::lex_first_zero;
    if (s == "minority-weight") return TransversalPolicy::minority_weight;
    throw InvalidParameter("unknown transversal policy: " + s);
}

int hamming_weight(const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), '1'));
}

int dot_mod2(const std::string& a, const std::string& b) {
    int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= (a[i] == '1' && b[i] == '1') ? 1 : 0;
    return acc;
}

namespace {

std::string bits_of(unsigned v, int m) {
    std::string s(m, '0');
    for (int i = 0; i < m; ++i)
        if (v & (1u << (m - 1 - i))) s[i] = '1';
    return s;
}

}  // namespace

EncodingScheme generate_transversal(int m, TransversalPolicy policy) {
    if (m < 2) throw InvalidParameter("generate_transversal: m < 2");
    if (m > 20) throw CapacityExceeded("generate_transversal: m too large");

    EncodingScheme scheme;
    scheme.m = m;
    scheme.policy = policy;
    const unsigned half = 1u << (m - 1);

    if (policy == TransversalPolicy::lex_first_zero) {
        // all strings with leading bit 0, lexicographic
        for (unsigned v = 0; v < half; ++v) scheme.strings.push_back(bits_of(v, m));
    } else {
        // lower-weight member of each complementary pair, ties to leading bit 0
        const unsigned full = (1u << m) - 1;
        for (unsigned v = 0; v < half; ++v) {
            const unsigned comp = full & ~v;  // v has leading bit 0, comp leading bit 1
            const int wv = __builtin_popcount(v), wc = __builtin_popcount(comp);
            scheme.strings.push_back(bits_of(wv <= wc ? v : comp, m));
        }
        std::sort(scheme.strings.begin(), scheme.strings.end(),
                  [](const std::string& a, const std::string& b) {
                      const int wa = hamming_weight(a), wb = hamming_weight(b);
                      return wa != wb ? wa < wb : a < b;
                  });
    }
    return scheme;
}

std::vector<std::vector<int>> sign_matrix(const EncodingScheme& scheme) {
    std::vector<std::vector<int>> s(scheme.m, std::vector<int>(scheme.strings.size()));
    for (int i = 0; i < scheme.m; ++i)
        for (std::size_t x = 0; x < scheme.strings.size(); ++x)
            s[i][x] = scheme.strings[x][i] == '1' ? -1 : 1;
    return s;
}

PairStats pair_statistics(const EncodingScheme& scheme, std::size_t j, std::size_t j2) {
    if (j >= scheme.strings.size() || j2 >= scheme.strings.size())
        throw InvalidParameter("pair_statistics: index out of range");
    const std::string& a = scheme.strings[j];
    const std::string& b = scheme.strings[j2];
    PairStats st;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool ba = a[i] == '1', bb = b[i] == '1';
        st.q += static_cast<int>(ba) + static_cast<int>(bb);
        st.d += (ba && bb) ? 1 : 0;
    }
    st.p = st.q - 2 * st.d;
    return st;
}

Rational predicted_anticommutator(const EncodingScheme& scheme, std::size_t j, std::size_t j2) {
    const PairStats st = pair_statistics(scheme, j, j2);
    return make_rational(2LL * scheme.m - 4LL * st.p, scheme.m);
}

ConstraintSet constraint_strings(int m) {
    if (m < 2) throw InvalidParameter("constraint_strings: m < 2");
    if (m > 20) throw CapacityExceeded("constraint_strings: m too large");
    ConstraintSet set;
    set.m = m;
    for (unsigned v = 0; v < (1u << m); ++v) {
        const int w = __builtin_popcount(v);
        if (w >= 3 && (w % 2) == 1) set.elements.push_back(bits_of(v, m));
    }
    return set;
}

}  // namespace netcert
