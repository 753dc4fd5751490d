#include "helly/rational.hpp"

#include <cctype>

#include "helly/errors.hpp"

namespace helly {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den)) {
        throw MalformedInputError("not a rational literal: '" + text + "'");
    }
    Integer p(num), q(den);
    if (q == 0) throw MalformedInputError("zero denominator in '" + text + "'");
    Rational value(p, q);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor_rational(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(value.get_mpq_t()), mpq_denref(value.get_mpq_t()));
    return q;
}

Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational result;
    mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
    mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
    result.canonicalize();
    return result;
}

std::optional<Rational> exact_nth_root(const Rational& value, unsigned n) {
    if (n == 0) throw MalformedInputError("zeroth root");
    if (value < 0) throw MalformedInputError("nth root of a negative rational");
    Integer num_root, den_root;
    const bool num_exact =
        mpz_root(num_root.get_mpz_t(), mpq_numref(value.get_mpq_t()), n) != 0;
    const bool den_exact =
        mpz_root(den_root.get_mpz_t(), mpq_denref(value.get_mpq_t()), n) != 0;
    if (!num_exact || !den_exact) return std::nullopt;
    Rational root(num_root, den_root);
    root.canonicalize();
    return root;
}

namespace {

// floor( value^(1/n) * 10^digits ) as an integer, value >= 0.
Integer root_floor_scaled(const Rational& value, unsigned n, unsigned digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer scale_n;
    mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), n);
    // floor of (num * 10^(n*digits) / den), then integer n-th root (floor).
    Integer scaled;
    Integer t = value.get_num() * scale_n;
    mpz_fdiv_q(scaled.get_mpz_t(), t.get_mpz_t(), mpq_denref(value.get_mpq_t()));
    Integer root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), n);
    return root;
}

}  // namespace

Rational nth_root_lower(const Rational& value, unsigned n, unsigned digits) {
    if (value < 0) throw MalformedInputError("nth root of a negative rational");
    if (auto exact = exact_nth_root(value, n)) return *exact;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational lo(root_floor_scaled(value, n, digits), scale);
    lo.canonicalize();
    return lo;
}

Rational nth_root_upper(const Rational& value, unsigned n, unsigned digits) {
    if (value < 0) throw MalformedInputError("nth root of a negative rational");
    if (auto exact = exact_nth_root(value, n)) return *exact;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational hi(root_floor_scaled(value, n, digits) + 1, scale);
    hi.canonicalize();
    return hi;
}

Integer binomial(unsigned n, unsigned k) {
    Integer result;
    if (k > n) return 0;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace helly
