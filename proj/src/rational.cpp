#include "sumcol/rational.hpp"

namespace sumcol {

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal_string(int digits) const {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero: floor((2*|num|*scale/den + 1) / 2)
    Integer num = numerator();
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scaled = num * scale * 2 + denominator();
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_mpz_t(), Integer(denominator() * 2).get_mpz_t());
    Integer ip = rounded / scale;
    Integer fp = rounded % scale;
    std::string out = neg && rounded != 0 ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

Integer binomial(unsigned long m, unsigned long n) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), m, n);
    return r;
}

Integer isqrt_floor(const Integer& x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Integer isqrt_ceil(const Integer& x) {
    Integer r = isqrt_floor(x);
    if (r * r < x) r += 1;
    return r;
}

}  // namespace sumcol
