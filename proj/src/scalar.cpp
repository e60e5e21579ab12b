#include "hamcut/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace hamcut {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("bare sign is not a number");

    auto slash = s.find('/');
    Rat value;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed ratio '" + text + "'");
        mpz_class n, d;  // explicit base 10: leading zeros must not read as octal
        mpz_set_str(n.get_mpz_t(), num.c_str(), 10);
        mpz_set_str(d.get_mpz_t(), den.c_str(), 10);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rat q(n, d);
        q.canonicalize();
        value = q;
    } else {
        // decimal: digits [. digits] [e|E [sign] digits]
        std::string mantissa = s;
        long exponent = 0;
        auto epos = s.find_first_of("eE");
        if (epos != std::string::npos) {
            mantissa = s.substr(0, epos);
            std::string exp = s.substr(epos + 1);
            bool eneg = false;
            if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
                eneg = (exp[0] == '-');
                exp.erase(exp.begin());
            }
            if (!all_digits(exp)) throw ParseError("malformed exponent in '" + text + "'");
            exponent = std::strtol(exp.c_str(), nullptr, 10);
            if (eneg) exponent = -exponent;
        }
        std::string digits = mantissa;
        auto dot = mantissa.find('.');
        if (dot != std::string::npos) {
            digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
            exponent -= static_cast<long>(mantissa.size() - dot - 1);
        }
        if (!all_digits(digits)) throw ParseError("malformed number '" + text + "'");
        mpz_class num;
        mpz_set_str(num.get_mpz_t(), digits.c_str(), 10);
        mpz_class den(1);
        mpz_class ten(10);
        if (exponent >= 0) {
            mpz_class scale;
            mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exponent));
            num *= scale;
        } else {
            mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exponent));
        }
        Rat q(num, den);
        q.canonicalize();
        value = q;
    }
    return negative ? Rat(-value) : value;
}

}  // namespace hamcut
