#include "hamcut/obstruction.hpp"

#include <cctype>

namespace hamcut {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

TruncatedClass parse_class(const std::string& text, std::size_t trunc) {
    TruncatedClass c = TruncatedClass::zero(trunc);
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty class literal");
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = strip(s.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? s.size() + 1 : next + 1;
        if (term.empty()) throw ParseError("empty term in class '" + text + "'");
        std::size_t deg;
        if (term == "0") continue;
        if (term == "1") {
            deg = 0;
        } else if (term == "a") {
            deg = 1;
        } else if (term.size() > 2 && term[0] == 'a' && term[1] == '^') {
            std::string num = term.substr(2);
            for (char ch : num)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError("malformed exponent in class term '" + term + "'");
            deg = std::stoul(num);
        } else {
            throw ParseError("unrecognized class term '" + term + "'");
        }
        // terms beyond the truncation denote zero; adding a term twice cancels
        if (deg <= trunc) c.set_coeff(deg, !c.coeff(deg));
    }
    return c;
}

std::string class_to_string(const TruncatedClass& c) {
    std::string out;
    for (std::size_t k = 0; k <= c.trunc(); ++k) {
        if (!c.coeff(k)) continue;
        if (!out.empty()) out += "+";
        if (k == 0) out += "1";
        else if (k == 1) out += "a";
        else out += "a^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string projective_to_string(const ProjectiveClass& p) {
    std::string out;
    for (std::size_t j = 0; j < p.d.size(); ++j) {
        if (p.d[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = class_to_string(p.d[j]);
        if (j == 0) {
            out += coeff;
        } else {
            std::string power = j == 1 ? "T" : "T^" + std::to_string(j);
            if (coeff == "1") out += power;
            else if (coeff.find('+') != std::string::npos) out += "(" + coeff + ")*" + power;
            else out += coeff + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hamcut
