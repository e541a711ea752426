#include "tropqrt/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace tropqrt {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Decimal or scientific literal -> exact fraction. Accepts the JSON
// number grammar plus a leading '+'.
Rat parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    std::string_view int_part, frac_part, exp_part;
    size_t dot = s.find('.');
    size_t e = s.find_first_of("eE");
    if (dot != std::string_view::npos && e != std::string_view::npos && dot > e)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    size_t int_end = std::min(dot, e);
    int_part = s.substr(0, int_end);
    if (dot != std::string_view::npos)
        frac_part = s.substr(dot + 1, (e == std::string_view::npos ? s.size() : e) - dot - 1);
    if (e != std::string_view::npos) exp_part = s.substr(e + 1);

    if (!all_digits(int_part) || (dot != std::string_view::npos && !all_digits(frac_part)))
        throw std::invalid_argument("bad rational literal: " + std::string(text));

    long exponent = 0;
    if (e != std::string_view::npos) {
        std::string_view ev = exp_part;
        bool eneg = false;
        if (!ev.empty() && (ev.front() == '+' || ev.front() == '-')) {
            eneg = ev.front() == '-';
            ev.remove_prefix(1);
        }
        if (!all_digits(ev) || ev.size() > 6)
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        exponent = std::strtol(std::string(ev).c_str(), nullptr, 10);
        if (eneg) exponent = -exponent;
    }

    mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
    exponent -= static_cast<long>(frac_part.size());

    mpz_class num = digits, den = 1;
    mpz_class ten = 10;
    if (exponent > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exponent));
        num *= scale;
    } else if (exponent < 0) {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exponent));
    }
    if (negative) num = -num;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

// Optional sign followed by digits only; GMP's own string parsing is
// avoided for validation because it ignores whitespace and treats
// leading zeros as octal.
mpz_class parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text))
        throw std::invalid_argument("bad rational literal: " + std::string(whole));
    mpz_class v(std::string(text), 10);
    return negative ? mpz_class(-v) : v;
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    if (text.find('.') != std::string_view::npos ||
        text.find('e') != std::string_view::npos || text.find('E') != std::string_view::npos)
        return parse_decimal(text);
    return Rat(parse_integer(text, text), 1);
}

std::string rational_to_string(const Rat& value) {
    return value.get_str();
}

std::string decimal_string(const Rat& value, int max_frac_digits) {
    mpz_class num = value.get_num(), den = value.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    mpz_class whole = num / den, rem = num % den;
    std::string out = (negative && (whole != 0 || rem != 0)) ? "-" : "";
    out += whole.get_str();
    if (rem != 0 && max_frac_digits > 0) {
        std::string frac;
        for (int i = 0; i < max_frac_digits && rem != 0; ++i) {
            rem *= 10;
            mpz_class digit = rem / den;
            frac += static_cast<char>('0' + digit.get_si());
            rem %= den;
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

Rat reduce_mod(const Rat& value, const Rat& modulus) {
    // floor(value / modulus), exactly.
    Rat q = value / modulus;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rat r = value - Rat(fl) * modulus;
    return r;
}

}  // namespace tropqrt
