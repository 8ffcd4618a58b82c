#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tba {

/// Exact rational number. mpq_class keeps values canonical (gcd = 1, den > 0)
/// after every operation we use, so equality is structural.
using Rat = mpq_class;

inline int sign(const Rat& r) { return sgn(r); }
inline Rat rmin(const Rat& a, const Rat& b) { return cmp(a, b) <= 0 ? a : b; }
inline Rat rmax(const Rat& a, const Rat& b) { return cmp(a, b) >= 0 ? a : b; }

/// "num/den" in lowest terms, e.g. "-3/7", "5/1".
inline std::string to_string(const Rat& r)
{
    Rat c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "num/den" or a bare integer "num".
inline Rat parse_rat(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw bad();
    std::string n(num);
    if (!n.empty() && n[0] == '+')
        n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(zn, zd);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1)
{
    Rat r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

} // namespace tba
