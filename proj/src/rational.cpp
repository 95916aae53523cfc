#include <robinson/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace robinson {

std::string to_string(const Rational & q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (! std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    bool negative = false;
    if (! s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (! all_digits(num) || ! all_digits(den))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        Integer q{std::string(den)};
        if (q == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        result = Rational(Integer(std::string(num)), q);
    }
    else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (! whole.empty() && ! all_digits(whole))
            || (! frac.empty() && ! all_digits(frac)))
            throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Integer num = whole.empty() ? Integer(0) : Integer(std::string(whole));
        if (! frac.empty())
            num = num * scale + Integer(std::string(frac));
        result = Rational(num, scale);
    }
    else {
        if (! all_digits(s))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        result = Rational(Integer(std::string(s)));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

} // namespace robinson
