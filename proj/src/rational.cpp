#include <lierealise/error.hpp>
#include <lierealise/rational.hpp>

#include <cctype>
#include <vector>

namespace lierealise {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.remove_suffix(1);
    }
    auto slash = trimmed.find('/');
    auto num = trimmed.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : trimmed.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
        throw Error(errc::parse_error, "not a rational number: '" + std::string(text) + "'");
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw Error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Rational factorial(unsigned k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return Rational(r);
}

Integer multinomial(const std::vector<unsigned> &parts)
{
    unsigned total = 0;
    for (auto p : parts) {
        total += p;
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), total);
    for (auto p : parts) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), p);
        r /= f;
    }
    return r;
}

} // namespace lierealise
