#include "shc/field.hpp"

#include <cctype>

namespace shc {

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

mpq_class parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0)
        throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rationals::Elem Rationals::inv(const Elem& a) const
{
    if (sgn(a) == 0)
        throw DomainError("division by zero in Q");
    return Elem(1) / a;
}

std::string Rationals::format(const Elem& a) const { return format_rational(a); }

Rationals::Elem Rationals::parse(std::string_view text) const { return parse_rational(text); }

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (!is_prime(p))
        throw InputError("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31))
        throw InputError("modulus " + std::to_string(p) + " too large (need p < 2^31)");
}

PrimeField::Elem PrimeField::from_int(long v) const
{
    long r = v % static_cast<long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const
{
    mpz_class n = q.get_num() % p_;
    mpz_class d = q.get_den() % p_;
    if (n < 0)
        n += p_;
    if (d == 0)
        throw DomainError("denominator of " + format_rational(q) + " vanishes mod " + std::to_string(p_));
    return mul(static_cast<Elem>(n.get_ui()), inv(static_cast<Elem>(d.get_ui())));
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a == 0)
        throw DomainError("division by zero in Fp");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

PrimeField::Elem PrimeField::parse(std::string_view text) const
{
    return from_rational(parse_rational(text));
}

}  // namespace shc
