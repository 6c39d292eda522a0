#include "dioforge/rat.hpp"

#include <cctype>
#include <ostream>

namespace dioforge {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Signed decimal integer, optional leading '+'/'-'.
Int parse_int(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) raise(Errc::parse_error, "not an integer: '" + std::string(s) + "'");
    Int v(std::string(s), 10);
    return negative ? Int(-v) : v;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        raise(Errc::parse_error, "bad denominator: '" + std::string(text) + "'");
    Int den(std::string(den_part), 10);
    return Rat(num, den);
}

std::string Rat::str() const {
    std::string s = num().get_str();
    if (den() != 1) s += "/" + den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& r, unsigned long e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), e);
    return Rat(n, d);
}

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) raise(Errc::negative_radicand, "int_sqrt_exact(" + n.get_str() + ")");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<SquareCertificate> is_rational_square(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    auto rn = int_sqrt_exact(x.num());
    if (!rn) return std::nullopt;
    auto rd = int_sqrt_exact(x.den());
    if (!rd) return std::nullopt;
    // num and den are coprime, so their roots are coprime: already canonical.
    return SquareCertificate{x, Rat(*rn, *rd)};
}

} // namespace dioforge
