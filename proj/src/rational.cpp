#include "rtt/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rtt {

std::string to_string(const Rational& q) {
    return q.get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational out;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("bad rational: " + std::string(text));
        mpz_class n{std::string(num)}, d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        out = Rational(n, d);
    } else if (dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw std::invalid_argument("bad decimal: " + std::string(text));
        mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac));
        mpz_class d = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
        out = Rational(n, d);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("bad rational: " + std::string(text));
        out = Rational(mpz_class(std::string(body)));
    }
    out.canonicalize();
    if (negative) out = -out;
    return out;
}

Rational rationalize(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize non-finite value");
    bool negative = x < 0;
    double v = std::fabs(x);
    // convergents h/k
    long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double rest = v;
    long double best_h = std::floor(v), best_k = 1;
    for (int it = 0; it < 64; ++it) {
        long double a = std::floor(rest);
        long double h2 = a * h1 + h0;
        long double k2 = a * k1 + k0;
        if (k2 > static_cast<long double>(max_den)) {
            // best semiconvergent that still fits
            long double t = std::floor((static_cast<long double>(max_den) - k0) / k1);
            long double hs = t * h1 + h0, ks = t * k1 + k0;
            if (ks > 0 && std::fabs(hs / ks - v) < std::fabs(best_h / best_k - v)) {
                best_h = hs;
                best_k = ks;
            }
            break;
        }
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        best_h = h1;
        best_k = k1;
        long double frac = rest - a;
        if (frac < 1e-15L) break;
        rest = 1.0L / frac;
        if (std::fabs(best_h / best_k - v) == 0.0L) break;
    }
    mpz_class num, den;
    num.set_str(std::to_string(static_cast<unsigned long long>(best_h)), 10);
    den.set_str(std::to_string(static_cast<unsigned long long>(best_k)), 10);
    Rational out(num, den);
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

std::int64_t floor_to_int(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

std::int64_t ceil_to_int(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

}  // namespace rtt
