#pragma once

/**
 * @file series.hpp
 * @brief Exact rational generating functions and the counting identities
 *        relating a class to its indecomposables and centrosymmetric members.
 *
 * All generating-function arithmetic is exact (arbitrary precision integers
 * and rationals). Floating point appears only in root finding and in the
 * growth diagnostics, which report values, never limits.
 */

#include "centro/enumerate.hpp"
#include "centro/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace centro {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense integer polynomial, ascending coefficients, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }
    static Polynomial constant(BigInt v) { return Polynomial(std::vector<BigInt>{std::move(v)}); }
    static Polynomial monomial(std::size_t deg, BigInt coeff = 1) {
        std::vector<BigInt> c(deg + 1);
        c[deg] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<BigInt> out(a.c_);
        for (auto& v : out) v = -v;
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const BigInt& s, const Polynomial& a) { return constant(s) * a; }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return g;
    }

    Polynomial divided_by_scalar(const BigInt& s) const {
        std::vector<BigInt> out(c_);
        for (auto& v : out) {
            if (v % s != 0) throw DomainError("inexact scalar division");
            v /= s;
        }
        return Polynomial(std::move(out));
    }

    // Content removed, leading coefficient positive.
    Polynomial primitive_part() const {
        if (is_zero()) return {};
        Polynomial p = divided_by_scalar(content());
        return p.leading() < 0 ? -p : p;
    }

    Polynomial derivative() const {
        std::vector<BigInt> out;
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * i);
        return Polynomial(std::move(out));
    }

    long double eval(long double x) const {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
        return acc;
    }

    // Ascending, e.g. "1-3x+2x^2-x^3".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const BigInt& v = c_[i];
            if (v == 0) continue;
            const BigInt mag = abs(v);
            if (!out.empty()) out += v < 0 ? "-" : "+";
            else if (v < 0) out += "-";
            if (i == 0 || mag != 1) out += mag.str();
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

namespace detail {

// Pseudo-remainder of a by b (b nonzero).
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        const BigInt la = a.leading();
        a = lb * a - Polynomial::monomial(shift, la) * b;
    }
    return a;
}

// Exact quotient a / b over the integers; throws if b does not divide a.
inline Polynomial exact_quotient(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    std::vector<BigInt> q(static_cast<std::size_t>(std::max<long>(0, a.degree() - b.degree() + 1)));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        if (a.leading() % b.leading() != 0) throw DomainError("inexact polynomial division");
        const BigInt t = a.leading() / b.leading();
        q[shift] = t;
        a = a - Polynomial::monomial(shift, t) * b;
    }
    if (!a.is_zero()) throw DomainError("inexact polynomial division");
    return Polynomial(std::move(q));
}

}  // namespace detail

// Primitive gcd over Z[x] (positive leading coefficient).
inline Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        Polynomial r = detail::pseudo_remainder(a, b);
        a = b;
        b = r.primitive_part();
    }
    return a;
}

inline std::size_t descartes_sign_changes(const Polynomial& p) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& v : p.coeffs()) {
        if (v == 0) continue;
        const int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Exact truncated power series with rational coefficients.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {}

    // Number of known coefficients (terms x^0 .. x^{order-1}).
    std::size_t order() const noexcept { return c_.size(); }
    const BigRational& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<BigRational>& coeffs() const noexcept { return c_; }

    // Integer coefficients; throws if a coefficient is fractional.
    std::vector<BigInt> integers() const {
        std::vector<BigInt> out;
        for (const auto& q : c_) {
            if (denominator(q) != 1) throw DomainError("series coefficient " + q.str() + " is not an integer");
            out.push_back(numerator(q));
        }
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<BigRational> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a.c_[i] + b.c_[i];
        return Series(std::move(out));
    }
    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<BigRational> out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) out[i] += a.c_[j] * b.c_[i - j];
        return Series(std::move(out));
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BigRational> c_;
};

// num/den in lowest terms: gcd(num, den) = 1 over Q, no common integer
// content, den(0) > 0.
class RationalGF {
public:
    RationalGF() : num_(), den_{1} {}
    RationalGF(Polynomial num) : num_(std::move(num)), den_{1} {}
    RationalGF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    BigRational constant_term() const { return BigRational(num_.coeff(0), den_.coeff(0)); }

    friend bool operator==(const RationalGF&, const RationalGF&) = default;

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalGF operator/(const RationalGF& a, const RationalGF& b) {
        if (b.num_.is_zero()) throw DomainError("division by the zero series");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    std::string to_string() const {
        if (den_ == Polynomial{1}) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial{1};
            return;
        }
        const Polynomial g = polynomial_gcd(num_, den_);
        num_ = detail::exact_quotient(num_, g);
        den_ = detail::exact_quotient(den_, g);
        const BigInt cn = num_.content(), cd = den_.content();
        const BigInt common = boost::multiprecision::gcd(cn, cd);
        num_ = num_.divided_by_scalar(common);
        den_ = den_.divided_by_scalar(common);
        if (den_.coeff(0) == 0) throw DomainError("denominator vanishes at 0: not a power series");
        if (den_.coeff(0) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

// First `terms` Taylor coefficients, by the recurrence den * f = num.
inline Series expand(const RationalGF& gf, std::size_t terms) {
    if (terms == 0) throw DomainError("expand needs at least one term");
    const auto& den = gf.den().coeffs();
    const BigRational d0 = den[0];
    std::vector<BigRational> f(terms);
    for (std::size_t n = 0; n < terms; ++n) {
        BigRational acc = gf.num().coeff(n);
        for (std::size_t k = 1; k < den.size() && k <= n; ++k) acc -= BigRational(den[k]) * f[n - k];
        f[n] = acc / d0;
    }
    return Series(std::move(f));
}

// A = 1 / (1 - C) for C counting indecomposables (no constant term).
inline RationalGF sum_closure_gf(const RationalGF& c) {
    if (c.constant_term() != 0) throw DomainError("indecomposable generating function must have zero constant term");
    return {c.den(), c.den() - c.num()};
}

// B = (1 + D) A.
inline RationalGF rc_gf(const RationalGF& d, const RationalGF& a) {
    if (d.constant_term() != 0) throw DomainError("D(x) must have zero constant term");
    return (RationalGF(Polynomial{1}) + d) * a;
}

inline RationalGF gf_from_eventually_periodic(const std::vector<long long>& head, const std::vector<long long>& period) {
    if (period.empty()) throw DomainError("period must be nonempty");
    std::vector<BigInt> h(head.begin(), head.end()), per(period.begin(), period.end());
    const Polynomial H(h), P(per);
    const Polynomial one_minus = Polynomial{1} - Polynomial::monomial(period.size());
    return {H * one_minus + Polynomial::monomial(head.size()) * P, one_minus};
}

// ---------------------------------------------------------------------------
// Text form: expressions in x over the integers with + - * / ^ and
// parentheses, e.g. "(1-x)^2/(1-3x+2x^2-x^3)".

namespace detail {

class GfParser {
public:
    explicit GfParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }

    RationalGF parse() {
        if (src_.empty()) fail("empty expression");
        RationalGF r = expr();
        if (pos_ != src_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("generating function: " + what + " at '" + src_.substr(std::min(pos_, src_.size())) + "'");
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    RationalGF expr() {
        RationalGF acc = term();
        while (peek() == '+' || peek() == '-') {
            const char op = src_[pos_++];
            RationalGF rhs = term();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RationalGF term() {
        RationalGF acc = factor();
        while (true) {
            const char ch = peek();
            if (ch == '*' || ch == '/') {
                ++pos_;
                RationalGF rhs = factor();
                acc = ch == '*' ? acc * rhs : acc / rhs;
            } else if (ch == 'x' || ch == '(') {
                acc = acc * factor();  // implicit product, e.g. 3x or 2(1-x)
            } else {
                return acc;
            }
        }
    }

    RationalGF factor() {
        if (peek() == '-') {
            ++pos_;
            return RationalGF(Polynomial{}) - factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        RationalGF base = primary();
        if (peek() == '^') {
            ++pos_;
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const unsigned e = static_cast<unsigned>(std::stoul(src_.substr(start, pos_ - start)));
            RationalGF out(Polynomial{1});
            for (unsigned i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    RationalGF primary() {
        const char ch = peek();
        if (ch == 'x') {
            ++pos_;
            return RationalGF(Polynomial{0, 1});
        }
        if (ch == '(') {
            ++pos_;
            RationalGF inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return RationalGF(Polynomial::constant(BigInt(src_.substr(start, pos_ - start))));
        }
        fail("unexpected token");
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalGF parse_gf(std::string_view text) { return detail::GfParser(text).parse(); }

inline Polynomial parse_polynomial(std::string_view text) {
    const RationalGF r = parse_gf(text);
    if (!(r.den() == Polynomial{1})) throw FormatError("'" + std::string(text) + "' is not a polynomial");
    return r.num();
}

// ---------------------------------------------------------------------------
// Roots

namespace detail {

inline long double bisect(const Polynomial& p, long double lo, long double hi) {
    long double flo = p.eval(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15L * std::max(1.0L, hi); ++it) {
        const long double mid = (lo + hi) / 2;
        const long double fm = p.eval(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

// Cauchy bound: every root has modulus below this.
inline long double cauchy_bound(const Polynomial& p) {
    long double m = 0;
    const long double lead = abs(p.leading()).convert_to<long double>();
    for (long i = 0; i < p.degree(); ++i)
        m = std::max(m, abs(p.coeff(static_cast<std::size_t>(i))).convert_to<long double>() / lead);
    return 1 + m;
}

}  // namespace detail

namespace detail {

inline Polynomial square_free(const Polynomial& p) {
    return exact_quotient(p.primitive_part(), polynomial_gcd(p, p.derivative()));
}

inline int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Negated pseudo-remainders scaled by positive factors only, so signs match
// the classical Sturm chain.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Polynomial a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        const BigInt lb = b.leading();
        const BigInt mult = abs(lb);
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            a = mult * a - Polynomial::monomial(shift, a.leading() * sign(lb)) * b;
        }
        if (a.is_zero()) break;
        Polynomial r = -a;
        chain.push_back(r.divided_by_scalar(r.content()));
    }
    return chain;
}

inline std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

// Number of distinct roots in (0, infinity), exactly.
inline std::size_t count_positive_roots(const Polynomial& poly) {
    if (poly.degree() < 1) return 0;
    std::size_t low = 0;
    while (poly.coeff(low) == 0) ++low;
    const Polynomial p(std::vector<BigInt>(poly.coeffs().begin() + static_cast<std::ptrdiff_t>(low), poly.coeffs().end()));
    if (p.degree() < 1) return 0;
    const auto chain = detail::sturm_chain(detail::square_free(p));
    std::vector<int> at_zero, at_inf;
    for (const auto& q : chain) {
        at_zero.push_back(detail::sign(q.coeff(0)));
        at_inf.push_back(detail::sign(q.leading()));
    }
    return detail::sign_variations(at_zero) - detail::sign_variations(at_inf);
}

// The unique positive root of p. One coefficient sign change certifies it
// directly; otherwise an exact Sturm count must find exactly one.
inline long double positive_root(const Polynomial& p) {
    const std::size_t changes = descartes_sign_changes(p);
    if (changes != 1) {
        const std::size_t roots = changes == 0 ? 0 : count_positive_roots(p);
        if (roots != 1)
            throw DomainError("polynomial " + p.to_string() + " has " + std::to_string(roots) +
                              " positive roots; exactly one is required");
    }
    std::size_t low = 0;
    while (p.coeff(low) == 0) ++low;
    const Polynomial q = detail::square_free(
        Polynomial(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low), p.coeffs().end())));
    return detail::bisect(q, 0, detail::cauchy_bound(q));
}

// Smallest positive real root by sign-change scan on a geometric grid
// followed by bisection, applied to the square-free part so that repeated
// roots still change sign.
inline std::optional<long double> smallest_positive_root(const Polynomial& poly) {
    if (poly.degree() < 1) return std::nullopt;
    const Polynomial p = detail::square_free(poly);
    std::size_t low_idx = 0;
    while (p.coeff(low_idx) == 0) ++low_idx;
    // Strip the root at 0.
    std::vector<BigInt> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low_idx), p.coeffs().end());
    const Polynomial q(c);
    if (q.degree() < 1) return std::nullopt;
    const long double upper = detail::cauchy_bound(q);
    const Polynomial reversed(std::vector<BigInt>(q.coeffs().rbegin(), q.coeffs().rend()));
    const long double lower = 1 / detail::cauchy_bound(reversed);
    constexpr int steps = 20000;
    const long double ratio = std::pow(upper / lower, 1.0L / steps);
    long double x = lower;
    long double fx = q.eval(x);
    for (int i = 0; i < steps; ++i) {
        const long double nx = i + 1 == steps ? upper : x * ratio;
        const long double fn = q.eval(nx);
        if (fx == 0) return x;
        if ((fn < 0) != (fx < 0)) return detail::bisect(q, x, nx);
        x = nx;
        fx = fn;
    }
    return std::nullopt;
}

struct GrowthRate {
    enum class Kind { exponential, subexponential };
    Kind kind = Kind::subexponential;
    long double value = 0;                   // 1/r when exponential
    std::optional<long double> dominant_root;  // r
};

// Growth rate of the coefficients of a rational generating function from the
// smallest positive root of its denominator.
inline GrowthRate growth_rate_rational(const RationalGF& gf) {
    GrowthRate g;
    if (gf.den().degree() < 1) return g;  // polynomial: finitely many nonzero terms
    const auto r = smallest_positive_root(gf.den());
    if (!r || *r > 1 + 1e-12L) return g;
    g.kind = GrowthRate::Kind::exponential;
    g.dominant_root = *r;
    g.value = 1 / *r;
    return g;
}

// ---------------------------------------------------------------------------
// Count identities

struct IdentityReport {
    bool holds = true;
    std::size_t checked_to = 0;
    std::optional<std::size_t> first_failure;
};

// b_n = a_n + sum_{k=1}^n a_{n-k} d_k for n <= max_n.
inline IdentityReport check_convolution(const CountTable& t) {
    IdentityReport rep;
    rep.checked_to = t.max_n;
    for (std::size_t n = 0; n <= t.max_n; ++n) {
        BigInt rhs = t.a[n];
        for (std::size_t k = 1; k <= n; ++k) rhs += BigInt(t.a[n - k]) * t.d[k];
        if (rhs != t.b_even[n]) {
            rep.holds = false;
            rep.first_failure = n;
            break;
        }
    }
    return rep;
}

// A (1 - C) = 1, i.e. a_n = sum_{k=1}^n c_k a_{n-k} for n >= 1 and a_0 = 1.
inline IdentityReport check_sum_closure_identity(const CountTable& t) {
    IdentityReport rep;
    rep.checked_to = t.a.size() - 1;
    for (std::size_t n = 0; n < t.a.size(); ++n) {
        BigInt lhs = t.a[n];
        for (std::size_t k = 1; k <= n; ++k) lhs -= BigInt(t.c[k]) * t.a[n - k];
        if (lhs != (n == 0 ? 1 : 0)) {
            rep.holds = false;
            rep.first_failure = n;
            break;
        }
    }
    return rep;
}

// |Av_m(j..1)|, memoized per j across calls.
inline std::uint64_t monotone_avoiders(std::size_t j, std::size_t m) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<ClassEnumerator>> cache;
    std::shared_ptr<ClassEnumerator> en;
    {
        std::lock_guard lock(mutex);
        auto& slot = cache[j];
        if (!slot) slot = std::make_shared<ClassEnumerator>(ClassSpec::avoid({Permutation::decreasing(j)}));
        en = slot;
    }
    return en->level(m).size();
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// |C^rc_{2n}| for C = Av(k..1) by the formula
//   sum_i C(n,i)^2 a_i^{ceil((k+1)/2)} a_{n-i}^{floor((k+1)/2)},
// with a_m^j = |Av_m(j..1)| taken from the enumerator.
inline BigInt monotone_centro_count(std::size_t k, std::size_t n) {
    if (k < 1) throw DomainError("pattern length must be at least 1");
    const std::size_t p = (k + 2) / 2, q = (k + 1) / 2;
    BigInt total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const BigInt b = binomial(n, i);
        total += b * b * monotone_avoiders(p, i) * monotone_avoiders(q, n - i);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Finite-prefix diagnostics

struct GrowthDiagnostics {
    std::vector<std::optional<double>> nth_roots;  // index n: a_n^{1/n} (n >= 1, a_n > 0)
    std::vector<std::optional<double>> ratios;     // index n: a_{n+1}/a_n (a_n > 0)
};

inline GrowthDiagnostics empirical_growth(const std::vector<BigInt>& seq) {
    GrowthDiagnostics g;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        if (seq[n] < 0) throw DomainError("sequence entries must be nonnegative");
        const double v = seq[n].convert_to<double>();
        g.nth_roots.push_back(n >= 1 && v > 0 ? std::optional<double>(std::pow(v, 1.0 / static_cast<double>(n)))
                                              : std::nullopt);
        if (n + 1 < seq.size())
            g.ratios.push_back(v > 0 ? std::optional<double>(seq[n + 1].convert_to<double>() / v) : std::nullopt);
    }
    return g;
}

inline GrowthDiagnostics empirical_growth(const std::vector<std::uint64_t>& seq) {
    return empirical_growth(std::vector<BigInt>(seq.begin(), seq.end()));
}

struct PvBoundReport {
    bool pass = false;
    std::string envelope;            // description of the first envelope that dominates
    std::optional<std::size_t> fail_at;  // 1-based n of the furthest-reaching violation
};

// c[0] is c_1. Envelopes: (1,1,3,5,5,5,4,4,...) and (1,1,2,3,4^f,5,4,4,...)
// with f even, plus the all-4 tail (1,1,2,3,4,4,...).
inline PvBoundReport pv_bound_check(const std::vector<std::uint64_t>& c) {
    struct Env {
        std::string name;
        std::vector<std::uint64_t> head;
    };
    std::vector<Env> envs;
    envs.push_back({"(1,1,3,5,5,5,4^inf)", {1, 1, 3, 5, 5, 5}});
    envs.push_back({"(1,1,2,3,4^inf)", {1, 1, 2, 3}});
    for (std::size_t f = 0; f + 5 <= c.size(); f += 2) {
        std::vector<std::uint64_t> h{1, 1, 2, 3};
        h.insert(h.end(), f, 4);
        h.push_back(5);
        envs.push_back({"(1,1,2,3,4^" + std::to_string(f) + ",5,4^inf)", h});
    }

    PvBoundReport rep;
    std::size_t furthest = 0;
    for (const auto& env : envs) {
        std::optional<std::size_t> bad;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::uint64_t cap = i < env.head.size() ? env.head[i] : 4;
            if (c[i] > cap) {
                bad = i + 1;
                break;
            }
        }
        if (!bad) {
            rep.pass = true;
            rep.envelope = env.name;
            rep.fail_at.reset();
            return rep;
        }
        furthest = std::max(furthest, *bad);
    }
    rep.fail_at = furthest;
    return rep;
}

}  // namespace centro
