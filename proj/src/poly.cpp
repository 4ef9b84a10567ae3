#include "knotqm/poly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace knotqm {

NumericParams NumericParams::from_k(double k) {
    NumericParams p;
    p.k = k;
    p.theta = std::numbers::pi / (2.0 * (k + 2.0));
    p.A_value = std::polar(1.0, p.theta);
    p.d_value = -2.0 * std::cos(std::numbers::pi / (k + 2.0));
    return p;
}

NumericParams NumericParams::from_theta(double theta) {
    // invert theta = pi / (2(k+2))
    return from_k(std::numbers::pi / (2.0 * theta) - 2.0);
}

void LaurentPoly::set(long e, Int c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

LaurentPoly LaurentPoly::monomial(long exp, Int coeff) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::loop_value() {
    LaurentPoly p;
    p.set(2, Int(-1));
    p.set(-2, Int(-1));
    return p;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
            }
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(long n) const {
    if (n < 0) throw std::domain_error("negative power of a polynomial");
    LaurentPoly r(1), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    // Shift both to min exponent 0; an exact Laurent quotient then has
    // min exponent 0 too, so ordinary long division applies.
    const long shift = min_exp() - divisor.min_exp();
    LaurentPoly rem = shifted(-min_exp());
    const LaurentPoly div = divisor.shifted(-divisor.min_exp());
    const long dtop = div.max_exp();
    const Int& dlead = div.terms_.rbegin()->second;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= dtop) {
        long rtop = rem.max_exp();
        const Int& rlead = rem.terms_.rbegin()->second;
        if (!mpz_divisible_p(rlead.get_mpz_t(), dlead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        LaurentPoly t = monomial(rtop - dtop, rlead / dlead);
        quot += t;
        rem -= t * div;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot.shifted(shift);
}

std::complex<double> LaurentPoly::eval(const NumericParams& p) const {
    // A is a unit phase, so A^e = exp(i e theta): no overflow regardless of e
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_)
        acc += c.get_d() * std::polar(1.0, p.theta * static_cast<double>(e));
    return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print descending by exponent
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || e == 0) os << abs_c.get_str();
        if (e != 0) {
            if (abs_c != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)  // std::map iterates ascending
        terms.push_back(nlohmann::json::array({e, c.get_str()}));
    return {{"variable", "A"}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (j.value("variable", "A") != std::string("A"))
        throw std::invalid_argument("unsupported polynomial variable");
    LaurentPoly p;
    for (const auto& t : j.at("terms")) {
        long e = t.at(0).get<long>();
        Int c(t.at(1).get<std::string>());
        if (c == 0) throw std::invalid_argument("zero coefficient in canonical form");
        if (p.terms_.count(e)) throw std::invalid_argument("duplicate exponent");
        p.terms_[e] = c;
    }
    return p;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly substitute_mirror(const LaurentPoly& p) { return p.mirror(); }
std::complex<double> eval_at(const LaurentPoly& p, const NumericParams& params) {
    return p.eval(params);
}

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// normalize to min_exp 0, positive leading coefficient, content 1
LaurentPoly primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.min_exp());
    Int g = content(q);
    if (q.terms().rbegin()->second < 0) g = -g;
    LaurentPoly r;
    for (const auto& [e, c] : q.terms()) r += LaurentPoly::monomial(e, c / g);
    return r;
}

// pseudo-remainder of a by b (both with min_exp 0, b nonzero)
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const long db = b.max_exp();
    const Int blead = b.terms().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= db) {
        const long da = a.max_exp();
        const Int alead = a.terms().rbegin()->second;
        // a <- blead * a - alead * x^(da-db) * b   (kills the top term)
        a = a * LaurentPoly(blead) - b.shifted(da - db) * LaurentPoly(alead);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = primitive(a), y = primitive(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    while (!y.is_zero()) {
        LaurentPoly r = primitive(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return x;
}

RationalFunc::RationalFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!(g == LaurentPoly(1))) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // remove common integer content
    Int cg;
    mpz_gcd(cg.get_mpz_t(), content(num_).get_mpz_t(), content(den_).get_mpz_t());
    if (cg > 1) {
        LaurentPoly c(cg);
        num_ = num_.divide_exact(c);
        den_ = den_.divide_exact(c);
    }
    // strip common monomial: shift both so the denominator starts at exponent 0
    long shift = den_.min_exp();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunc(num_ * o.den_, den_ * o.num_);
}

bool RationalFunc::operator==(const RationalFunc& o) const {
    // cross-multiplied comparison is convention-free
    return num_ * o.den_ == o.num_ * den_;
}

bool RationalFunc::operator<(const RationalFunc& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

std::complex<double> RationalFunc::eval(const NumericParams& p) const {
    return num_.eval(p) / den_.eval(p);
}

std::string RationalFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunc rational_normalize(const RationalFunc& r) {
    return RationalFunc(r.num(), r.den());  // constructor normalizes
}

LaurentPoly delta_poly(int n) {
    if (n < -1) throw std::domain_error("delta_poly index < -1");
    LaurentPoly prev;        // D_{-1} = 0
    LaurentPoly cur(1);      // D_0 = 1
    const LaurentPoly d = LaurentPoly::loop_value();
    for (int i = 0; i < n; ++i) {
        LaurentPoly next = d * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == -1 ? prev : cur;
}

std::string jones_q_string(const LaurentPoly& jones_in_A) {
    bool all_div4 = true;
    for (const auto& [e, c] : jones_in_A.terms())
        if (e % 4 != 0) { all_div4 = false; break; }
    if (jones_in_A.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // A^e -> q^(-e/4); print ascending in q exponent = descending in e
    for (auto it = jones_in_A.terms().rbegin(); it != jones_in_A.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs_c == 1);
        if (!unit || e == 0) os << abs_c.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (all_div4) {
                long qe = -e / 4;
                if (qe != 1) os << "^" << qe;
            } else {
                os << "^(" << -e << "/4)";
            }
        }
    }
    return os.str();
}

}  // namespace knotqm
