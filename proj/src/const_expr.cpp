#include "dyson2d/const_expr.hpp"

#include <sstream>

namespace dyson2d {

ConstExpr ConstExpr::rational(const Rational& q) {
    ConstExpr e;
    e.one_ = q;
    return e;
}

ConstExpr ConstExpr::rational(long num, long den) { return rational(make_rational(num, den)); }

ConstExpr ConstExpr::of(const Rational& q1, const Rational& qg, const Rational& ql2) {
    ConstExpr e;
    e.one_ = q1;
    e.gamma_ = qg;
    e.ln2_ = ql2;
    return e;
}

ConstExpr ConstExpr::of(const Rational& q1, const Rational& qg, const Rational& ql2,
                        const Rational& qln, unsigned n_ref) {
    if (sgn(qln) != 0 && n_ref == 0)
        throw std::invalid_argument("ConstExpr: ln N coefficient requires n_ref >= 1");
    ConstExpr e;
    e.one_ = q1;
    e.gamma_ = qg;
    e.ln2_ = ql2;
    e.ln_n_ = qln;
    e.n_ref_ = n_ref;
    e.normalize();
    return e;
}

void ConstExpr::normalize() {
    if (sgn(ln_n_) == 0) n_ref_ = 0;
}

bool ConstExpr::is_zero() const {
    return sgn(one_) == 0 && sgn(gamma_) == 0 && sgn(ln2_) == 0 && sgn(ln_n_) == 0;
}

ConstExpr ConstExpr::operator-() const {
    ConstExpr e(*this);
    e.one_ = -e.one_;
    e.gamma_ = -e.gamma_;
    e.ln2_ = -e.ln2_;
    e.ln_n_ = -e.ln_n_;
    return e;
}

ConstExpr ConstExpr::operator+(const ConstExpr& o) const {
    ConstExpr e(*this);
    e += o;
    return e;
}

ConstExpr ConstExpr::operator-(const ConstExpr& o) const { return *this + (-o); }

ConstExpr& ConstExpr::operator+=(const ConstExpr& o) {
    if (has_ln_n() && o.has_ln_n() && n_ref_ != o.n_ref_)
        throw std::invalid_argument("ConstExpr: cannot combine ln N terms with different n_ref");
    one_ += o.one_;
    gamma_ += o.gamma_;
    ln2_ += o.ln2_;
    ln_n_ += o.ln_n_;
    if (!has_ln_n())
        n_ref_ = 0;
    else if (o.n_ref_ != 0)
        n_ref_ = o.n_ref_;
    normalize();
    return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& o) { return *this += (-o); }

ConstExpr ConstExpr::operator*(const Rational& s) const {
    ConstExpr e(*this);
    e.one_ *= s;
    e.gamma_ *= s;
    e.ln2_ *= s;
    e.ln_n_ *= s;
    e.normalize();
    return e;
}

bool ConstExpr::operator==(const ConstExpr& o) const {
    return one_ == o.one_ && gamma_ == o.gamma_ && ln2_ == o.ln2_ && ln_n_ == o.ln_n_ &&
           n_ref_ == o.n_ref_;
}

Real ConstExpr::eval(unsigned digits) const {
    Real r = Real::of_rational(one_, digits);
    if (sgn(gamma_) != 0) r += Real::of_rational(gamma_, digits) * Real::euler_gamma(digits);
    if (sgn(ln2_) != 0) r += Real::of_rational(ln2_, digits) * Real::ln2(digits);
    if (sgn(ln_n_) != 0) r += Real::of_rational(ln_n_, digits) * Real::ln_uint(n_ref_, digits);
    return r;
}

std::string ConstExpr::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& base) {
        if (sgn(c) == 0) return;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        if (base.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << base;
        } else {
            os << to_string(a) << "*" << base;
        }
        first = false;
    };
    emit(one_, "");
    emit(gamma_, "gamma");
    emit(ln2_, "ln2");
    emit(ln_n_, "ln(" + std::to_string(n_ref_) + ")");
    if (first) return "0";
    return os.str();
}

ConstExpr digamma_int(unsigned long n) {
    if (n == 0) throw std::invalid_argument("digamma_int: n must be >= 1");
    Rational h = (n == 1) ? Rational(0) : harmonic(n - 1);
    return ConstExpr::of(h, make_rational(-1), Rational(0));
}

Real eval_const(const ConstExpr& e, unsigned digits) { return e.eval(digits); }

}  // namespace dyson2d
