#include "wmha/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace wmha {

namespace {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));

    // Imaginary part present: split at the last sign that is not the leading one.
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_of = [](const std::string& t) -> Rational {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };
    if (split == std::string::npos) return {Rational(0), imag_of(s)};
    return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    Rational norm = re_ * re_ + im_ * im_;
    return {Rational(re_ / norm), Rational(-im_ / norm)};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (im_ == 1) {
        out += out.empty() ? "i" : "+i";
    } else if (im_ == -1) {
        out += "-i";
    } else {
        std::string m = im_.get_str();
        if (!out.empty() && m.front() != '-') out += "+";
        out += m + "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace wmha
