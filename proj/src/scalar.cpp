#include "crq/scalar.hpp"

#include "crq/error.hpp"

#include <sstream>

namespace crq {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::MissingAssignment: return "MissingAssignment";
        case ErrorKind::NotPolynomialDeg2: return "NotPolynomialDeg2";
        case ErrorKind::NeedMoreSamples: return "NeedMoreSamples";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidTwist: return "InvalidTwist";
        case ErrorKind::InvalidForm: return "InvalidForm";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::NotInGLQ: return "NotInGLQ";
        case ErrorKind::InvalidGrading: return "InvalidGrading";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QSqrt2 QSqrt2::inverse() const {
    Rational n = a_ * a_ - 2 * b_ * b_;
    if (sgn(n) == 0) throw Error(ErrorKind::NotInvertible, "division by zero in Q(sqrt2)");
    return QSqrt2(a_ / n, -b_ / n);
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) {
    if (is_zero(x.sqrt2_part())) return os << x.rational_part().get_str();
    return os << '(' << x.rational_part().get_str() << " + " << x.sqrt2_part().get_str() << "*sqrt2)";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    if (x.is_real()) return os << x.re.get_str();
    return os << '(' << x.re.get_str() << (sgn(x.im) < 0 ? " - " : " + ") << Rational(abs(x.im)).get_str() << "i)";
}

std::ostream& operator<<(std::ostream& os, const Scalar2& x) {
    if (is_zero(x.im)) return os << x.re;
    return os << '(' << x.re << " + " << x.im << "i)";
}

std::string to_string(const Scalar& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Rational RationalSampler::rational(int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(engine_), den(engine_));
    q.canonicalize();
    return q;
}

Rational RationalSampler::nonzero_rational(int max_num, int max_den) {
    for (;;) {
        Rational q = rational(max_num, max_den);
        if (sgn(q) != 0) return q;
    }
}

Scalar RationalSampler::scalar(int max_num, int max_den) {
    Rational re = rational(max_num, max_den);
    Rational im = rational(max_num, max_den);
    return Scalar(re, im);
}

}  // namespace crq
