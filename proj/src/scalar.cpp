#include "quadcoh/scalar.hpp"

namespace quadcoh {

std::string to_string(const Scalar& s) {
    if (s.is_real()) return s.re.get_str();
    return s.re.get_str() + "+" + s.im.get_str() + " i";
}

static mpq_class parse_rat(std::string t) {
    // trim blanks; mpq_class(str) throws std::invalid_argument on junk
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    if (a == std::string::npos) throw IoError("empty rational literal");
    t = t.substr(a, b - a + 1);
    mpq_class q;
    try {
        q = mpq_class(t);
    } catch (const std::invalid_argument&) {
        throw IoError("bad rational literal '" + t + "'");
    }
    if (q.get_den() == 0) throw IoError("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

Scalar parse_scalar(const std::string& text) {
    std::string t = text;
    size_t ipos = t.find('i');
    if (ipos == std::string::npos) return Scalar(parse_rat(t));
    t = t.substr(0, ipos);
    size_t plus = t.find('+');
    if (plus == std::string::npos) return Scalar(mpq_class(0), parse_rat(t));
    return Scalar(parse_rat(t.substr(0, plus)), parse_rat(t.substr(plus + 1)));
}

} // namespace quadcoh
